"""
The group algebra k[Z/n] as a Hopf G-coalgebra that is constant over a
finite cyclic grading group: every H_a is k[Z/n] with x^i grouplike.
"""

from __future__ import annotations

from .hopf_core import FiniteGroup, GradedAlgebraData, HopfGFamily
from .linalg import Matrix, Vec
from .scalar import CycNumber


class GroupAlgebraFamily(HopfGFamily):
    """k[Z/n] in every grade of Z/m; the pivot is x^pivot_power (central and grouplike)"""

    def __init__(self, n: int = 2, grading_order: int = 1, pivot_power: int = 0, N: int = 1):
        if n < 1 or grading_order < 1:
            raise ValueError("orders must be positive")
        group = FiniteGroup.cyclic(grading_order)
        super().__init__(group, range(grading_order), N)
        self.n = n
        self.pivot_power = pivot_power % n
        self.name = f"k[Z/{n}]" + (f" over Z/{grading_order}" if grading_order > 1 else "")

    def _one(self) -> CycNumber:
        return CycNumber.one(self.N)

    def algebra(self, a):
        n = self.n

        def build():
            one = self._one()
            mul = {(i, j): {(i + j) % n: one} for i in range(n) for j in range(n)}
            labels = tuple("e" if i == 0 else ("x" if i == 1 else f"x^{i}") for i in range(n))
            return GradedAlgebraData(a, n, labels, {0: one}, mul, self.N)

        self.require(a)
        return self.memo(("algebra", a), build)

    def coproduct(self, a, b):
        self.require(a, b)
        n = self.n
        one = self._one()
        return self.memo(("coproduct",), lambda: Matrix(n * n, n, self.N, {i: {i * n + i: one} for i in range(n)}))

    def counit(self) -> Vec:
        one = self._one()
        return {i: one for i in range(self.n)}

    def antipode(self, a):
        self.require(a)
        n = self.n
        one = self._one()
        return self.memo(("antipode",), lambda: Matrix(n, n, self.N, {i: {(-i) % n: one} for i in range(n)}))

    def pivot(self, a) -> Vec:
        self.require(a)
        return {self.pivot_power: self._one()}

    def generators(self, a):
        return [{1 % self.n: self._one()}]
