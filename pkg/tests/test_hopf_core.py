from __future__ import annotations

from fractions import Fraction

import pytest

from hopfg.errors import PivotNotInvertible, WindowIncomplete
from hopfg.group_algebra import GroupAlgebraFamily
from hopfg.hopf_core import (
    FiniteGroup,
    PatchedFamily,
    check_algebra,
    check_coalgebra,
    check_all_axioms,
    check_antipode_properties,
    check_hopf,
    check_pivot,
    counit_of,
    element_inverse,
    pivot_inverse,
    swap_matrix,
    tabulate,
)
from hopfg.linalg import Matrix
from hopfg.scalar import CycNumber
from hopfg.uqsl2 import UqSl2Family

HALF = Fraction(1, 2)


def test_cyclic_group() -> None:
    G = FiniteGroup.cyclic(4)
    assert G.mul(3, 2) == 1
    assert G.inv(1) == 3
    assert G.parse("g2") == 2
    assert G.parse("3") == 3
    with pytest.raises(ValueError):
        G.parse("h")


def test_group_algebra_satisfies_every_axiom(group3: GroupAlgebraFamily) -> None:
    reports = check_all_axioms(group3)
    assert reports
    assert all(r.passed for r in reports), [r.witnesses for r in reports if not r.passed]
    assert sum(r.checked for r in reports) > 0


def test_group_algebra_with_a_nontrivial_pivot() -> None:
    F = GroupAlgebraFamily(n=4, pivot_power=1)
    assert all(r.passed for r in check_all_axioms(F))
    assert pivot_inverse(F, 0) == {3: CycNumber.one(1)}


def test_sl2_axioms_on_the_relevant_grades(sl2: UqSl2Family) -> None:
    grades = [Fraction(0), HALF, Fraction(3, 2)]
    reports = check_all_axioms(sl2, grades)
    failed = [(r.name, r.params, r.witnesses) for r in reports if not r.passed]
    assert not failed


def test_wrong_antipode_is_caught(group3: GroupAlgebraFamily) -> None:
    n = group3.n
    broken = PatchedFamily(group3, antipodes={a: Matrix.identity(n, group3.N) for a in group3.window})
    report = check_hopf(broken, 0, 0)
    assert not report.passed
    assert report.witnesses
    assert check_algebra(broken, 0).passed


def test_wrong_pivot_is_caught(group3: GroupAlgebraFamily) -> None:
    one = CycNumber.one(group3.N)
    # 1 + x is not grouplike
    broken = PatchedFamily(group3, pivots={a: {0: one, 1: one} for a in group3.window})
    assert not check_pivot(broken, 0, 1).passed


def test_scaled_coproduct_breaks_the_antipode_axiom(group3: GroupAlgebraFamily) -> None:
    delta = group3.coproduct(0, 0).scale(2)
    broken = PatchedFamily(group3, coproducts={(0, 0): delta})
    assert not check_hopf(broken, 0, 0).passed
    # both sides of Delta S = tau (S (x) S) Delta see the same factor
    assert check_antipode_properties(broken, 0, 0).passed


def test_coassociativity_is_checked_on_every_triple() -> None:
    F = GroupAlgebraFamily(n=2, grading_order=3)
    reports = check_all_axioms(F)
    assert sum(r.name == "coalgebra" for r in reports) == 27
    # -Delta_1,1 survives every triple with abc the unit but not (1, 1, 2)
    broken = PatchedFamily(F, coproducts={(1, 1): F.coproduct(1, 1).scale(-1)})
    coalgebra = [r for r in check_all_axioms(broken) if r.name == "coalgebra"]
    assert any(not r.passed for r in coalgebra)
    assert check_coalgebra(broken, 1, 1, 1).passed
    assert not check_coalgebra(broken, 1, 1, 2).passed


def test_window_is_enforced() -> None:
    F = GroupAlgebraFamily(n=2, grading_order=2)
    with pytest.raises(WindowIncomplete):
        F.algebra(5)
    sl2 = UqSl2Family(2, HALF)
    with pytest.raises(WindowIncomplete):
        sl2.algebra(Fraction(1, 3))


def test_element_inverse(group3: GroupAlgebraFamily) -> None:
    A = group3.algebra(0)
    one = CycNumber.one(group3.N)
    assert element_inverse(A, {1: one}) == {2: one}
    # 1 + x + x^2 is a multiple of the cointegral
    with pytest.raises(PivotNotInvertible):
        element_inverse(A, {0: one, 1: one, 2: one})


def test_counit_and_swap(group3: GroupAlgebraFamily) -> None:
    one = CycNumber.one(group3.N)
    assert counit_of(group3, {0: one, 2: one * 3}) == 4
    tau = swap_matrix(2, 3, 1)
    assert (swap_matrix(3, 2, 1) @ tau).is_identity()
    assert tau.column(1) == {2: one}


def test_tabulated_copy_behaves_like_the_original(group3: GroupAlgebraFamily) -> None:
    T = tabulate(group3)
    assert T.coproduct(1, 1) == group3.coproduct(1, 1)
    assert T.antipode(1) == group3.antipode(1)
    assert all(r.passed for r in check_all_axioms(T))
    with pytest.raises(WindowIncomplete):
        T.algebra(7)
