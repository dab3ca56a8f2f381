"""
Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is stored in the power basis 1, z, ..., z^(phi(N)-1) of
Q[x]/Phi_N(x) as integer numerators over one positive common denominator.
Values are immutable. Mixing two different fields raises ModulusMismatch;
use embed() or common_field() to move into Q(zeta_lcm) first.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from .errors import DivisionByZero, ModulusMismatch

Rational = Union[int, Fraction]


# ============================================================================
# Integer polynomials (coefficient tuples, lowest degree first)
# ============================================================================

def _divide_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Divide by a monic integer polynomial, requiring a zero remainder"""
    num = list(num)
    width = len(den)
    quotient = [0] * (len(num) - width + 1)
    for i in range(len(quotient) - 1, -1, -1):
        c = num[i + width - 1]
        quotient[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: width - 1]):
        raise ArithmeticError("inexact polynomial division")
    return quotient


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Phi_n, obtained from x^n - 1 by dividing out Phi_d for each proper divisor d"""
    if n < 1:
        raise ValueError(f"cyclotomic index must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _divide_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _reduce_in_place(vec: list[int], n: int) -> list[int]:
    """Reduce an integer coefficient vector modulo Phi_n; returns the first phi(n) entries"""
    phi_poly = cyclotomic_polynomial(n)
    deg = len(phi_poly) - 1
    for k in range(len(vec) - 1, deg - 1, -1):
        c = vec[k]
        if c:
            base = k - deg
            for j in range(deg):
                if phi_poly[j]:
                    vec[base + j] -= c * phi_poly[j]
            vec[k] = 0
    return vec[:deg]


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """z^k reduced modulo Phi_n for k = 0..n-1"""
    deg = euler_phi(n)
    table = []
    current = [1] + [0] * (deg - 1)
    for _ in range(n):
        table.append(tuple(current))
        shifted = [0] + current
        current = _reduce_in_place(shifted, n)
    return tuple(table)


# Rational polynomial helpers for the extended Euclid inverse

def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    quotient = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lead
        quotient[shift] = c
        for j, bj in enumerate(b):
            a[shift + j] -= c * bj
        a.pop()
        _trim(a)
    return _trim(quotient), a


def _poly_sub_mul(s0: list[Fraction], q: list[Fraction], s1: list[Fraction]) -> list[Fraction]:
    """s0 - q*s1"""
    out = list(s0) + [Fraction(0)] * max(0, len(q) + len(s1) - 1 - len(s0))
    for i, qi in enumerate(q):
        if qi:
            for j, sj in enumerate(s1):
                out[i + j] -= qi * sj
    return _trim(out)


# ============================================================================
# CycNumber
# ============================================================================

class CycNumber:
    """Element of Q(zeta_N) in the power basis"""

    __slots__ = ("N", "_num", "_den")

    def __init__(self, N: int, coeffs: Iterable[Rational]):
        values = [Fraction(c) for c in coeffs]
        deg = euler_phi(N)
        if len(values) > deg:
            # accept longer vectors and reduce them
            den = math.lcm(*(v.denominator for v in values))
            ints = [v.numerator * (den // v.denominator) for v in values]
            num = _reduce_in_place(ints, N)
        else:
            values += [Fraction(0)] * (deg - len(values))
            den = math.lcm(*(v.denominator for v in values)) if values else 1
            num = [v.numerator * (den // v.denominator) for v in values]
        self._set(N, num, den)

    def _set(self, N: int, num: list[int], den: int) -> None:
        if den < 0:
            num = [-a for a in num]
            den = -den
        g = math.gcd(den, *num)
        if g > 1:
            num = [a // g for a in num]
            den //= g
        if not any(num):
            den = 1
        self.N = N
        self._num = tuple(num)
        self._den = den

    @classmethod
    def _raw(cls, N: int, num: list[int], den: int) -> "CycNumber":
        obj = cls.__new__(cls)
        obj._set(N, num, den)
        return obj

    # ------------------------------------------------------------------ constructors

    @classmethod
    def rational(cls, N: int, value: Rational) -> "CycNumber":
        value = Fraction(value)
        num = [0] * euler_phi(N)
        num[0] = value.numerator
        return cls._raw(N, num, value.denominator)

    @classmethod
    def zero(cls, N: int) -> "CycNumber":
        return cls._raw(N, [0] * euler_phi(N), 1)

    @classmethod
    def one(cls, N: int) -> "CycNumber":
        return cls.rational(N, 1)

    # ------------------------------------------------------------------ accessors

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self._den) for a in self._num)

    @property
    def degree(self) -> int:
        return len(self._num)

    @property
    def denominator(self) -> int:
        """Least d > 0 with d * self in Z[zeta_N]"""
        return self._den

    def is_integral(self) -> bool:
        return self._den == 1

    def is_zero(self) -> bool:
        return not any(self._num)

    def __bool__(self) -> bool:
        return any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    # ------------------------------------------------------------------ coercion

    def _coerce(self, other) -> "CycNumber":
        if isinstance(other, CycNumber):
            if other.N != self.N:
                raise ModulusMismatch(f"Q(zeta_{self.N}) and Q(zeta_{other.N}) need an explicit embed")
            return other
        if isinstance(other, (int, Fraction)):
            return CycNumber.rational(self.N, other)
        return NotImplemented

    def embed(self, M: int) -> "CycNumber":
        """Image under Q(zeta_N) -> Q(zeta_M), zeta_N -> zeta_M^(M/N)"""
        if M == self.N:
            return self
        if M % self.N:
            raise ModulusMismatch(f"cannot embed Q(zeta_{self.N}) into Q(zeta_{M})")
        step = M // self.N
        table = _power_table(M)
        out = [0] * euler_phi(M)
        for i, a in enumerate(self._num):
            if a:
                for j, t in enumerate(table[i * step]):
                    if t:
                        out[j] += a * t
        return CycNumber._raw(M, out, self._den)

    # ------------------------------------------------------------------ arithmetic

    def __add__(self, other) -> "CycNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self._den == other._den:
            return CycNumber._raw(self.N, [a + b for a, b in zip(self._num, other._num)], self._den)
        da, db = self._den, other._den
        return CycNumber._raw(self.N, [a * db + b * da for a, b in zip(self._num, other._num)], da * db)

    __radd__ = __add__

    def __neg__(self) -> "CycNumber":
        return CycNumber._raw(self.N, [-a for a in self._num], self._den)

    def __sub__(self, other) -> "CycNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "CycNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other) -> "CycNumber":
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return CycNumber._raw(self.N, [a * other.numerator for a in self._num], self._den * other.denominator)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a_num, b_num = self._num, other._num
        if not any(b_num[1:]):
            return CycNumber._raw(self.N, [a * b_num[0] for a in a_num], self._den * other._den)
        if not any(a_num[1:]):
            return CycNumber._raw(self.N, [b * a_num[0] for b in b_num], self._den * other._den)
        deg = len(a_num)
        prod = [0] * (2 * deg - 1)
        for i, a in enumerate(a_num):
            if a:
                for j, b in enumerate(b_num):
                    if b:
                        prod[i + j] += a * b
        return CycNumber._raw(self.N, _reduce_in_place(prod, self.N), self._den * other._den)

    __rmul__ = __mul__

    def inv(self) -> "CycNumber":
        """Multiplicative inverse by extended Euclid against Phi_N"""
        if self.is_zero():
            raise DivisionByZero(f"inverse of zero in Q(zeta_{self.N})")
        if self.is_rational():
            return CycNumber.rational(self.N, 1 / self.rational_value())
        r0 = [Fraction(c) for c in cyclotomic_polynomial(self.N)]
        r1 = _trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub_mul(s0, q, s1)
        # r0 is a nonzero constant because Phi_N is irreducible
        scale = 1 / r0[0]
        return CycNumber(self.N, [c * scale for c in s0])

    def __truediv__(self, other) -> "CycNumber":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other) -> "CycNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inv()

    def __pow__(self, k: int) -> "CycNumber":
        if k < 0:
            return self.inv() ** (-k)
        result = CycNumber.one(self.N)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "CycNumber":
        """Galois conjugate zeta -> zeta^-1 (complex conjugation)"""
        table = _power_table(self.N)
        out = [0] * len(self._num)
        for i, a in enumerate(self._num):
            if a:
                for j, t in enumerate(table[(-i) % self.N]):
                    if t:
                        out[j] += a * t
        return CycNumber._raw(self.N, out, self._den)

    # ------------------------------------------------------------------ comparison

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(Fraction(self._num[0], self._den))
        return hash((self.N, self._num, self._den))

    # ------------------------------------------------------------------ display / serialization

    def to_complex(self) -> complex:
        """Floating-point value, for display only"""
        return sum(
            (a / self._den) * cmath.exp(2j * cmath.pi * i / self.N)
            for i, a in enumerate(self._num)
            if a
        ) + 0j

    def decimal(self, digits: int = 6) -> str:
        z = self.to_complex()
        re = round(z.real, digits) + 0.0
        im = round(z.imag, digits) + 0.0
        if im == 0:
            return f"{re:.{digits}f}"
        sign = "+" if im >= 0 else "-"
        return f"{re:.{digits}f}{sign}{abs(im):.{digits}f}i"

    def to_json(self) -> dict:
        return {"N": self.N, "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "CycNumber":
        return cls(int(data["N"]), [Fraction(int(n), int(d)) for n, d in data["coeffs"]])

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                power = "z" if i == 1 else f"z^{i}"
                if c == 1:
                    terms.append(power)
                elif c == -1:
                    terms.append(f"-{power}")
                else:
                    terms.append(f"{c}*{power}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"CycNumber({self.N}, {self})"


# ============================================================================
# Roots of unity and quantum numbers
# ============================================================================

def make_root_of_unity(N: int, k: int) -> CycNumber:
    """zeta_N^k reduced modulo Phi_N"""
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    return CycNumber._raw(N, list(_power_table(N)[k % N]), 1)


def embed(a: CycNumber, M: int) -> CycNumber:
    return a.embed(M)


def common_field(a: CycNumber, b: CycNumber) -> tuple[CycNumber, CycNumber]:
    M = math.lcm(a.N, b.N)
    return a.embed(M), b.embed(M)


@dataclass(frozen=True)
class QPower:
    """q^x with q = exp(i*pi/r), living in Q(zeta_{2 r s}), s the denominator of x"""

    r: int
    exponent: Fraction

    def __post_init__(self):
        object.__setattr__(self, "exponent", Fraction(self.exponent))

    @property
    def modulus(self) -> int:
        return 2 * self.r * self.exponent.denominator

    @property
    def value(self) -> CycNumber:
        return make_root_of_unity(self.modulus, self.exponent.numerator)

    def in_field(self, N: int) -> CycNumber:
        return self.value.embed(N)

    def __mul__(self, other: "QPower") -> "QPower":
        if other.r != self.r:
            raise ModulusMismatch(f"q-powers for r={self.r} and r={other.r}")
        return QPower(self.r, self.exponent + other.exponent)

    def inverse(self) -> "QPower":
        return QPower(self.r, -self.exponent)


def qpower(r: int, x: Rational) -> QPower:
    return QPower(r, Fraction(x))


def qbrace(r: int, x: Rational) -> CycNumber:
    """{x} = q^x - q^-x"""
    x = Fraction(x)
    return qpower(r, x).value - qpower(r, -x).value


def qinteger(r: int, x: Rational) -> CycNumber:
    """[x] = {x}/{1}"""
    x = Fraction(x)
    num = qbrace(r, x)
    return num / qbrace(r, 1).embed(num.N)
