from __future__ import annotations

import random
from fractions import Fraction

import pytest

from hopfg.errors import DivisionByZero, ModulusMismatch
from hopfg.scalar import (
    CycNumber,
    QPower,
    common_field,
    cyclotomic_polynomial,
    euler_phi,
    make_root_of_unity,
    qbrace,
    qinteger,
)


def _random_element(rng: random.Random, N: int) -> CycNumber:
    return CycNumber(N, [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(euler_phi(N))])


def test_cyclotomic_polynomials() -> None:
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(8) == (1, 0, 0, 0, 1)
    assert euler_phi(12) == 4
    assert euler_phi(1) == 1


def test_roots_of_unity() -> None:
    z = make_root_of_unity(8, 1)
    assert z ** 8 == 1
    assert z ** 4 == -1
    assert z * make_root_of_unity(8, -1) == 1
    # zeta_8 + zeta_8^-1 = sqrt(2)
    s = z + z.inv()
    assert s * s == 2
    assert not s.is_rational()
    assert s.decimal(4) == "1.4142"


@pytest.mark.parametrize("N", [1, 3, 4, 8, 12, 24])
def test_field_axioms_on_seeded_samples(N: int) -> None:
    rng = random.Random(N)
    for _ in range(200):
        x, y, z = (_random_element(rng, N) for _ in range(3))
        assert (x + y) * z == x * z + y * z
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        assert x - x == 0
        if x:
            assert x * x.inv() == 1
            assert (y / x) * x == y


def test_inverse_of_zero_raises() -> None:
    with pytest.raises(DivisionByZero):
        CycNumber.zero(8).inv()
    with pytest.raises(DivisionByZero):
        CycNumber.one(8) / 0


def test_mixing_fields_needs_an_embedding() -> None:
    a = make_root_of_unity(4, 1)
    b = make_root_of_unity(8, 1)
    with pytest.raises(ModulusMismatch):
        a + b
    assert a.embed(8) == b * b
    x, y = common_field(a, make_root_of_unity(3, 1))
    assert x.N == y.N == 12
    assert x ** 4 == 1 and y ** 3 == 1
    with pytest.raises(ModulusMismatch):
        b.embed(12)


def test_conjugation_and_rationals() -> None:
    z = make_root_of_unity(12, 5)
    assert z.conj() == z.inv()
    half = CycNumber.rational(12, Fraction(1, 2))
    assert half.rational_value() == Fraction(1, 2)
    assert hash(half) == hash(Fraction(1, 2))
    assert half == Fraction(1, 2)
    with pytest.raises(ValueError):
        z.rational_value()


def test_json_form_is_exact() -> None:
    x = CycNumber(8, [Fraction(1, 3), 0, Fraction(-2, 5), 1])
    data = x.to_json()
    assert data["N"] == 8
    assert CycNumber.from_json(data) == x


def test_long_coefficient_vectors_are_reduced() -> None:
    # x^4 = -1 modulo Phi_8
    assert CycNumber(8, [0, 0, 0, 0, 1]) == -1


def test_q_numbers() -> None:
    # r = 2: q = i, {1} = 2i, [2] = q + q^-1 = 0
    i = make_root_of_unity(4, 1)
    assert qbrace(2, 1) == 2 * i
    assert qinteger(2, 2) == 0
    assert qinteger(3, 2) == 1  # q + q^-1 = 2 cos(pi/3)
    p = QPower(2, Fraction(1, 2))
    assert p.modulus == 8
    assert p.value == make_root_of_unity(8, 1)
    assert (p * p.inverse()).exponent == 0
    assert p.in_field(16) == make_root_of_unity(16, 2)
