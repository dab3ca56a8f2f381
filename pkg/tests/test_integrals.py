from __future__ import annotations

from fractions import Fraction

import pytest

from hopfg.errors import NotUnimodular
from hopfg.group_algebra import GroupAlgebraFamily
from hopfg.hopf_core import PatchedFamily
from hopfg.integrals import (
    LEFT,
    RIGHT,
    check_comodulus,
    check_integral,
    check_symmetric_nondegenerate,
    check_unibalanced,
    check_unimodular,
    comodulus,
    integral_line,
    is_unibalanced,
    is_unimodular,
    left_integral,
    right_integral,
    symmetrise,
)
from hopfg.scalar import CycNumber
from hopfg.uqsl2 import (
    UqSl2Family,
    check_integral_formula,
    check_unibalanced_closed_form,
    expected_right_integral,
    expected_symmetrised_integral,
)

HALF = Fraction(1, 2)


def test_integral_suite_passes_on_sl2(sl2_integrals) -> None:
    reports, integrals = sl2_integrals
    failed = [(r.name, r.params, r.witnesses, r.error) for r in reports if not r.passed]
    assert not failed
    assert {r.name for r in reports} >= {
        "right_integral",
        "left_integral",
        "symmetrised_right_integral",
        "symmetrised_left_integral",
        "comodulus",
        "unimodular",
        "symmetric_nondegenerate",
        "unibalanced",
    }
    assert integrals["right"].side == RIGHT
    assert integrals["left"].side == LEFT
    assert integrals["symmetrised"].symmetrised


def test_sl2_integrals_match_the_closed_forms(sl2: UqSl2Family, sl2_integrals) -> None:
    _, integrals = sl2_integrals
    mu, sym = integrals["right"], integrals["symmetrised"]
    for a in sl2.window:
        assert mu.form(a) == expected_right_integral(sl2, a)
        assert sym.form(a) == expected_symmetrised_integral(sl2, a)
    assert check_integral_formula(sl2, mu.forms, sym.forms).passed
    # mu_1 is anchored at E^(r-1) F^(r-1) K
    r = sl2.r
    assert mu.form(0) == {sl2.index(r - 1, r - 1, 1): CycNumber.one(sl2.N)}
    assert mu.evaluate(HALF, sl2.E(HALF).vec, sl2.N) == 0


def test_sl2_comodulus_is_the_square_of_the_pivot(sl2: UqSl2Family, sl2_integrals) -> None:
    mu = sl2_integrals[1]["right"]
    a_family = comodulus(sl2, mu)
    assert check_unibalanced_closed_form(sl2, a_family).passed
    for a in sl2.window:
        A = sl2.algebra(a)
        g = sl2.pivot(a)
        assert a_family[a] == A.multiply(g, g)
    assert is_unibalanced(sl2, mu)


def test_integral_lines_are_one_dimensional(sl2: UqSl2Family) -> None:
    for a in sl2.window:
        assert len(integral_line(sl2, a)) == 1


def test_symmetrised_forms_are_traces(sl2: UqSl2Family, sl2_sym) -> None:
    report = check_symmetric_nondegenerate(sl2, sl2_sym, HALF)
    assert report.passed
    assert report.values["gram_det"] != 0


def test_group_algebra_integrals(group3: GroupAlgebraFamily, group3_integrals) -> None:
    reports, integrals = group3_integrals
    assert all(r.passed for r in reports)
    one = CycNumber.one(group3.N)
    for a in group3.window:
        assert integrals["right"].form(a) == {0: one}
        assert integrals["left"].form(a) == {0: one}
        assert integrals["symmetrised"].form(a) == {0: one}
    assert is_unimodular(group3)


def test_pivot_that_is_not_a_square_root_of_the_comodulus() -> None:
    F = GroupAlgebraFamily(n=4, pivot_power=1)
    mu = right_integral(F)
    assert comodulus(F, mu)[0] == {0: CycNumber.one(1)}
    report = check_unibalanced(F, mu)
    assert not report.passed
    assert report.values["a_equals_g_squared"] is False
    assert report.values["symmetrised_integrals_agree"] is False
    # the relations themselves still hold
    for form in (mu, left_integral(F, mu), symmetrise(F, mu), symmetrise(F, left_integral(F, mu))):
        assert check_integral(F, form).passed


def test_twisted_sl2_pivot_is_not_unibalanced() -> None:
    F = UqSl2Family(2, HALF, pivot_twist=1)
    mu = right_integral(F)
    assert check_comodulus(F, mu).passed
    report = check_unibalanced(F, mu)
    assert not report.passed
    assert report.values["a_equals_g_squared"] is False
    assert report.values["symmetrised_integrals_agree"] is False


def test_form_that_is_not_an_integral_is_rejected(sl2: UqSl2Family, sl2_integrals) -> None:
    mu = sl2_integrals[1]["right"]
    shifted = type(mu)({a: {0: CycNumber.one(sl2.N)} for a in sl2.window})
    report = check_integral(sl2, shifted)
    assert not report.passed
    assert report.witnesses


def test_non_unimodular_family_refuses_symmetric_check(group3: GroupAlgebraFamily) -> None:
    one = CycNumber.one(group3.N)
    # a counit that kills x makes the cointegral lines of H_1 disagree
    broken = PatchedFamily(group3, counit={0: one})
    assert not check_unimodular(broken).passed
    mu = right_integral(group3)
    with pytest.raises(NotUnimodular):
        check_symmetric_nondegenerate(broken, symmetrise(group3, mu), 0)
