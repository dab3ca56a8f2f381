from __future__ import annotations

from fractions import Fraction

import pytest

from hopfg.errors import AlphaIntegralSingular, GradeMismatch, WindowIncomplete
from hopfg.integrals import right_integral, symmetrise
from hopfg.linalg import Matrix
from hopfg.scalar import CycNumber, make_root_of_unity
from hopfg.uqsl2 import (
    PBWElement,
    RationalModTwo,
    SL2Params,
    UqSl2Family,
    brace_square_product,
    build_family,
    casimir,
    casimir_power_identities,
    casimir_projector,
    casimir_scalar,
    check_casimir_projector,
    check_modified_dimension,
    check_relations,
    check_simple_module,
    density_decomposition_check,
    evaluate_form,
    highest_weight_idempotent,
    modified_dimension,
    module_grade,
    normalization_constant,
    quantum_dimension,
    simple_module,
    simple_module_data,
)

HALF = Fraction(1, 2)


def sqrt2() -> CycNumber:
    z = make_root_of_unity(8, 1)
    return z + z.inv()


def test_grading_group() -> None:
    G = RationalModTwo()
    assert G.mul(Fraction(3, 2), Fraction(1)) == HALF
    assert G.inv(HALF) == Fraction(3, 2)
    assert G.parse(" -1/2 ") == Fraction(3, 2)
    with pytest.raises(ValueError):
        G.parse("half")


def test_family_shape(sl2: UqSl2Family) -> None:
    assert sl2.window == (0, HALF, 1, Fraction(3, 2))
    assert sl2.N == 8
    assert sl2.dim(HALF) == 8
    assert sl2.exponents(sl2.index(1, 0, 1)) == (1, 0, 1)
    assert sl2.q(HALF) == make_root_of_unity(8, 1)
    assert sl2.qint(2) == 0
    with pytest.raises(ValueError):
        SL2Params(1, HALF)
    F = build_family(SL2Params(2, Fraction(1, 3)))
    assert F.N == 12 and len(F.window) == 6
    G = UqSl2Family(2, HALF, extra_grades=[Fraction(1, 4)])
    assert len(G.window) == 8


def test_relations_hold_in_every_grade(sl2: UqSl2Family) -> None:
    for a in sl2.window:
        report = check_relations(sl2, a)
        assert report.passed, report.witnesses


def test_pbw_arithmetic(sl2: UqSl2Family) -> None:
    E, F, K = sl2.E(HALF), sl2.F(HALF), sl2.K(HALF)
    assert K * sl2.K_inv(HALF) == sl2.one(HALF)
    assert (E * F - F * E) * sl2.brace(1) == K - sl2.K_inv(HALF)
    assert (E ** 2).is_zero()
    # K^2 = q^(2 * 1/2) in grade 1/2
    assert K ** 2 == sl2.one(HALF) * sl2.q(1)
    assert (E * F).terms() == {(1, 1, 0): CycNumber.one(sl2.N)}
    assert (F * E).coefficient(1, 1, 0) == 1
    with pytest.raises(GradeMismatch):
        E + sl2.E(Fraction(3, 2))


def test_casimir_is_central_with_the_right_scalar(sl2: UqSl2Family) -> None:
    omega = casimir(sl2, Fraction(3, 2))
    assert isinstance(omega, PBWElement)
    V = simple_module(sl2, HALF)
    assert V.act(omega.vec) == Matrix.scalar(2, casimir_scalar(sl2, HALF))


def test_casimir_powers(sl2: UqSl2Family, sl2_sym) -> None:
    g = module_grade(sl2, HALF)
    report = casimir_power_identities(sl2, sl2_sym.forms[g], g)
    assert report.passed, report.witnesses
    assert report.values["sym(Omega^1)"] == 1
    assert report.values["sym(Omega^0)"] == 0


def test_simple_modules(sl2: UqSl2Family) -> None:
    for k in range(2):
        report = check_simple_module(sl2, HALF + 2 * k)
        assert report.passed, report.witnesses
    data = simple_module_data(sl2, HALF)
    assert data.grade == Fraction(3, 2)
    # e_1 = [1][alpha + r - 1]
    assert data.e[1] == sl2.qint(HALF + 1)
    with pytest.raises(AlphaIntegralSingular):
        simple_module_data(sl2, 1)
    assert quantum_dimension(simple_module(sl2, HALF)) == 0


def test_density_and_projector(sl2: UqSl2Family) -> None:
    density = density_decomposition_check(sl2, HALF)
    assert density.passed, density.witnesses
    assert density.values["rank"] == 8
    L = casimir_projector(sl2, HALF)
    assert L * L == L
    report = check_casimir_projector(sl2, HALF)
    assert report.passed
    assert report.values["sign_factor_(-1)^(r-1)_needed"] is False
    with pytest.raises(AlphaIntegralSingular):
        casimir_projector(sl2, 1)


def test_modified_dimension_at_r2(sl2: UqSl2Family, sl2_sym) -> None:
    g = module_grade(sl2, HALF)
    md = modified_dimension(sl2, sl2_sym.forms[g], HALF)
    assert md.d0 == normalization_constant(sl2) == HALF
    assert md.d0_quoted == -HALF
    # sym(L_alpha) = sqrt(2) and d(V_alpha) = sqrt(2)/2
    assert md.sym_of_projector == sqrt2()
    assert md.via_integral == sqrt2() / 2
    assert md.via_formula == md.via_integral == md.via_product == md.via_hs_trace
    assert evaluate_form(sl2_sym.forms[g], casimir_projector(sl2, HALF)) == sqrt2()
    assert check_modified_dimension(sl2, sl2_sym.forms[g], HALF).passed


def test_highest_weight_idempotent_gives_d_v(sl2: UqSl2Family, sl2_sym) -> None:
    g = module_grade(sl2, HALF)
    e = highest_weight_idempotent(sl2, HALF)
    L = casimir_projector(sl2, HALF)
    assert e * e == e
    assert e != L
    assert e * L == e
    assert simple_module(sl2, HALF).act(e.vec) == Matrix(2, 2, sl2.N, {0: {0: CycNumber.one(sl2.N)}})
    assert evaluate_form(sl2_sym.forms[g], e) == sqrt2() / 2
    md = modified_dimension(sl2, sl2_sym.forms[g], HALF)
    assert md.via_hs_trace * 2 == md.sym_of_projector
    assert md.via_hs_trace == md.via_formula


def test_brace_products() -> None:
    assert brace_square_product(UqSl2Family(2, HALF)) == -4
    assert brace_square_product(UqSl2Family(3, HALF)) == 9


def test_grade_outside_the_window(sl2: UqSl2Family) -> None:
    with pytest.raises(WindowIncomplete):
        sl2.element(Fraction(1, 3))


@pytest.mark.slow
def test_r3_closed_forms(sl2_r3: UqSl2Family) -> None:
    mu = right_integral(sl2_r3)
    sym = symmetrise(sl2_r3, mu)
    g = module_grade(sl2_r3, HALF)
    assert g == HALF
    assert casimir_power_identities(sl2_r3, sym.forms[g], g).passed
    assert check_simple_module(sl2_r3, HALF).passed
    assert density_decomposition_check(sl2_r3, HALF).passed
    assert check_casimir_projector(sl2_r3, HALF).passed
    report = check_modified_dimension(sl2_r3, sym.forms[g], HALF)
    assert report.passed, report.witnesses
