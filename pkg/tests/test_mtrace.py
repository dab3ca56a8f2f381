from __future__ import annotations

from fractions import Fraction

import pytest

from hopfg.errors import NotEndomorphismOfP, NotIdempotent, NotIntertwiner
from hopfg.group_algebra import GroupAlgebraFamily
from hopfg.linalg import Matrix
from hopfg.modcat import random_endomorphism
from hopfg.mtrace import (
    ProjPresentation,
    check_cyclicity,
    check_nondegenerate_pairing,
    check_reduction_lemma,
    check_reduction_negative_control,
    check_semisimple_proportionality,
    check_sides_agree,
    check_trace_integral_correspondence,
    check_trace_roundtrip,
    check_trivial_factor,
    hmat_identity,
    hmat_mul,
    hs_trace,
    hs_trace_via_decomposition,
    reduction_sides,
    trace_on_regular,
    trace_to_integral,
    unit_coefficient_forms,
)
from hopfg.scalar import CycNumber
from hopfg.uqsl2 import UqSl2Family

HALF = Fraction(1, 2)
SEEDS = [0, 1, 2]
PAIRS = [(HALF, HALF), (HALF, Fraction(3, 2)), (HALF, Fraction(1))]


@pytest.mark.parametrize("a, b", PAIRS)
def test_reduction_lemma_right(sl2: UqSl2Family, sl2_sym, a, b) -> None:
    report = check_reduction_lemma(sl2, sl2_sym, a, b, SEEDS)
    assert report.passed, report.witnesses
    assert report.checked == len(SEEDS) + 1
    lhs, rhs = report.values["identity"]
    assert lhs == rhs


@pytest.mark.parametrize("a, b", PAIRS)
def test_reduction_lemma_left(sl2: UqSl2Family, sl2_sym_left, a, b) -> None:
    report = check_reduction_lemma(sl2, sl2_sym_left, a, b, SEEDS)
    assert report.passed, report.witnesses


def test_identity_sample_of_the_reduction(sl2: UqSl2Family, sl2_sym) -> None:
    """t(Id) vanishes on both sides: the categorical trace of H_b is zero"""
    n = sl2.dim(HALF) ** 2
    lhs, rhs = reduction_sides(sl2, sl2_sym, HALF, HALF, Matrix.identity(n, sl2.N))
    assert lhs == rhs


@pytest.mark.parametrize("side", ["right", "left"])
def test_unit_coefficient_form_violates_the_reduction(sl2: UqSl2Family, side: str) -> None:
    report = check_reduction_negative_control(sl2, HALF, HALF, SEEDS, side)
    assert report.passed
    assert report.values["violations"] >= 1


def test_reduction_on_the_whole_spanning_set(group3: GroupAlgebraFamily, group3_integrals) -> None:
    sym = group3_integrals[1]["symmetrised"]
    sym_left = group3_integrals[1]["symmetrised_left"]
    for a in group3.window:
        for b in group3.window:
            assert check_reduction_lemma(group3, sym, a, b, SEEDS, exhaustive=True).passed
            assert check_reduction_lemma(group3, sym_left, a, b, SEEDS, exhaustive=True).passed


def test_group_algebra_unit_coefficient_is_the_integral(group3: GroupAlgebraFamily, group3_integrals) -> None:
    sym = group3_integrals[1]["symmetrised"]
    assert unit_coefficient_forms(group3).forms == sym.forms


def test_trivial_factor(sl2: UqSl2Family, sl2_sym) -> None:
    assert check_trivial_factor(sl2, sl2_sym, HALF, Fraction(3, 2), SEEDS).passed


def test_trace_properties(sl2: UqSl2Family, sl2_sym, sl2_sym_left) -> None:
    assert check_cyclicity(sl2, sl2_sym, HALF, SEEDS).passed
    pairing = check_nondegenerate_pairing(sl2, sl2_sym, HALF)
    assert pairing.passed and pairing.values["gram_det"] != 0
    assert check_trace_integral_correspondence(sl2, sl2_sym, HALF).passed
    assert check_trace_roundtrip(sl2, sl2_sym, HALF).passed
    assert check_trace_roundtrip(sl2, sl2_sym_left, HALF).passed
    assert check_sides_agree(sl2, sl2_sym, sl2_sym_left).passed


def test_trace_to_integral_recovers_the_form(sl2: UqSl2Family, sl2_sym) -> None:
    form = trace_to_integral(sl2, lambda f: trace_on_regular(sl2, sl2_sym.forms[1], 1, f), 1)
    assert form == sl2_sym.forms[1]


def test_proportionality_constants(sl2: UqSl2Family, sl2_sym, group3: GroupAlgebraFamily, group3_integrals) -> None:
    report = check_semisimple_proportionality(sl2, sl2_sym, HALF, list(range(10)))
    assert report.passed
    assert report.values["constant"] == 0
    assert report.values["vacuous"] is True
    sym = group3_integrals[1]["symmetrised"]
    for side in ("right", "left"):
        report = check_semisimple_proportionality(group3, sym, 0, SEEDS, side)
        assert report.passed
        assert report.values["constant"] == 3
        assert report.values["vacuous"] is False


def test_presentations(sl2: UqSl2Family, sl2_sym) -> None:
    A = sl2.algebra(HALF)
    form = sl2_sym.forms[HALF]
    K = sl2.K(HALF).vec
    with pytest.raises(NotIdempotent):
        ProjPresentation(sl2, HALF, 1, [[K]])
    E = sl2.E(HALF).vec
    P = ProjPresentation(sl2, HALF, 2, [[dict(A.unit), E], [{}, {}]])
    assert hmat_mul(A, P.idempotent, P.idempotent) == P.idempotent
    with pytest.raises(NotEndomorphismOfP):
        hs_trace(sl2, form, P, hmat_identity(A, 2))
    h = (sl2.E(HALF) * sl2.F(HALF)).vec
    f = [[h, A.multiply(h, E)], [{}, {}]]
    one = dict(A.unit)
    minus_e = {i: -c for i, c in E.items()}
    U = [[one, {}], [E, one]]
    U_inv = [[one, {}], [minus_e, one]]
    expected = hs_trace(sl2, form, ProjPresentation.free_module(sl2, HALF, 1), [[h]])
    assert expected == 1
    assert hs_trace(sl2, form, P, f) == expected
    assert hs_trace_via_decomposition(sl2, form, P, f, U, U_inv) == expected


def test_trace_on_regular_needs_a_module_map(sl2: UqSl2Family, sl2_sym) -> None:
    A = sl2.algebra(HALF)
    f = A.left_matrix(sl2.F(HALF).vec)
    with pytest.raises(NotIntertwiner):
        trace_on_regular(sl2, sl2_sym.forms[HALF], HALF, f)
    g = A.right_matrix(sl2.K(HALF).vec)
    assert trace_on_regular(sl2, sl2_sym.forms[HALF], HALF, g) == 0


def test_endomorphism_sample_is_reproducible(sl2: UqSl2Family, sl2_sym) -> None:
    f = random_endomorphism(sl2, HALF, HALF, 3)
    assert reduction_sides(sl2, sl2_sym, HALF, HALF, f) == reduction_sides(sl2, sl2_sym, HALF, HALF, f)
    assert isinstance(reduction_sides(sl2, sl2_sym, HALF, HALF, f)[0], CycNumber)


@pytest.mark.slow
def test_reduction_lemma_at_r3(sl2_r3: UqSl2Family) -> None:
    from hopfg.integrals import right_integral, symmetrise

    sym = symmetrise(sl2_r3, right_integral(sl2_r3))
    assert check_reduction_lemma(sl2_r3, sym, HALF, Fraction(3, 2), [0]).passed
    assert check_reduction_negative_control(sl2_r3, HALF, Fraction(3, 2), [0]).passed
