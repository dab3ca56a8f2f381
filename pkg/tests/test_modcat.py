from __future__ import annotations

from fractions import Fraction

import pytest

from hopfg.errors import NotIntertwiner, ShapeMismatch
from hopfg.group_algebra import GroupAlgebraFamily
from hopfg.linalg import Matrix, kron
from hopfg.modcat import (
    categorical_trace,
    check_decomposition,
    check_duality,
    check_integral_transport,
    check_intertwiner,
    check_module,
    check_partial_trace_paths,
    check_pivotal_structure,
    dual_module,
    duality_morphisms,
    endomorphism_dimension,
    hom_space,
    partial_trace_left,
    partial_trace_right,
    phi_right,
    pivotal_isomorphism,
    psi_right,
    random_endomorphism,
    regular_module,
    require_intertwiner,
    spanning_endomorphisms,
    tensor_module,
    trivial_twist_module,
    unit_module,
)
from hopfg.scalar import CycNumber
from hopfg.uqsl2 import UqSl2Family, simple_module

HALF = Fraction(1, 2)


def test_regular_tensor_and_dual_modules(sl2: UqSl2Family) -> None:
    H = regular_module(sl2, HALF)
    assert check_module(H).passed
    V = simple_module(sl2, HALF)
    assert V.grade == Fraction(3, 2)
    assert check_module(V).passed
    assert check_module(dual_module(V)).passed
    VV = tensor_module(V, V)
    assert VV.grade == 1
    assert check_module(VV).passed
    assert check_module(unit_module(sl2)).passed


def test_duality_and_pivotal_structure_on_a_simple_module(sl2: UqSl2Family) -> None:
    V = simple_module(sl2, HALF)
    report = check_duality(V)
    assert report.passed, report.witnesses
    pivotal = check_pivotal_structure(V)
    assert pivotal.passed, pivotal.witnesses
    assert pivotal_isomorphism(V) == V.pivot_action()


def test_duality_morphism_shapes(sl2: UqSl2Family) -> None:
    V = simple_module(sl2, HALF)
    ev_r, coev_r, ev_l, coev_l = duality_morphisms(V)
    assert ev_r.shape == ev_l.shape == (1, 4)
    assert coev_r.shape == coev_l.shape == (4, 1)
    # ev_right (x) id composed with id (x) coev_right is the identity of V*
    I = Matrix.identity(2, sl2.N)
    assert (kron(ev_r, I) @ kron(I, coev_r)).is_identity()


def test_quantum_dimension_of_a_projective_simple_vanishes(sl2: UqSl2Family) -> None:
    V = simple_module(sl2, HALF)
    ident = Matrix.identity(V.dim, sl2.N)
    assert categorical_trace(V, ident, "right") == 0
    assert categorical_trace(V, ident, "left") == 0


def test_group_algebra_categorical_trace_counts_dimension(group3: GroupAlgebraFamily) -> None:
    H = regular_module(group3, 0)
    assert categorical_trace(H, Matrix.identity(3, group3.N)) == 3


@pytest.mark.parametrize("side", ["right", "left"])
def test_phi_psi_are_inverse_module_maps(sl2: UqSl2Family, side: str) -> None:
    for b in (HALF, Fraction(3, 2), Fraction(1)):
        report = check_decomposition(sl2, HALF, b, side)
        assert report.passed, (b, report.witnesses)


def test_integrals_transport_through_psi(sl2: UqSl2Family, sl2_sym, sl2_sym_left) -> None:
    for b in (HALF, Fraction(3, 2)):
        assert check_integral_transport(sl2, sl2_sym, sl2_sym_left, HALF, b).passed


def test_phi_keeps_the_unit_in_the_first_factor(group3: GroupAlgebraFamily) -> None:
    phi, psi = phi_right(group3, 1, 1), psi_right(group3, 1, 1)
    assert (phi @ psi).is_identity()
    one = CycNumber.one(group3.N)
    # 1 (x) x^2 maps to 1 (x) x^2
    assert phi.apply({2: one}) == {2: one}


@pytest.mark.parametrize("side", ["right", "left"])
def test_random_endomorphisms_are_module_maps(sl2: UqSl2Family, side: str) -> None:
    for seed in range(3):
        f = random_endomorphism(sl2, HALF, HALF, seed, side, validate=True)
        assert f.shape == (64, 64)
        assert not f.is_zero()
    assert random_endomorphism(sl2, HALF, HALF, 7, side) == random_endomorphism(sl2, HALF, HALF, 7, side)


def test_non_module_map_is_rejected(sl2: UqSl2Family) -> None:
    H = regular_module(sl2, HALF)
    A = sl2.algebra(HALF)
    # left multiplication by E does not commute with the left action
    f = A.left_matrix(sl2.E(HALF).vec)
    assert not check_intertwiner(f, H, H).passed
    with pytest.raises(NotIntertwiner):
        require_intertwiner(f, H, H)
    assert check_intertwiner(A.right_matrix(sl2.E(HALF).vec), H, H).passed


def test_hom_spaces(sl2: UqSl2Family, group3: GroupAlgebraFamily) -> None:
    assert endomorphism_dimension(group3, 0) == 3
    assert endomorphism_dimension(sl2, HALF) == 8
    V = simple_module(sl2, HALF)
    (only,) = hom_space(V, V)
    assert only.scale(only[0, 0].inv()).is_identity()
    W = simple_module(sl2, Fraction(5, 2))
    assert W.grade == V.grade
    assert hom_space(V, W) == []


def test_spanning_set_generates_the_endomorphisms(group3: GroupAlgebraFamily) -> None:
    maps = list(spanning_endomorphisms(group3, 1, 1))
    assert len(maps) == 3 * 3 * 3
    big = tensor_module(regular_module(group3, 1), regular_module(group3, 1))
    assert all(check_intertwiner(f, big, big).passed for f in maps)


def test_partial_traces_two_ways(sl2: UqSl2Family) -> None:
    V = simple_module(sl2, HALF)
    VV = tensor_module(V, V)
    f = VV.act(sl2.E(VV.grade).vec) + VV.act(sl2.K(VV.grade).vec)
    assert check_partial_trace_paths(f, V.dim, V, "right").passed
    assert check_partial_trace_paths(f, V.dim, V, "left").passed
    # over the trivial twist module the right partial trace is the plain trace
    W = trivial_twist_module(sl2, HALF)
    g = kron(Matrix.identity(1, sl2.N), Matrix.identity(W.dim, sl2.N))
    assert partial_trace_right(g, 1, 1, W) == Matrix.scalar(1, CycNumber.rational(sl2.N, 8))
    with pytest.raises(ShapeMismatch):
        partial_trace_left(f, 3, 3, V)
