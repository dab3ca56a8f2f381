"""
The pivotal category of graded modules.

A ModuleRep is a finite-dimensional H_a-module given by the action matrix of
each basis vector of H_a. Tensor products act through Delta_{a,b}, duals
through the antipode, and the four duality morphisms use the pivot:

    ev_right:  V* (x) V -> 1,   f (x) v -> f(v)
    coev_right: 1 -> V (x) V*,  1 -> sum v_j (x) v^j
    ev_left:   V (x) V* -> 1,   v (x) f -> f(g v)
    coev_left: 1 -> V* (x) V,   1 -> sum v^i (x) g^-1 v_i

Partial traces are computed both by contraction against rho(g) / rho(g^-1)
and as explicit composites of these morphisms.
"""

from __future__ import annotations

import logging
import random
from typing import Callable, Iterator

from .errors import NotIntertwiner, ShapeMismatch, SingularMatrix
from .hopf_core import Grade, HopfGFamily, pivot_inverse, tensor_vec
from .linalg import Matrix, Vec, inverse, kron, nullspace_of_rows, vec_axpy
from .report import CheckReport
from .scalar import CycNumber

logger = logging.getLogger(__name__)


class ModuleRep:
    """An H_grade-module of dimension dim; action(i) is the matrix of basis vector b_i"""

    def __init__(self, family: HopfGFamily, grade: Grade, dim: int, action: Callable[[int], Matrix], label: str = "V"):
        family.require(grade)
        self.family = family
        self.grade = grade
        self.dim = dim
        self.label = label
        self._action = action
        self._cache: dict[int, Matrix] = {}

    def action(self, i: int) -> Matrix:
        m = self._cache.get(i)
        if m is None:
            m = self._action(i)
            if m.shape != (self.dim, self.dim):
                raise ShapeMismatch(f"{self.label}: action of basis {i} has shape {m.shape}")
            self._cache[i] = m
        return m

    def act(self, x: Vec) -> Matrix:
        out = Matrix.zeros(self.dim, self.dim, self.family.N)
        for i, c in x.items():
            out = out + self.action(i).scale(c)
        return out

    def generator_actions(self) -> list[Matrix]:
        return [self.act(g) for g in self.family.generators(self.grade)]

    def pivot_action(self) -> Matrix:
        return self.act(self.family.pivot(self.grade))

    def pivot_inverse_action(self) -> Matrix:
        return self.act(pivot_inverse(self.family, self.grade))

    def __repr__(self) -> str:
        return f"ModuleRep({self.label}, grade={self.family.label(self.grade)}, dim={self.dim})"


# ============================================================================
# Constructions
# ============================================================================

def regular_module(F: HopfGFamily, a: Grade) -> ModuleRep:
    A = F.algebra(a)
    return ModuleRep(F, a, A.dim, A.left_basis_matrix, f"H_{F.label(a)}")


def unit_module(F: HopfGFamily) -> ModuleRep:
    one = F.unit_grade
    eps = F.counit()
    N = F.N
    return ModuleRep(F, one, 1, lambda i: Matrix(1, 1, N, {0: {0: eps[i]}} if i in eps else {}), "1")


def trivial_module(F: HopfGFamily, dim: int, label: str = "eps") -> ModuleRep:
    """k^dim with H_1 acting by the counit"""
    one = F.unit_grade
    eps = F.counit()
    N = F.N
    return ModuleRep(
        F, one, dim,
        lambda i: Matrix.scalar(dim, eps[i]) if i in eps else Matrix.zeros(dim, dim, N),
        f"{label}^{dim}",
    )


def trivial_twist_module(F: HopfGFamily, b: Grade) -> ModuleRep:
    """eps H_b: the underlying space of H_b with the trivial H_1-action"""
    return trivial_module(F, F.dim(b), f"eps_H_{F.label(b)}")


def tensor_module(M: ModuleRep, W: ModuleRep) -> ModuleRep:
    F = M.family
    if W.family is not F:
        raise ValueError("modules over different families")
    a, b = M.grade, W.grade
    ab = F.mul(a, b)
    F.require(ab)

    def action(i: int) -> Matrix:
        delta = F.coproduct(a, b).column(i)
        out = Matrix.zeros(M.dim * W.dim, M.dim * W.dim, F.N)
        for t, c in delta.items():
            k, l = divmod(t, F.dim(b))
            out = out + kron(M.action(k), W.action(l)).scale(c)
        return out

    return ModuleRep(F, ab, M.dim * W.dim, action, f"{M.label}(x){W.label}")


def dual_module(M: ModuleRep) -> ModuleRep:
    """V* in grade a^-1: h acts by rho(S_{a^-1}(h))^T in the dual basis"""
    F = M.family
    ai = F.inv(M.grade)
    F.require(ai)

    def action(i: int) -> Matrix:
        return M.act(F.antipode(ai).column(i)).transpose()

    return ModuleRep(F, ai, M.dim, action, f"{M.label}*")


def check_module(M: ModuleRep) -> CheckReport:
    """rho(1) = Id and rho(b_i) rho(gen) = rho(b_i gen)"""
    F = M.family
    A = F.algebra(M.grade)
    report = CheckReport("module", {"module": M.label, "grade": F.label(M.grade)})
    report.record(M.act(A.unit).is_identity(), "unit does not act by the identity")
    gens = F.generators(M.grade)
    for i in range(A.dim):
        for gi, g in enumerate(gens):
            lhs = M.action(i) @ M.act(g)
            rhs = M.act(A.multiply(A.basis(i), g))
            report.record(lhs == rhs, lambda i=i, gi=gi: f"rho({A.labels[i]}) rho(gen {gi}) != rho(product)")
    return report


# ============================================================================
# Intertwiners and Hom spaces
# ============================================================================

def check_intertwiner(f: Matrix, source: ModuleRep, target: ModuleRep, name: str = "intertwiner") -> CheckReport:
    """f rho_source(g) = rho_target(g) f for every generator g"""
    F = source.family
    if source.grade != target.grade:
        raise ShapeMismatch(f"modules over different grades {F.label(source.grade)}, {F.label(target.grade)}")
    if f.shape != (target.dim, source.dim):
        raise ShapeMismatch(f"{name}: shape {f.shape}, expected {(target.dim, source.dim)}")
    report = CheckReport(name, {"source": source.label, "target": target.label})
    labels = F.generator_labels(source.grade)
    for gl, g in zip(labels, F.generators(source.grade)):
        lhs = f @ source.act(g)
        rhs = target.act(g) @ f
        report.record(lhs == rhs, lambda gl=gl, lhs=lhs, rhs=rhs: f"{gl}: {lhs.first_difference(rhs)}")
    return report


def require_intertwiner(f: Matrix, source: ModuleRep, target: ModuleRep) -> None:
    report = check_intertwiner(f, source, target)
    if not report.passed:
        raise NotIntertwiner(f"{source.label} -> {target.label}: {report.witnesses[0]}")


def hom_space(source: ModuleRep, target: ModuleRep) -> list[Matrix]:
    """Basis of Hom_H(source, target) by solving X rho_s(g) = rho_t(g) X for all generators"""
    F = source.family
    m, n = source.dim, target.dim
    rows: list[Vec] = []
    one = CycNumber.one(F.N)
    for g in F.generators(source.grade):
        rs, rt = source.act(g), target.act(g)
        rt_rows = rt.row_vecs()
        rs_cols = [rs.column(c) for c in range(m)]
        for r in range(n):
            for c in range(m):
                row: Vec = {}
                # (X rho_s)[r][c] = sum_k X[r][k] rho_s[k][c]
                for k, v in rs_cols[c].items():
                    vec_axpy(row, v, {r * m + k: one})
                # (rho_t X)[r][c] = sum_k rho_t[r][k] X[k][c]
                for k, v in rt_rows[r].items():
                    vec_axpy(row, -v, {k * m + c: one})
                if row:
                    rows.append(row)
    basis = []
    for sol in nullspace_of_rows(rows, n * m, F.N):
        columns: dict[int, Vec] = {}
        for u, v in sol.items():
            r, c = divmod(u, m)
            columns.setdefault(c, {})[r] = v
        basis.append(Matrix(n, m, F.N, columns))
    return basis


# ============================================================================
# Duality
# ============================================================================

def ev_right(M: ModuleRep) -> Matrix:
    """V* (x) V -> k"""
    n, N = M.dim, M.family.N
    one = CycNumber.one(N)
    return Matrix(1, n * n, N, {i * n + i: {0: one} for i in range(n)})


def coev_right(M: ModuleRep) -> Matrix:
    """k -> V (x) V*"""
    n, N = M.dim, M.family.N
    one = CycNumber.one(N)
    return Matrix(n * n, 1, N, {0: {j * n + j: one for j in range(n)}})


def ev_left(M: ModuleRep) -> Matrix:
    """V (x) V* -> k, v_j (x) v^i -> rho(g)[i][j]"""
    n, N = M.dim, M.family.N
    g = M.pivot_action()
    return Matrix(1, n * n, N, {j * n + i: {0: v} for i, j, v in g.entries()})


def coev_left(M: ModuleRep) -> Matrix:
    """k -> V* (x) V, 1 -> sum_i v^i (x) g^-1 v_i"""
    n, N = M.dim, M.family.N
    gi = M.pivot_inverse_action()
    return Matrix(n * n, 1, N, {0: {i * n + k: v for k, i, v in gi.entries()}})


def duality_morphisms(M: ModuleRep) -> tuple[Matrix, Matrix, Matrix, Matrix]:
    """(ev_right, coev_right, ev_left, coev_left)"""
    return ev_right(M), coev_right(M), ev_left(M), coev_left(M)


def check_duality(M: ModuleRep) -> CheckReport:
    """The four duality maps are module maps and satisfy the zig-zag identities"""
    F = M.family
    N = F.N
    n = M.dim
    D = dual_module(M)
    report = CheckReport("duality", {"module": M.label})
    unit = unit_module(F)
    ev_r, coev_r, ev_l, coev_l = duality_morphisms(M)
    for name, f, src, tgt in (
        ("ev_right", ev_r, tensor_module(D, M), unit),
        ("coev_right", coev_r, unit, tensor_module(M, D)),
        ("ev_left", ev_l, tensor_module(M, D), unit),
        ("coev_left", coev_l, unit, tensor_module(D, M)),
    ):
        report.merge(check_intertwiner(f, src, tgt, name))

    I = Matrix.identity(n, N)
    zigzags = {
        "(Id (x) ev_r)(coev_r (x) Id) = Id_V": kron(I, ev_right(M)) @ kron(coev_right(M), I),
        "(ev_r (x) Id)(Id (x) coev_r) = Id_V*": kron(ev_right(M), I) @ kron(I, coev_right(M)),
        "(Id (x) ev_l)(coev_l (x) Id) = Id_V*": kron(I, ev_left(M)) @ kron(coev_left(M), I),
        "(ev_l (x) Id)(Id (x) coev_l) = Id_V": kron(ev_left(M), I) @ kron(I, coev_left(M)),
    }
    for name, m in zigzags.items():
        report.record(m.is_identity(), name)
    return report


def pivotal_isomorphism(M: ModuleRep) -> Matrix:
    """Phi_V = (ev_left_V (x) Id_V**)(Id_V (x) coev_right_V*): V -> V**"""
    D = dual_module(M)
    I = Matrix.identity(M.dim, M.family.N)
    return kron(ev_left(M), I) @ kron(I, coev_right(D))


def check_pivotal_structure(M: ModuleRep) -> CheckReport:
    """Phi_V is an invertible module map V -> V**, equal to rho(g), and monoidal on V (x) V"""
    report = CheckReport("pivotal_structure", {"module": M.label})
    DD = dual_module(dual_module(M))
    phi = pivotal_isomorphism(M)
    report.merge(check_intertwiner(phi, M, DD, "Phi_V"))
    report.record(phi == M.pivot_action(), "Phi_V != rho(g)")
    try:
        inverse(phi)
        report.record(True)
    except SingularMatrix as e:
        report.fail(f"Phi_V not invertible: {e}")
    F = M.family
    if F.in_window(F.mul(M.grade, M.grade)):
        MM = tensor_module(M, M)
        report.record(pivotal_isomorphism(MM) == kron(phi, phi), "Phi_(V(x)V) != Phi_V (x) Phi_V")
    return report


# ============================================================================
# Partial and categorical traces
# ============================================================================

def partial_trace_right(f: Matrix, u_dim: int, v_dim: int, W: ModuleRep) -> Matrix:
    """tr^r_W(f) for f: U (x) W -> V (x) W, contracted against rho_W(g)"""
    w = W.dim
    if f.shape != (v_dim * w, u_dim * w):
        raise ShapeMismatch(f"partial trace of {f.shape} over {u_dim}x{w} -> {v_dim}x{w}")
    g = W.pivot_action()
    columns: dict[int, Vec] = {}
    for j_src, col in f._cols.items():
        u, j = divmod(j_src, w)
        out = columns.setdefault(u, {})
        for t, c in col.items():
            v, k = divmod(t, w)
            p = g[j, k]
            if p:
                vec_axpy(out, c * p, {v: CycNumber.one(f.N)})
    return Matrix(v_dim, u_dim, f.N, columns)


def partial_trace_left(f: Matrix, u_dim: int, v_dim: int, W: ModuleRep) -> Matrix:
    """tr^l_W(f) for f: W (x) U -> W (x) V, contracted against rho_W(g^-1)"""
    w = W.dim
    if f.shape != (w * v_dim, w * u_dim):
        raise ShapeMismatch(f"partial trace of {f.shape} over {w}x{u_dim} -> {w}x{v_dim}")
    gi = W.pivot_inverse_action()
    columns: dict[int, Vec] = {}
    for j_src, col in f._cols.items():
        m, u = divmod(j_src, u_dim)
        out = columns.setdefault(u, {})
        for t, c in col.items():
            k, v = divmod(t, v_dim)
            p = gi[m, k]
            if p:
                vec_axpy(out, c * p, {v: CycNumber.one(f.N)})
    return Matrix(v_dim, u_dim, f.N, columns)


def partial_trace_right_composite(f: Matrix, u_dim: int, v_dim: int, W: ModuleRep) -> Matrix:
    """(Id_V (x) ev_left_W)(f (x) Id_W*)(Id_U (x) coev_right_W)"""
    N = f.N
    return (
        kron(Matrix.identity(v_dim, N), ev_left(W))
        @ kron(f, Matrix.identity(W.dim, N))
        @ kron(Matrix.identity(u_dim, N), coev_right(W))
    )


def partial_trace_left_composite(f: Matrix, u_dim: int, v_dim: int, W: ModuleRep) -> Matrix:
    """(ev_right_W (x) Id_V)(Id_W* (x) f)(coev_left_W (x) Id_U)"""
    N = f.N
    return (
        kron(ev_right(W), Matrix.identity(v_dim, N))
        @ kron(Matrix.identity(W.dim, N), f)
        @ kron(coev_left(W), Matrix.identity(u_dim, N))
    )


def check_partial_trace_paths(f: Matrix, u_dim: int, W: ModuleRep, side: str = "right") -> CheckReport:
    """Contraction against the pivot equals the composite of duality morphisms"""
    report = CheckReport(f"partial_trace_paths_{side}", {"module": W.label})
    if side == "right":
        direct = partial_trace_right(f, u_dim, u_dim, W)
        composite = partial_trace_right_composite(f, u_dim, u_dim, W)
    else:
        direct = partial_trace_left(f, u_dim, u_dim, W)
        composite = partial_trace_left_composite(f, u_dim, u_dim, W)
    report.record(direct == composite, lambda: f"paths differ at {direct.first_difference(composite)}")
    return report


def categorical_trace(M: ModuleRep, f: Matrix, side: str = "right") -> CycNumber:
    """Right: tr(rho(g) f). Left: tr(rho(g^-1) f)"""
    g = M.pivot_action() if side == "right" else M.pivot_inverse_action()
    return (g @ f).trace()


# ============================================================================
# The isomorphisms H_a (x) H_b = H_ab (x) eps H_b
# ============================================================================

def phi_right(F: HopfGFamily, a: Grade, b: Grade) -> Matrix:
    """H_ab (x) eps H_b -> H_a (x) H_b, h (x) m -> h' (x) h'' m"""
    ab = F.mul(a, b)
    A, B = F.algebra(a), F.algebra(b)
    d_b = B.dim
    delta = F.coproduct(a, b)
    columns = {}
    for h in range(F.dim(ab)):
        dh = delta.column(h)
        for m in range(d_b):
            col: Vec = {}
            for t, c in dh.items():
                i, k = divmod(t, d_b)
                for l, v in B.product(k, m).items():
                    vec_axpy(col, c * v, {i * d_b + l: CycNumber.one(F.N)})
            columns[h * d_b + m] = col
    return Matrix(A.dim * d_b, F.dim(ab) * d_b, F.N, columns)


def psi_right(F: HopfGFamily, a: Grade, b: Grade) -> Matrix:
    """H_a (x) H_b -> H_ab (x) eps H_b, x (x) y -> x' (x) S_{b^-1}(x'') y with Delta_{ab,b^-1}"""
    ab, bi = F.mul(a, b), F.inv(b)
    F.require(ab, bi)
    B = F.algebra(b)
    d_b = B.dim
    d_bi = F.dim(bi)
    delta = F.coproduct(ab, bi)
    S = F.antipode(bi)
    columns = {}
    for x in range(F.dim(a)):
        dx = delta.column(x)
        for y in range(d_b):
            col: Vec = {}
            for t, c in dx.items():
                i, k = divmod(t, d_bi)
                sy = B.multiply(S.column(k), B.basis(y))
                for l, v in sy.items():
                    vec_axpy(col, c * v, {i * d_b + l: CycNumber.one(F.N)})
            columns[x * d_b + y] = col
    return Matrix(F.dim(ab) * d_b, F.dim(a) * d_b, F.N, columns)


def phi_left(F: HopfGFamily, a: Grade, b: Grade) -> Matrix:
    """eps H_a (x) H_ab -> H_a (x) H_b, m (x) h -> h' m (x) h''"""
    ab = F.mul(a, b)
    A = F.algebra(a)
    d_b = F.dim(b)
    d_ab = F.dim(ab)
    delta = F.coproduct(a, b)
    columns = {}
    for m in range(A.dim):
        for h in range(d_ab):
            col: Vec = {}
            for t, c in delta.column(h).items():
                i, k = divmod(t, d_b)
                for l, v in A.product(i, m).items():
                    vec_axpy(col, c * v, {l * d_b + k: CycNumber.one(F.N)})
            columns[m * d_ab + h] = col
    return Matrix(A.dim * d_b, A.dim * d_ab, F.N, columns)


def psi_left(F: HopfGFamily, a: Grade, b: Grade) -> Matrix:
    """H_a (x) H_b -> eps H_a (x) H_ab, x (x) y -> S_a^-1(y') x (x) y'' with Delta_{a^-1,ab}"""
    ab, ai = F.mul(a, b), F.inv(a)
    F.require(ab, ai)
    A = F.algebra(a)
    d_ab = F.dim(ab)
    delta = F.coproduct(ai, ab)
    S_inv = inverse(F.antipode(a))
    columns = {}
    for x in range(A.dim):
        for y in range(F.dim(b)):
            col: Vec = {}
            for t, c in delta.column(y).items():
                i, k = divmod(t, d_ab)
                sx = A.multiply(S_inv.column(i), A.basis(x))
                for l, v in sx.items():
                    vec_axpy(col, c * v, {l * d_ab + k: CycNumber.one(F.N)})
            columns[x * d_ab + y] = col
    return Matrix(A.dim * d_ab, A.dim * F.dim(b), F.N, columns)


def check_decomposition(F: HopfGFamily, a: Grade, b: Grade, side: str = "right") -> CheckReport:
    """phi and psi are mutually inverse module maps"""
    ab = F.mul(a, b)
    report = CheckReport(f"decomposition_{side}", {"grades": [F.label(a), F.label(b)]})
    big = tensor_module(regular_module(F, a), regular_module(F, b))
    if side == "right":
        phi, psi = phi_right(F, a, b), psi_right(F, a, b)
        free = tensor_module(regular_module(F, ab), trivial_twist_module(F, b))
    else:
        phi, psi = phi_left(F, a, b), psi_left(F, a, b)
        free = tensor_module(trivial_twist_module(F, a), regular_module(F, ab))
    report.record((psi @ phi).is_identity(), "psi phi != Id")
    report.record((phi @ psi).is_identity(), "phi psi != Id")
    report.merge(check_intertwiner(phi, free, big, "phi"))
    report.merge(check_intertwiner(psi, big, free, "psi"))
    return report


def check_integral_transport(F: HopfGFamily, sym, sym_left, a: Grade, b: Grade) -> CheckReport:
    """
    phi(1 (x) m) = 1 (x) m, (sym_ab (x) Id) psi = sym_a (x) g_b Id, and the
    left mirror phi^l(m (x) 1) = m (x) 1, (Id (x) sym^l_ab) psi^l = g_a^-1 Id (x) sym^l_b.
    """
    ab = F.mul(a, b)
    N = F.N
    A, B, AB = F.algebra(a), F.algebra(b), F.algebra(ab)
    report = CheckReport("integral_transport", {"grades": [F.label(a), F.label(b)]})

    phi = phi_right(F, a, b)
    for m in range(B.dim):
        report.record(
            phi.apply(tensor_vec(AB.unit, B.basis(m), B.dim)) == tensor_vec(A.unit, B.basis(m), B.dim),
            f"phi(1 (x) {B.labels[m]}) != 1 (x) {B.labels[m]}",
        )
    lhs = kron(Matrix.row_vector(sym.forms[ab], AB.dim, N), Matrix.identity(B.dim, N)) @ psi_right(F, a, b)
    rhs = kron(Matrix.row_vector(sym.forms[a], A.dim, N), B.left_matrix(F.pivot(b)))
    report.record(lhs == rhs, "(sym (x) Id) psi != sym (x) g Id")

    phl = phi_left(F, a, b)
    for m in range(A.dim):
        report.record(
            phl.apply(tensor_vec(A.basis(m), AB.unit, AB.dim)) == tensor_vec(A.basis(m), B.unit, B.dim),
            f"phi^l({A.labels[m]} (x) 1) != {A.labels[m]} (x) 1",
        )
    lhs = kron(Matrix.identity(A.dim, N), Matrix.row_vector(sym_left.forms[ab], AB.dim, N)) @ psi_left(F, a, b)
    rhs = kron(A.left_matrix(pivot_inverse(F, a)), Matrix.row_vector(sym_left.forms[b], B.dim, N))
    report.record(lhs == rhs, "(Id (x) sym^l) psi^l != g^-1 Id (x) sym^l")
    return report


# ============================================================================
# Random H-linear endomorphisms
# ============================================================================

def _random_vec(rng: random.Random, dim: int, N: int, density: int = 3) -> Vec:
    out: Vec = {}
    for i in rng.sample(range(dim), min(density, dim)):
        c = rng.choice((-2, -1, 1, 2))
        out[i] = CycNumber.rational(N, c)
    return out


def _rank_one(rng: random.Random, dim: int, N: int) -> Matrix:
    u = _random_vec(rng, dim, N)
    v = _random_vec(rng, dim, N)
    return Matrix(dim, dim, N, {j: {i: x * y for i, x in u.items()} for j, y in v.items()})


def random_endomorphism(
    F: HopfGFamily, a: Grade, b: Grade, seed: int, side: str = "right", terms: int = 2, validate: bool = False
) -> Matrix:
    """
    An H_ab-linear endomorphism of H_a (x) H_b built as
    phi (sum R_h (x) A) psi (right) or phi^l (sum A (x) R_h) psi^l (left),
    with R_h right multiplication and A a rank-one map of the trivial factor.
    """
    rng = random.Random(seed)
    ab = F.mul(a, b)
    N = F.N
    AB = F.algebra(ab)
    other = b if side == "right" else a
    d = F.dim(other)
    inner = Matrix.zeros(AB.dim * d, AB.dim * d, N)
    for _ in range(terms):
        R = AB.right_matrix(_random_vec(rng, AB.dim, N))
        A = _rank_one(rng, d, N)
        inner = inner + (kron(R, A) if side == "right" else kron(A, R))
    if side == "right":
        f = phi_right(F, a, b) @ inner @ psi_right(F, a, b)
    else:
        f = phi_left(F, a, b) @ inner @ psi_left(F, a, b)
    if validate:
        big = tensor_module(regular_module(F, a), regular_module(F, b))
        require_intertwiner(f, big, big)
    return f


def spanning_endomorphisms(F: HopfGFamily, a: Grade, b: Grade, side: str = "right") -> Iterator[Matrix]:
    """phi (R_{b_i} (x) E_jk) psi over all basis i and matrix units E_jk; spans End_H(H_a (x) H_b)"""
    ab = F.mul(a, b)
    N = F.N
    AB = F.algebra(ab)
    other = b if side == "right" else a
    d = F.dim(other)
    one = CycNumber.one(N)
    if side == "right":
        phi, psi = phi_right(F, a, b), psi_right(F, a, b)
    else:
        phi, psi = phi_left(F, a, b), psi_left(F, a, b)
    for i in range(AB.dim):
        R = AB.right_basis_matrix(i)
        for j in range(d):
            for k in range(d):
                E = Matrix(d, d, N, {k: {j: one}})
                yield phi @ (kron(R, E) if side == "right" else kron(E, R)) @ psi


def endomorphism_dimension(F: HopfGFamily, a: Grade) -> int:
    """dim End_H(H_a); equal to dim H_a since every endomorphism is a right multiplication"""
    M = regular_module(F, a)
    return len(hom_space(M, M))
