"""
Right G-integrals, their left and symmetrised versions, and the comodulus.

A right G-integral is a family of forms mu_a on H_a with
(mu_a (x) Id) Delta_{a,b} = mu_ab(.) 1_b. Forms are sparse Vecs on the basis
of H_a, so mu_a(x) is a dot product with the coordinates of x.

The family is found grade by grade: the b = 1 relation cuts a line out of
H_a*, and the a^-1 relation pins the scale of every line against mu_1.
When a line is not one-dimensional on its own the whole window is solved as
one joint system instead.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Optional

from .errors import (
    InconsistentNormalization,
    IntegralSpaceDimension,
    NoNonvanishingWitness,
    NotUnimodular,
    PivotNotInvertible,
    RelationFails,
)
from .hopf_core import Grade, HopfGFamily, counit_of, element_inverse, pivot_inverse
from .linalg import Matrix, Vec, det, nullspace_of_rows, vec_axpy, vec_dot, vec_scale
from .report import CheckReport
from .scalar import CycNumber

logger = logging.getLogger(__name__)

RIGHT = "right"
LEFT = "left"


@dataclass
class GIntegral:
    """One form per window grade; side and whether the forms are symmetrised"""

    forms: dict[Grade, Vec]
    side: str = RIGHT
    symmetrised: bool = False
    normalization: str = ""
    meta: dict[str, Any] = field(default_factory=dict)

    def form(self, a: Grade) -> Vec:
        return self.forms[a]

    def evaluate(self, a: Grade, x: Vec, N: int) -> CycNumber:
        return vec_dot(self.forms[a], x, N)


def evaluate(form: Vec, x: Vec, N: int) -> CycNumber:
    return vec_dot(form, x, N)


def _pairs(F: HopfGFamily) -> list[tuple[Grade, Grade]]:
    return [(a, b) for a in F.window for b in F.window if F.in_window(F.mul(a, b))]


# ============================================================================
# Solving for mu
# ============================================================================

def _right_rows(F: HopfGFamily, a: Grade, b: Grade, offsets: dict[Grade, int]) -> list[Vec]:
    """
    Rows of (mu_a (x) Id) Delta_{a,b}(x_j) - mu_ab(x_j) 1_b = 0, one per basis
    x_j of H_ab and coordinate k of H_b. Unknowns of grade g start at offsets[g].
    """
    ab = F.mul(a, b)
    d_b = F.dim(b)
    delta = F.coproduct(a, b)
    unit_b = F.unit_vec(b)
    rows = []
    for j in range(F.dim(ab)):
        col = delta.column(j)
        per_k: dict[int, Vec] = {}
        for t, c in col.items():
            i, k = divmod(t, d_b)
            vec_axpy(per_k.setdefault(k, {}), c, {offsets[a] + i: CycNumber.one(F.N)})
        for k in set(per_k) | set(unit_b):
            row = per_k.get(k, {})
            if k in unit_b:
                vec_axpy(row, -unit_b[k], {offsets[ab] + j: CycNumber.one(F.N)})
            if row:
                rows.append(row)
    return rows


def integral_line(F: HopfGFamily, a: Grade) -> list[Vec]:
    """Basis of the forms on H_a satisfying the b = 1 relation"""
    F.require(a, F.unit_grade)
    rows = _right_rows(F, a, F.unit_grade, {a: 0})
    return nullspace_of_rows(rows, F.dim(a), F.N)


def _anchor_scale(F: HopfGFamily, nu: Vec) -> Vec:
    anchor = F.integral_anchor()
    if anchor is None:
        k = min(nu)
        return vec_scale(nu[k].inv(), nu)
    idx, value = anchor
    if idx not in nu:
        raise InconsistentNormalization(f"the integral vanishes at the anchor basis vector {idx}")
    return vec_scale(value / nu[idx], nu)


def _joint_solution(F: HopfGFamily) -> dict[Grade, Vec]:
    offsets: dict[Grade, int] = {}
    total = 0
    for a in F.window:
        offsets[a] = total
        total += F.dim(a)
    rows = []
    for a, b in _pairs(F):
        rows += _right_rows(F, a, b, offsets)
    space = nullspace_of_rows(rows, total, F.N)
    if len(space) != 1:
        raise IntegralSpaceDimension("window", len(space))
    sol = space[0]
    return {a: {i - offsets[a]: v for i, v in sol.items() if offsets[a] <= i < offsets[a] + F.dim(a)} for a in F.window}


def right_integral(F: HopfGFamily) -> GIntegral:
    """
    The right G-integral on the window, normalised by the family's anchor on
    mu_1 (or by making the first nonzero coordinate of mu_1 equal to 1).
    """
    one = F.unit_grade
    lines = {a: integral_line(F, a) for a in F.window}
    if all(len(line) == 1 for line in lines.values()):
        mu1 = _anchor_scale(F, lines[one][0])
        forms = {one: mu1}
        for a in F.window:
            if a == one:
                continue
            forms[a] = _fix_scale(F, a, lines[a][0], mu1)
        method = "per-grade"
    else:
        bad = next(a for a, line in lines.items() if len(line) != 1)
        logger.info("integral line at %s has dimension %d, solving jointly", F.label(bad), len(lines[bad]))
        forms = _joint_solution(F)
        if not forms[one]:
            raise IntegralSpaceDimension(F.label(one), 0)
        scaled = _anchor_scale(F, forms[one])
        c = next(scaled[k] / forms[one][k] for k in scaled)
        forms = {a: vec_scale(c, v) for a, v in forms.items()}
        method = "joint"
    anchor = F.integral_anchor()
    normalization = "anchor" if anchor is not None else "first coordinate of mu_1"
    logger.debug("right integral of %s solved (%s)", F.name, method)
    return GIntegral(forms, RIGHT, False, normalization, {"method": method})


def _fix_scale(F: HopfGFamily, a: Grade, nu: Vec, mu1: Vec) -> Vec:
    """The scalar c with c (nu (x) Id) Delta_{a,a^-1}(x) = mu_1(x) 1_{a^-1} for all x in H_1"""
    ai = F.inv(a)
    F.require(ai)
    d = F.dim(ai)
    delta = F.coproduct(a, ai)
    unit = F.unit_vec(ai)
    c: Optional[CycNumber] = None
    pending = []
    for j in range(F.dim(F.unit_grade)):
        u: Vec = {}
        for t, x in delta.column(j).items():
            i, k = divmod(t, d)
            if i in nu:
                vec_axpy(u, nu[i] * x, {k: CycNumber.one(F.N)})
        v = vec_scale(mu1.get(j, CycNumber.zero(F.N)), unit)
        pending.append((u, v))
        if c is None:
            for k, x in u.items():
                c = v.get(k, CycNumber.zero(F.N)) / x
                break
    if c is None or not c:
        raise InconsistentNormalization(f"no scale for mu_{F.label(a)} against mu_1")
    for u, v in pending:
        if vec_scale(c, u) != v:
            raise InconsistentNormalization(f"mu_{F.label(a)} cannot be scaled to match mu_1")
    return vec_scale(c, nu)


# ============================================================================
# Left and symmetrised integrals
# ============================================================================

def left_integral(F: HopfGFamily, mu: GIntegral) -> GIntegral:
    """mu^l_a = mu_{a^-1} o S_a"""
    forms = {}
    for a in F.window:
        S = F.antipode(a)
        src = mu.forms[F.inv(a)]
        form: Vec = {}
        for j in range(F.dim(a)):
            v = vec_dot(src, S.column(j), F.N)
            if v:
                form[j] = v
        forms[a] = form
    return GIntegral(forms, LEFT, False, mu.normalization)


def _twisted(F: HopfGFamily, form: Vec, a: Grade, g: Vec) -> Vec:
    """x -> form(g x)"""
    A = F.algebra(a)
    out: Vec = {}
    for j in range(A.dim):
        v = vec_dot(form, A.multiply(g, A.basis(j)), F.N)
        if v:
            out[j] = v
    return out


def symmetrise(F: HopfGFamily, mu: GIntegral) -> GIntegral:
    """Right: x -> mu_a(g_a x). Left: x -> mu^l_a(g_a^-1 x)"""
    forms = {}
    for a in F.window:
        g = F.pivot(a) if mu.side == RIGHT else pivot_inverse(F, a)
        forms[a] = _twisted(F, mu.forms[a], a, g)
    return GIntegral(forms, mu.side, True, mu.normalization)


# ============================================================================
# Relation checks
# ============================================================================

def check_integral(F: HopfGFamily, mu: GIntegral) -> CheckReport:
    """
    The defining relation of mu on every window pair:
    right (mu_a (x) Id) Delta_{a,b}(x) = mu_ab(x) 1_b,
    left (Id (x) mu_b) Delta_{a,b}(x) = mu_ab(x) 1_a,
    and the pivot-twisted versions when mu is symmetrised.
    """
    kind = ("symmetrised_" if mu.symmetrised else "") + f"{mu.side}_integral"
    report = CheckReport(kind, {"family": F.name})
    for a, b in _pairs(F):
        ab = F.mul(a, b)
        d_b = F.dim(b)
        delta = F.coproduct(a, b)
        if mu.side == RIGHT:
            form = mu.forms[a]
            twist = F.algebra(b).left_matrix(F.pivot(b)) if mu.symmetrised else None
            target_unit = F.unit_vec(b)
        else:
            form = mu.forms[b]
            twist = F.algebra(a).left_matrix(pivot_inverse(F, a)) if mu.symmetrised else None
            target_unit = F.unit_vec(a)
        for j in range(F.dim(ab)):
            lhs: Vec = {}
            for t, c in delta.column(j).items():
                i, k = divmod(t, d_b)
                if mu.side == RIGHT and i in form:
                    vec_axpy(lhs, form[i] * c, {k: CycNumber.one(F.N)})
                elif mu.side == LEFT and k in form:
                    vec_axpy(lhs, form[k] * c, {i: CycNumber.one(F.N)})
            if twist is not None:
                lhs = twist.apply(lhs)
            rhs = vec_scale(mu.forms[ab].get(j, CycNumber.zero(F.N)), target_unit)
            report.record(
                lhs == rhs,
                lambda a=a, b=b, j=j: f"grades ({F.label(a)}, {F.label(b)}) on {F.algebra(ab).labels[j]}",
            )
    report.values["normalization"] = mu.normalization
    return report


def check_unimodular(F: HopfGFamily) -> CheckReport:
    """The left and right cointegral lines of H_1 coincide"""
    one = F.unit_grade
    A = F.algebra(one)
    report = CheckReport("unimodular", {"family": F.name})
    lines = {}
    for side in (RIGHT, LEFT):
        rows = []
        for gen in F.generators(one):
            M = A.right_matrix(gen) if side == RIGHT else A.left_matrix(gen)
            M = M - Matrix.scalar(A.dim, CycNumber.one(F.N) * counit_of(F, gen))
            rows += [r for r in M.row_vecs() if r]
        lines[side] = nullspace_of_rows(rows, A.dim, F.N)
    r, l = lines[RIGHT], lines[LEFT]
    report.values["right_cointegrals"] = len(r)
    report.values["left_cointegrals"] = len(l)
    report.record(len(r) == 1 and len(l) == 1, f"cointegral spaces of dimension {len(r)} and {len(l)}")
    if len(r) == 1 and len(l) == 1:
        k = min(r[0])
        same = k in l[0] and vec_scale(r[0][k] / l[0][k], l[0]) == r[0]
        report.record(same, "left and right cointegrals are not proportional")
    return report


def is_unimodular(F: HopfGFamily) -> bool:
    return check_unimodular(F).passed


def check_symmetric_nondegenerate(F: HopfGFamily, sym: GIntegral, a: Grade) -> CheckReport:
    """sym_a(xy) = sym_a(yx) on basis pairs and det of the Gram matrix is nonzero"""
    if not is_unimodular(F):
        raise NotUnimodular(f"{F.name} is not unimodular")
    A = F.algebra(a)
    form = sym.forms[a]
    report = CheckReport("symmetric_nondegenerate", {"grade": F.label(a), "side": sym.side})
    gram_cols = []
    for j in range(A.dim):
        col: Vec = {}
        for i in range(A.dim):
            xy = vec_dot(form, A.product(i, j), F.N)
            yx = vec_dot(form, A.product(j, i), F.N)
            report.record(xy == yx, lambda i=i, j=j: f"not symmetric on ({A.labels[i]}, {A.labels[j]})")
            if xy:
                col[i] = xy
        gram_cols.append(col)
    d = det(Matrix.from_columns(A.dim, F.N, gram_cols))
    report.record(bool(d), "Gram determinant vanishes")
    report.values["gram_det"] = d
    return report



# ============================================================================
# Comodulus
# ============================================================================

def _apply_right_factor(F: HopfGFamily, form: Vec, a: Grade, b: Grade, x: Vec) -> Vec:
    """(Id (x) form_b) Delta_{a,b}(x)"""
    d_b = F.dim(b)
    out: Vec = {}
    for t, c in F.coproduct(a, b).apply(x).items():
        i, k = divmod(t, d_b)
        if k in form:
            vec_axpy(out, form[k] * c, {i: CycNumber.one(F.N)})
    return out


def comodulus(F: HopfGFamily, mu: GIntegral) -> dict[Grade, Vec]:
    """
    a_a from (Id (x) mu_1) Delta_{a,1}(x) = mu_a(x) a_a at a basis vector with
    mu_a(x) != 0, then verified against (Id (x) mu_b) Delta_{a,b} = mu_ab(.) a_a
    on every window b. Raises RelationFails when the verification fails.
    """
    one = F.unit_grade
    result = {}
    for a in F.window:
        form = mu.forms[a]
        if not form:
            raise NoNonvanishingWitness(f"mu_{F.label(a)} is identically zero")
        j = min(form)
        x = F.algebra(a).basis(j)
        result[a] = vec_scale(form[j].inv(), _apply_right_factor(F, mu.forms[one], a, one, x))
        for b in F.window:
            ab = F.mul(a, b)
            if not F.in_window(ab):
                continue
            A = F.algebra(ab)
            for k in range(A.dim):
                lhs = _apply_right_factor(F, mu.forms[b], a, b, A.basis(k))
                rhs = vec_scale(mu.forms[ab].get(k, CycNumber.zero(F.N)), result[a])
                if lhs != rhs:
                    raise RelationFails(f"comodulus relation fails at ({F.label(a)}, {F.label(b)}) on {A.labels[k]}")
    return result


def check_comodulus(F: HopfGFamily, mu: GIntegral) -> CheckReport:
    """a is grouplike with eps(a_1) = 1, a_a invertible and mu_{a^-1}(S_a x) = mu_a(a_a x)"""
    report = CheckReport("comodulus", {"family": F.name})
    try:
        a_fam = comodulus(F, mu)
    except (RelationFails, NoNonvanishingWitness) as e:
        report.error = str(e)
        return report
    report.record(True)
    report.record(counit_of(F, a_fam[F.unit_grade]) == 1, "eps(a_1) != 1")
    for a, b in _pairs(F):
        ab = F.mul(a, b)
        lhs = F.coproduct(a, b).apply(a_fam[ab])
        rhs = {i * F.dim(b) + k: u * v for i, u in a_fam[a].items() for k, v in a_fam[b].items()}
        report.record(lhs == rhs, f"Delta(a) != a (x) a at ({F.label(a)}, {F.label(b)})")
    for a in F.window:
        A = F.algebra(a)
        try:
            element_inverse(A, a_fam[a])
            report.record(True)
        except PivotNotInvertible as e:
            report.fail(f"a_{F.label(a)}: {e}")
        S = F.antipode(a)
        ai = F.inv(a)
        for j in range(A.dim):
            lhs = vec_dot(mu.forms[ai], S.column(j), F.N)
            rhs = vec_dot(mu.forms[a], A.multiply(a_fam[a], A.basis(j)), F.N)
            report.record(lhs == rhs, lambda a=a, j=j, A=A: f"mu(S x) != mu(a x) at {F.label(a)} on {A.labels[j]}")
    report.values["comodulus"] = {F.label(a): F.algebra(a).describe(v) for a, v in a_fam.items()}
    return report


def check_unibalanced(F: HopfGFamily, mu: GIntegral) -> CheckReport:
    """
    a_a = g_a^2 on the window, and the right and left symmetrised integrals
    agree. The two criteria are equivalent, so a disagreement between them is
    itself a failure.
    """
    report = CheckReport("unibalanced", {"family": F.name})
    try:
        a_fam = comodulus(F, mu)
    except (RelationFails, NoNonvanishingWitness) as e:
        report.error = str(e)
        return report
    sym_r = symmetrise(F, mu)
    sym_l = symmetrise(F, left_integral(F, mu))
    squares_ok = True
    forms_ok = True
    for a in F.window:
        A = F.algebra(a)
        g = F.pivot(a)
        sq = a_fam[a] == A.multiply(g, g)
        same = sym_r.forms[a] == sym_l.forms[a]
        squares_ok &= sq
        forms_ok &= same
        report.record(sq, f"a_{F.label(a)} != g_{F.label(a)}^2")
        report.record(same, f"left and right symmetrised integrals differ at {F.label(a)}")
    report.record(squares_ok == forms_ok, "a = g^2 and the symmetrised-integral criterion disagree")
    report.values["a_equals_g_squared"] = squares_ok
    report.values["symmetrised_integrals_agree"] = forms_ok
    return report


def is_unibalanced(F: HopfGFamily, mu: GIntegral) -> bool:
    return check_unibalanced(F, mu).passed


def integral_suite(F: HopfGFamily) -> tuple[list[CheckReport], dict[str, GIntegral]]:
    """Solve mu, derive its relatives and run every integral check"""
    mu = right_integral(F)
    mu_l = left_integral(F, mu)
    sym = symmetrise(F, mu)
    sym_l = symmetrise(F, mu_l)
    reports = [check_integral(F, x) for x in (mu, mu_l, sym, sym_l)]
    reports.append(check_comodulus(F, mu))
    uni = check_unimodular(F)
    reports.append(uni)
    if uni.passed:
        for a in F.window:
            reports.append(check_symmetric_nondegenerate(F, sym, a))
    reports.append(check_unibalanced(F, mu))
    return reports, {"right": mu, "left": mu_l, "symmetrised": sym, "symmetrised_left": sym_l}
