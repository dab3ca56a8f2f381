"""
Exact sparse linear algebra over Q(zeta_N).

Vectors are sparse dicts {index: CycNumber} with no stored zeros. A Matrix
keeps its columns in that format, because every structure map in the engine
is assembled column by column as the image of a basis vector.

Tensor factors always use the left factor as the major index:
(i_A, i_B) -> i_A * dim_B + i_B.
"""

from __future__ import annotations

import logging
import math
from typing import Iterable, Iterator, Optional, Sequence

from .errors import ModulusMismatch, NoSolution, ShapeMismatch, SingularMatrix
from .scalar import CycNumber, Rational

logger = logging.getLogger(__name__)

Vec = dict[int, CycNumber]


# ============================================================================
# Sparse vectors
# ============================================================================

def vec_axpy(y: Vec, a, x: Vec) -> Vec:
    """y += a*x in place"""
    for i, v in x.items():
        t = v * a
        old = y.get(i)
        if old is not None:
            t = old + t
        if t:
            y[i] = t
        else:
            y.pop(i, None)
    return y


def vec_add(u: Vec, v: Vec) -> Vec:
    out = dict(u)
    for i, b in v.items():
        t = out.get(i)
        t = b if t is None else t + b
        if t:
            out[i] = t
        else:
            out.pop(i, None)
    return out


def vec_sub(u: Vec, v: Vec) -> Vec:
    return vec_add(u, vec_scale(-1, v))


def vec_scale(a, v: Vec) -> Vec:
    if isinstance(a, CycNumber) and not a:
        return {}
    if not isinstance(a, CycNumber) and a == 0:
        return {}
    return {i: x * a for i, x in v.items()}


def vec_dot(u: Vec, v: Vec, N: int) -> CycNumber:
    if len(u) > len(v):
        u, v = v, u
    total = CycNumber.zero(N)
    for i, a in u.items():
        b = v.get(i)
        if b is not None:
            total = total + a * b
    return total


def basis_vec(i: int, N: int) -> Vec:
    return {i: CycNumber.one(N)}


def dense(v: Vec, n: int, N: int) -> list[CycNumber]:
    zero = CycNumber.zero(N)
    return [v.get(i, zero) for i in range(n)]


def sparse(values: Sequence, N: int) -> Vec:
    out = {}
    for i, x in enumerate(values):
        x = _as_cyc(x, N)
        if x:
            out[i] = x
    return out


def _as_cyc(x, N: int) -> CycNumber:
    if isinstance(x, CycNumber):
        if x.N != N:
            raise ModulusMismatch(f"entry lives in Q(zeta_{x.N}), matrix in Q(zeta_{N})")
        return x
    return CycNumber.rational(N, x)


# ============================================================================
# Matrix
# ============================================================================

class Matrix:
    """rows x cols matrix over Q(zeta_N), stored as sparse columns"""

    __slots__ = ("rows", "cols", "N", "_cols")

    def __init__(self, rows: int, cols: int, N: int, columns: Optional[dict[int, Vec]] = None):
        self.rows = rows
        self.cols = cols
        self.N = N
        self._cols = {j: c for j, c in (columns or {}).items() if c}

    # ------------------------------------------------------------------ builders

    @classmethod
    def zeros(cls, rows: int, cols: int, N: int) -> "Matrix":
        return cls(rows, cols, N)

    @classmethod
    def identity(cls, n: int, N: int) -> "Matrix":
        one = CycNumber.one(N)
        return cls(n, n, N, {j: {j: one} for j in range(n)})

    @classmethod
    def scalar(cls, n: int, c: CycNumber) -> "Matrix":
        if not c:
            return cls(n, n, c.N)
        return cls(n, n, c.N, {j: {j: c} for j in range(n)})

    @classmethod
    def from_dense(cls, entries: Sequence[Sequence], N: int, cols: Optional[int] = None) -> "Matrix":
        rows = len(entries)
        if cols is None:
            cols = len(entries[0]) if rows else 0
        columns: dict[int, Vec] = {}
        for i, row in enumerate(entries):
            if len(row) != cols:
                raise ShapeMismatch(f"row {i} has {len(row)} entries, expected {cols}")
            for j, x in enumerate(row):
                x = _as_cyc(x, N)
                if x:
                    columns.setdefault(j, {})[i] = x
        return cls(rows, cols, N, columns)

    @classmethod
    def from_columns(cls, rows: int, N: int, columns: Sequence[Vec]) -> "Matrix":
        return cls(rows, len(columns), N, {j: dict(c) for j, c in enumerate(columns)})

    @classmethod
    def row_vector(cls, form: Vec, cols: int, N: int) -> "Matrix":
        return cls(1, cols, N, {j: {0: v} for j, v in form.items()})

    # ------------------------------------------------------------------ access

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def column(self, j: int) -> Vec:
        return dict(self._cols.get(j, {}))

    def __getitem__(self, idx: tuple[int, int]) -> CycNumber:
        i, j = idx
        return self._cols.get(j, {}).get(i, CycNumber.zero(self.N))

    def entries(self) -> Iterator[tuple[int, int, CycNumber]]:
        for j in sorted(self._cols):
            col = self._cols[j]
            for i in sorted(col):
                yield i, j, col[i]

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self._cols.values())

    def row_vecs(self) -> list[Vec]:
        rows: list[Vec] = [{} for _ in range(self.rows)]
        for j, col in self._cols.items():
            for i, v in col.items():
                rows[i][j] = v
        return rows

    def to_dense(self) -> list[list[CycNumber]]:
        zero = CycNumber.zero(self.N)
        out = [[zero] * self.cols for _ in range(self.rows)]
        for i, j, v in self.entries():
            out[i][j] = v
        return out

    # ------------------------------------------------------------------ arithmetic

    def _same_field(self, other: "Matrix") -> None:
        if other.N != self.N:
            raise ModulusMismatch(f"matrices over Q(zeta_{self.N}) and Q(zeta_{other.N})")

    def apply(self, v: Vec) -> Vec:
        out: Vec = {}
        for k, x in v.items():
            col = self._cols.get(k)
            if col:
                vec_axpy(out, x, col)
        return out

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._same_field(other)
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot compose {self.shape} with {other.shape}")
        columns = {j: self.apply(col) for j, col in other._cols.items()}
        return Matrix(self.rows, other.cols, self.N, columns)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_field(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"cannot add {self.shape} and {other.shape}")
        columns = {j: dict(c) for j, c in self._cols.items()}
        for j, col in other._cols.items():
            columns[j] = vec_add(columns.get(j, {}), col)
        return Matrix(self.rows, self.cols, self.N, columns)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        return Matrix(self.rows, self.cols, self.N, {j: vec_scale(c, col) for j, col in self._cols.items()})

    def transpose(self) -> "Matrix":
        columns: dict[int, Vec] = {}
        for j, col in self._cols.items():
            for i, v in col.items():
                columns.setdefault(i, {})[j] = v
        return Matrix(self.cols, self.rows, self.N, columns)

    def trace(self) -> CycNumber:
        if self.rows != self.cols:
            raise ShapeMismatch(f"trace of non-square {self.shape}")
        total = CycNumber.zero(self.N)
        for j, col in self._cols.items():
            v = col.get(j)
            if v is not None:
                total = total + v
        return total

    # ------------------------------------------------------------------ comparison

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.N == other.N and self._cols == other._cols

    __hash__ = None

    def is_zero(self) -> bool:
        return not self._cols

    def is_identity(self) -> bool:
        return self == Matrix.identity(self.rows, self.N) if self.rows == self.cols else False

    def first_difference(self, other: "Matrix") -> Optional[tuple[int, int, CycNumber, CycNumber]]:
        """(i, j, self[i,j], other[i,j]) for the first unequal entry, or None"""
        if self.shape != other.shape:
            raise ShapeMismatch(f"cannot compare {self.shape} with {other.shape}")
        diff = self - other
        for i, j, _ in diff.entries():
            return i, j, self[i, j], other[i, j]
        return None

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols} over Q(zeta_{self.N}), nnz={self.nnz})"


def kron(A: Matrix, B: Matrix) -> Matrix:
    """Kronecker product, left factor major: (i_A*rows_B + i_B, j_A*cols_B + j_B)"""
    A._same_field(B)
    columns: dict[int, Vec] = {}
    for ja, col_a in A._cols.items():
        for jb, col_b in B._cols.items():
            columns[ja * B.cols + jb] = {
                ia * B.rows + ib: a * b
                for ia, a in col_a.items()
                for ib, b in col_b.items()
            }
    return Matrix(A.rows * B.rows, A.cols * B.cols, A.N, columns)


# ============================================================================
# Elimination
# ============================================================================

class _Elimination:
    """
    Row-by-row reduction to reduced echelon form.

    Rows are fed sparsest first. The leading column of the reduced incoming
    row becomes its pivot and is cleared from every earlier pivot row, so the
    pivot rows always form the reduced echelon basis of the rows seen so far
    (unique, whatever the feeding order).
    """

    def __init__(self, ncols: int, N: int):
        self.ncols = ncols
        self.N = N
        self.pivots: dict[int, Vec] = {}
        # (row index, pivot column) in acceptance order
        self.accepted: list[tuple[int, int]] = []

    def add_row(self, index: int, row: Vec) -> None:
        raise NotImplementedError

    def reduced(self, c: int) -> Vec:
        """The reduced echelon row with pivot column c (pivot entry 1)"""
        raise NotImplementedError

    def determinant(self) -> CycNumber:
        """det of the fed square matrix, given full rank"""
        raise NotImplementedError

    @classmethod
    def of_rows(cls, rows: Sequence[Vec], ncols: int, N: int) -> "_Elimination":
        ech = cls(ncols, N)
        order = sorted(range(len(rows)), key=lambda i: (len(rows[i]), i))
        if len(rows) > 500 or ncols > 500:
            logger.debug("eliminating %d rows x %d columns (%s)", len(rows), ncols, cls.__name__)
        for i in order:
            ech.add_row(i, rows[i])
        return ech

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _sign(self) -> int:
        return _permutation_sign(dict(self.accepted))


class _GaussJordan(_Elimination):
    """Field elimination: each pivot row is divided by its pivot on arrival"""

    def __init__(self, ncols: int, N: int):
        super().__init__(ncols, N)
        self.pivot_values: list[CycNumber] = []

    def add_row(self, index: int, row: Vec) -> None:
        r = dict(row)
        for c in [c for c in r if c in self.pivots]:
            coef = r.get(c)
            if coef:
                vec_axpy(r, -coef, self.pivots[c])
        if not r:
            return
        p = min(r)
        value = r[p]
        inv = value.inv()
        r = {k: v * inv for k, v in r.items()}
        for prow in self.pivots.values():
            coef = prow.get(p)
            if coef:
                vec_axpy(prow, -coef, r)
        self.pivots[p] = r
        self.accepted.append((index, p))
        self.pivot_values.append(value)

    def reduced(self, c: int) -> Vec:
        return self.pivots[c]

    def determinant(self) -> CycNumber:
        result = CycNumber.one(self.N)
        for value in self.pivot_values:
            result = result * value
        return result if self._sign() > 0 else -result


class _Bareiss(_Elimination):
    """
    Fraction-free elimination over Z[zeta_N].

    Each incoming row is first scaled into Z[zeta_N]. With d the current
    pivot, a pivot row is stored as d_c times its reduced echelon row, d_c the
    pivot at the time it was last touched. Every entry is then a minor of the
    scaled input, so it stays in Z[zeta_N], and the divisions by d below are
    exact. Rows the new pivot column does not meet are rescaled lazily.
    """

    def __init__(self, ncols: int, N: int):
        super().__init__(ncols, N)
        self.d = CycNumber.one(N)
        self.stamps: dict[int, CycNumber] = {}
        self.multipliers: list[int] = []

    def _current(self, c: int) -> Vec:
        row, stamp = self.pivots[c], self.stamps[c]
        if stamp != self.d:
            f = self.d / stamp
            row = {k: v * f for k, v in row.items()}
            self.pivots[c] = row
            self.stamps[c] = self.d
        return row

    def add_row(self, index: int, row: Vec) -> None:
        m = math.lcm(1, *(v.denominator for v in row.values()))
        d = self.d
        scale = d * m
        x = {k: v * scale for k, v in row.items()}
        for c in [c for c in row if c in self.pivots]:
            vec_axpy(x, -(row[c] * m), self._current(c))
        if not x:
            return
        p = min(x)
        u = x[p]
        inv_d = d.inv()
        for c, stored in list(self.pivots.items()):
            if p not in stored:
                continue
            prow = self._current(c)
            coef = prow[p]
            new = {k: v * u for k, v in prow.items()}
            vec_axpy(new, -coef, x)
            self.pivots[c] = {k: v * inv_d for k, v in new.items()}
            self.stamps[c] = u
        self.pivots[p] = x
        self.stamps[p] = u
        self.d = u
        self.accepted.append((index, p))
        self.multipliers.append(m)

    def reduced(self, c: int) -> Vec:
        inv = self.stamps[c].inv()
        return {k: v * inv for k, v in self.pivots[c].items()}

    def determinant(self) -> CycNumber:
        result = self.d / math.prod(self.multipliers)
        return result if self._sign() > 0 else -result

    def is_fraction_free(self) -> bool:
        return self.d.is_integral() and all(v.is_integral() for row in self.pivots.values() for v in row.values())


ELIMINATION = {"bareiss": _Bareiss, "gauss-jordan": _GaussJordan}


def _eliminate(rows: Sequence[Vec], ncols: int, N: int, method: str = "bareiss") -> _Elimination:
    try:
        cls = ELIMINATION[method]
    except KeyError:
        raise ValueError(f"unknown elimination {method!r}; expected one of {', '.join(ELIMINATION)}") from None
    return cls.of_rows(rows, ncols, N)


def nullspace(M: Matrix, method: str = "bareiss") -> list[Vec]:
    """Exact basis of {v : Mv = 0}, one vector per free column in increasing order"""
    ech = _eliminate(M.row_vecs(), M.cols, M.N, method)
    one = CycNumber.one(M.N)
    reduced = {c: ech.reduced(c) for c in ech.pivots}
    basis = []
    for f in range(M.cols):
        if f in reduced:
            continue
        v: Vec = {f: one}
        for c, prow in reduced.items():
            x = prow.get(f)
            if x:
                v[c] = -x
        basis.append(v)
    return basis


def nullspace_of_rows(rows: Sequence[Vec], ncols: int, N: int) -> list[Vec]:
    """nullspace() for a system given directly as sparse equation rows"""
    return nullspace(Matrix(len(rows), ncols, N, _rows_to_columns(rows)))


def _rows_to_columns(rows: Sequence[Vec]) -> dict[int, Vec]:
    columns: dict[int, Vec] = {}
    for i, row in enumerate(rows):
        for j, v in row.items():
            columns.setdefault(j, {})[i] = v
    return columns


def rank(M: Matrix, method: str = "bareiss") -> int:
    return _eliminate(M.row_vecs(), M.cols, M.N, method).rank


def solve(M: Matrix, b: Vec) -> Vec:
    """Some exact solution of Mx = b (free variables set to 0); raises NoSolution"""
    if any(i >= M.rows for i in b):
        raise ShapeMismatch(f"right-hand side longer than {M.rows} rows")
    rows = M.row_vecs()
    aug = M.cols
    for i, v in b.items():
        rows[i] = dict(rows[i])
        rows[i][aug] = v
    ech = _eliminate(rows, M.cols + 1, M.N)
    if aug in ech.pivots:
        raise NoSolution("inconsistent linear system")
    x: Vec = {}
    for c in ech.pivots:
        v = ech.reduced(c).get(aug)
        if v:
            x[c] = v
    return x


def inverse(M: Matrix) -> Matrix:
    if M.rows != M.cols:
        raise ShapeMismatch(f"inverse of non-square {M.shape}")
    n = M.rows
    one = CycNumber.one(M.N)
    rows = M.row_vecs()
    for i in range(n):
        rows[i] = dict(rows[i])
        rows[i][n + i] = one
    ech = _eliminate(rows, 2 * n, M.N)
    if ech.rank < n or any(c >= n for c in ech.pivots):
        raise SingularMatrix(f"matrix of size {n} has rank {sum(1 for c in ech.pivots if c < n)}")
    columns: dict[int, Vec] = {}
    for c in ech.pivots:
        for k, v in ech.reduced(c).items():
            if k >= n:
                columns.setdefault(k - n, {})[c] = v
    return Matrix(n, n, M.N, columns)


def det(M: Matrix, method: str = "bareiss") -> CycNumber:
    """Determinant: sign of the pivot permutation times the last fraction-free pivot (or the pivot product)"""
    if M.rows != M.cols:
        raise ShapeMismatch(f"determinant of non-square {M.shape}")
    ech = _eliminate(M.row_vecs(), M.cols, M.N, method)
    if ech.rank < M.rows:
        return CycNumber.zero(M.N)
    return ech.determinant()


def _permutation_sign(perm: dict[int, int]) -> int:
    seen = set()
    sign = 1
    for start in perm:
        if start in seen:
            continue
        length = 0
        k = start
        while k not in seen:
            seen.add(k)
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def rational_matrix(entries: Iterable[Iterable[Rational]], N: int) -> Matrix:
    return Matrix.from_dense([list(r) for r in entries], N)
