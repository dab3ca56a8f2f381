"""
JSON Hopf-data files.

Layout of a file::

    {
      "name": "...",                        optional
      "scalar_modulus": N,
      "group": {"elements": [...], "mul_table": [[...]], "unit": i, "inv": [...]},
      "window": ["g0", ...],                optional, defaults to every element
      "algebras": {"g": {"dim": n, "unit": [...], "mul": [[i, j, k, c], ...], "labels": [...]}},
      "coproduct": {"g,h": matrix},
      "counit": [...],
      "antipode": {"g": matrix},
      "pivot": {"g": [...]},
      "generators": {"g": [[...], ...]}     optional
    }

Scalars are integers, rational strings ("3/2"), or the CycNumber form
{"N": N, "coeffs": [["num", "den"], ...]}. A matrix is either a list of rows
or {"rows": m, "cols": n, "entries": [[i, j, c], ...]}.
"""

from __future__ import annotations

import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any

from .errors import SchemaError
from .hopf_core import FiniteGroup, GradedAlgebraData, HopfGFamily, TabulatedFamily
from .linalg import Matrix, Vec, sparse
from .scalar import CycNumber

logger = logging.getLogger(__name__)

REQUIRED = ("scalar_modulus", "group", "algebras", "coproduct", "counit", "antipode", "pivot")


# ============================================================================
# Scalars
# ============================================================================

def decode_scalar(value: Any, N: int) -> CycNumber:
    if isinstance(value, bool):
        raise SchemaError(f"boolean {value} is not a scalar")
    if isinstance(value, int):
        return CycNumber.rational(N, value)
    if isinstance(value, str):
        try:
            return CycNumber.rational(N, Fraction(value))
        except (ValueError, ZeroDivisionError):
            raise SchemaError(f"bad rational {value!r}") from None
    if isinstance(value, dict):
        try:
            c = CycNumber.from_json(value)
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise SchemaError(f"bad cyclotomic scalar {value!r}: {e}") from None
        if c.N == N:
            return c
        if N % c.N:
            raise SchemaError(f"scalar from Q(zeta_{c.N}) does not embed in Q(zeta_{N})")
        return c.embed(N)
    raise SchemaError(f"cannot read {value!r} as a scalar")


def encode_scalar(c: CycNumber) -> Any:
    if c.is_rational():
        v = c.rational_value()
        return v.numerator if v.denominator == 1 else str(v)
    return c.to_json()


def decode_vector(values: Any, n: int, N: int, where: str) -> Vec:
    if not isinstance(values, list) or len(values) != n:
        raise SchemaError(f"{where}: expected a list of {n} scalars")
    return sparse([decode_scalar(v, N) for v in values], N)


def encode_vector(v: Vec, n: int) -> list:
    return [encode_scalar(v[i]) if i in v else 0 for i in range(n)]


def decode_matrix(data: Any, rows: int, cols: int, N: int, where: str) -> Matrix:
    if isinstance(data, dict):
        if data.get("rows") != rows or data.get("cols") != cols:
            raise SchemaError(f"{where}: expected shape {rows}x{cols}, got {data.get('rows')}x{data.get('cols')}")
        columns: dict[int, Vec] = {}
        for entry in data.get("entries", []):
            if not isinstance(entry, list) or len(entry) != 3:
                raise SchemaError(f"{where}: entry {entry!r} is not [i, j, c]")
            i, j, c = entry
            if not (0 <= i < rows and 0 <= j < cols):
                raise SchemaError(f"{where}: entry ({i}, {j}) out of range")
            c = decode_scalar(c, N)
            if c:
                columns.setdefault(j, {})[i] = c
        return Matrix(rows, cols, N, columns)
    if not isinstance(data, list) or len(data) != rows:
        raise SchemaError(f"{where}: expected {rows} rows")
    dense = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != cols:
            raise SchemaError(f"{where}: row {i} should have {cols} entries")
        dense.append([decode_scalar(v, N) for v in row])
    return Matrix.from_dense(dense, N, cols)


def encode_matrix(M: Matrix) -> dict:
    return {
        "rows": M.rows,
        "cols": M.cols,
        "entries": [[i, j, encode_scalar(c)] for i, j, c in M.entries()],
    }


# ============================================================================
# Families
# ============================================================================

def _group(data: Any) -> FiniteGroup:
    try:
        elements = [str(e) for e in data["elements"]]
        table = data["mul_table"]
        unit = data["unit"]
        inv = data["inv"]
    except (KeyError, TypeError):
        raise SchemaError("group needs elements, mul_table, unit and inv") from None
    n = len(elements)
    if n == 0 or len(set(elements)) != n:
        raise SchemaError("group elements must be distinct and non-empty")
    if len(table) != n or any(len(row) != n for row in table):
        raise SchemaError(f"mul_table must be {n}x{n}")
    if any(not (isinstance(x, int) and 0 <= x < n) for row in table for x in row):
        raise SchemaError("mul_table entries must be element indices")
    if not (isinstance(unit, int) and 0 <= unit < n) or len(inv) != n:
        raise SchemaError("bad unit or inv")
    return FiniteGroup(elements, table, unit, inv)


def family_from_dict(data: dict) -> TabulatedFamily:
    missing = [k for k in REQUIRED if k not in data]
    if missing:
        raise SchemaError(f"missing keys: {', '.join(missing)}")
    N = data["scalar_modulus"]
    if not isinstance(N, int) or N < 1:
        raise SchemaError(f"scalar_modulus must be a positive integer, got {N!r}")
    group = _group(data["group"])

    def grade(label: str) -> int:
        if label not in group.elements:
            raise SchemaError(f"unknown grade {label!r}")
        return group.elements.index(label)

    window = [grade(str(g)) for g in data.get("window", group.elements)]

    algebras: dict[int, GradedAlgebraData] = {}
    for label, body in data["algebras"].items():
        a = grade(label)
        if not isinstance(body, dict):
            raise SchemaError(f"algebra {label} must be an object")
        dim = body.get("dim")
        if not isinstance(dim, int) or dim < 1:
            raise SchemaError(f"algebra {label}: dim must be a positive integer")
        mul: dict[tuple[int, int], Vec] = {}
        for entry in body.get("mul", []):
            if not isinstance(entry, list) or len(entry) != 4:
                raise SchemaError(f"algebra {label}: mul entry {entry!r} is not [i, j, k, c]")
            i, j, k, c = entry
            if not all(isinstance(x, int) and 0 <= x < dim for x in (i, j, k)):
                raise SchemaError(f"algebra {label}: mul index out of range in {entry!r}")
            c = decode_scalar(c, N)
            if c:
                target = mul.setdefault((i, j), {})
                target[k] = target[k] + c if k in target else c
                if not target[k]:
                    del target[k]
        labels = tuple(body.get("labels") or (f"b{i}" for i in range(dim)))
        if len(labels) != dim:
            raise SchemaError(f"algebra {label}: {len(labels)} labels for dimension {dim}")
        algebras[a] = GradedAlgebraData(
            a, dim, labels, decode_vector(body.get("unit"), dim, N, f"algebra {label} unit"), mul, N
        )

    for a in window:
        if a not in algebras:
            raise SchemaError(f"no algebra for window grade {group.label(a)}")
    dim = {a: A.dim for a, A in algebras.items()}

    coproducts = {}
    for key, m in data["coproduct"].items():
        parts = [p.strip() for p in str(key).split(",")]
        if len(parts) != 2:
            raise SchemaError(f"coproduct key {key!r} should be 'a,b'")
        a, b = grade(parts[0]), grade(parts[1])
        ab = group.mul(a, b)
        if not {a, b, ab} <= dim.keys():
            raise SchemaError(f"coproduct {key}: algebra missing")
        coproducts[(a, b)] = decode_matrix(m, dim[a] * dim[b], dim[ab], N, f"coproduct {key}")

    antipodes = {}
    for label, m in data["antipode"].items():
        a = grade(label)
        ai = group.inv(a)
        if not {a, ai} <= dim.keys():
            raise SchemaError(f"antipode {label}: algebra missing")
        antipodes[a] = decode_matrix(m, dim[ai], dim[a], N, f"antipode {label}")

    pivots = {grade(label): decode_vector(v, dim[grade(label)], N, f"pivot {label}") for label, v in data["pivot"].items()}
    for a in window:
        if a not in antipodes:
            raise SchemaError(f"no antipode for window grade {group.label(a)}")
        if a not in pivots:
            raise SchemaError(f"no pivot for window grade {group.label(a)}")

    if group.unit not in algebras:
        raise SchemaError("no algebra for the unit grade")
    counit = decode_vector(data["counit"], dim[group.unit], N, "counit")

    generators = None
    if "generators" in data:
        generators = {
            grade(label): [decode_vector(v, dim[grade(label)], N, f"generator of {label}") for v in vs]
            for label, vs in data["generators"].items()
        }

    family = TabulatedFamily(
        group, window, N, algebras, coproducts, counit, antipodes, pivots,
        generators=generators, name=str(data.get("name", "json")),
    )
    logger.debug("loaded %r", family)
    return family


def load_family(path: Path) -> TabulatedFamily:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as e:
        raise SchemaError(f"cannot read {path}: {e}") from None
    except json.JSONDecodeError as e:
        raise SchemaError(f"{path} is not valid JSON: {e}") from None
    if not isinstance(data, dict):
        raise SchemaError(f"{path}: top level must be an object")
    return family_from_dict(data)


def family_to_dict(F: HopfGFamily) -> dict:
    """Serialise F on its window; the window must be closed under products and inverses"""
    window = list(F.window)
    index = {a: i for i, a in enumerate(window)}
    try:
        table = [[index[F.mul(a, b)] for b in window] for a in window]
        inv = [index[F.inv(a)] for a in window]
    except KeyError:
        raise SchemaError("window is not closed under the group law") from None
    labels = [F.label(a) for a in window]

    def name(a) -> str:
        return labels[index[a]]

    algebras = {}
    for a in window:
        A = F.algebra(a)
        algebras[name(a)] = {
            "dim": A.dim,
            "labels": list(A.labels),
            "unit": encode_vector(A.unit, A.dim),
            "mul": [[i, j, k, encode_scalar(c)] for (i, j), p in sorted(A.mul.items()) for k, c in sorted(p.items())],
        }
    return {
        "name": F.name,
        "scalar_modulus": F.N,
        "group": {"elements": labels, "mul_table": table, "unit": index[F.unit_grade], "inv": inv},
        "algebras": algebras,
        "coproduct": {f"{name(a)},{name(b)}": encode_matrix(F.coproduct(a, b)) for a in window for b in window},
        "counit": encode_vector(F.counit(), F.dim(F.unit_grade)),
        "antipode": {name(a): encode_matrix(F.antipode(a)) for a in window},
        "pivot": {name(a): encode_vector(F.pivot(a), F.dim(a)) for a in window},
        "generators": {name(a): [encode_vector(g, F.dim(a)) for g in F.generators(a)] for a in window},
    }


def dump_family(F: HopfGFamily, path: Path) -> None:
    Path(path).write_text(json.dumps(family_to_dict(F), indent=1, sort_keys=True) + "\n")
