from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import pytest

from hopfg.errors import SchemaError
from hopfg.group_algebra import GroupAlgebraFamily
from hopfg.hopf_core import check_all_axioms
from hopfg.integrals import right_integral
from hopfg.schema import decode_matrix, decode_scalar, dump_family, family_from_dict, family_to_dict, load_family
from hopfg.scalar import CycNumber, make_root_of_unity


def _sweedler_like() -> dict:
    """k[Z/2] over Z/2 written by hand, rows-form matrices"""
    group = {"elements": ["e", "s"], "mul_table": [[0, 1], [1, 0]], "unit": 0, "inv": [0, 1]}
    algebra = {"dim": 2, "unit": [1, 0], "mul": [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1]], "labels": ["1", "x"]}
    delta = [[1, 0], [0, 0], [0, 0], [0, 1]]
    antipode = [[1, 0], [0, 1]]
    return {
        "name": "k[Z/2] by hand",
        "scalar_modulus": 1,
        "group": group,
        "algebras": {"e": algebra, "s": algebra},
        "coproduct": {f"{a},{b}": delta for a in "es" for b in "es"},
        "counit": [1, 1],
        "antipode": {"e": antipode, "s": antipode},
        "pivot": {"e": [1, 0], "s": [1, 0]},
    }


def test_hand_written_family_loads_and_passes(tmp_path: Path) -> None:
    path = tmp_path / "family.json"
    path.write_text(json.dumps(_sweedler_like()), encoding="utf-8")
    F = load_family(path)
    assert F.name == "k[Z/2] by hand"
    assert [F.label(a) for a in F.window] == ["e", "s"]
    assert all(r.passed for r in check_all_axioms(F))
    assert right_integral(F).forms[0] == {0: CycNumber.one(1)}


def test_dump_and_load_preserve_structure_maps(tmp_path: Path) -> None:
    F = GroupAlgebraFamily(n=3, grading_order=2)
    path = tmp_path / "z3.json"
    dump_family(F, path)
    G = load_family(path)
    for a in F.window:
        assert G.antipode(a) == F.antipode(a)
        assert G.pivot(a) == F.pivot(a)
        for b in F.window:
            assert G.coproduct(a, b) == F.coproduct(a, b)
    assert family_to_dict(G)["group"] == family_to_dict(F)["group"]


def test_scalars() -> None:
    assert decode_scalar(3, 8) == 3
    assert decode_scalar("-3/4", 8) == CycNumber.rational(8, Fraction(-3, 4))
    z = make_root_of_unity(4, 1)
    assert decode_scalar(z.to_json(), 8) == make_root_of_unity(8, 2)
    with pytest.raises(SchemaError):
        decode_scalar(True, 8)
    with pytest.raises(SchemaError):
        decode_scalar("1/0", 8)
    with pytest.raises(SchemaError):
        decode_scalar(make_root_of_unity(3, 1).to_json(), 8)


def test_matrix_forms() -> None:
    sparse_form = {"rows": 2, "cols": 2, "entries": [[0, 1, "1/2"]]}
    dense_form = [[0, "1/2"], [0, 0]]
    assert decode_matrix(sparse_form, 2, 2, 1, "m") == decode_matrix(dense_form, 2, 2, 1, "m")
    with pytest.raises(SchemaError):
        decode_matrix({"rows": 2, "cols": 3, "entries": []}, 2, 2, 1, "m")
    with pytest.raises(SchemaError):
        decode_matrix({"rows": 2, "cols": 2, "entries": [[2, 0, 1]]}, 2, 2, 1, "m")
    with pytest.raises(SchemaError):
        decode_matrix([[1, 0]], 2, 2, 1, "m")


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.pop("counit"),
        lambda d: d.update(scalar_modulus=0),
        lambda d: d["group"].update(mul_table=[[0, 1]]),
        lambda d: d["algebras"].pop("s"),
        lambda d: d["antipode"].pop("s"),
        lambda d: d["pivot"].update(t=[1, 0]),
        lambda d: d.update(window=["e", "t"]),
        lambda d: d["coproduct"].update({"e": [[1]]}),
        lambda d: d["algebras"]["e"].update(mul=[[0, 0, 5, 1]]),
    ],
)
def test_malformed_files_are_rejected(mutate) -> None:
    data = _sweedler_like()
    mutate(data)
    with pytest.raises(SchemaError):
        family_from_dict(data)


def test_unreadable_files(tmp_path: Path) -> None:
    with pytest.raises(SchemaError):
        load_family(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(SchemaError):
        load_family(bad)
    bad.write_text("[]", encoding="utf-8")
    with pytest.raises(SchemaError):
        load_family(bad)
