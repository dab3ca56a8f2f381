from __future__ import annotations

import json
from pathlib import Path

import pytest

from hopfg.config import SEED_ENV, RunConfig, default_config, load_config
from hopfg.errors import ConfigError


def test_missing_file_gets_the_defaults(tmp_path: Path) -> None:
    path = tmp_path / "config.json"
    config = load_config(path)
    assert path.exists()
    assert json.loads(path.read_text()) == default_config()
    assert config == RunConfig()
    assert config.seed_list() == list(range(10))


def test_overrides_skip_none(tmp_path: Path) -> None:
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"r": 3, "seeds": 4}))
    config = load_config(path, {"alpha": "1/3", "r": None, "suite": "integrals"})
    assert config.r == 3
    assert config.alpha == "1/3"
    assert config.suite == "integrals"
    assert config.seed_list() == [0, 1, 2, 3]


def test_seed_comes_from_the_environment(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv(SEED_ENV, "7")
    config = load_config(tmp_path / "config.json", {"seeds": 3})
    assert config.base_seed == 7
    assert config.seed_list() == [7, 8, 9]
    monkeypatch.setenv(SEED_ENV, "seven")
    with pytest.raises(ConfigError):
        load_config(tmp_path / "config.json")


def test_grade_pairs_are_normalised() -> None:
    config = RunConfig(grade_pairs=[["1/2", 0]]).validate()
    assert config.grade_pairs == [["1/2", "0"]]


@pytest.mark.parametrize(
    "data",
    [
        {"colour": "red"},
        {"suite": "everything"},
        {"instance": "quaternion"},
        {"side": "middle"},
        {"r": 1},
        {"seeds": -1},
        {"alpha": "half"},
        {"instance": "json"},
        {"instance": "group", "suite": "sl2-full"},
        {"grade_pairs": [["1/2"]]},
    ],
)
def test_bad_configuration(tmp_path: Path, data: dict) -> None:
    path = tmp_path / "config.json"
    path.write_text(json.dumps(data))
    with pytest.raises(ConfigError):
        load_config(path)


def test_unreadable_configuration(tmp_path: Path) -> None:
    path = tmp_path / "config.json"
    path.write_text("{not json")
    with pytest.raises(ConfigError):
        load_config(path)
    path.write_text("[1, 2]")
    with pytest.raises(ConfigError):
        load_config(path)
