"""Run configuration: config.json, then command-line overrides, then HOPFG_SEED"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import asdict, dataclass, field, fields
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

from .errors import ConfigError

logger = logging.getLogger(__name__)

CONFIG_FILE = Path("config.json")
SEED_ENV = "HOPFG_SEED"

INSTANCES = ("sl2", "group", "json")
SUITES = ("axioms", "integrals", "mtrace", "sl2-full", "all")
SIDES = ("right", "left", "both")


@dataclass
class RunConfig:
    instance: str = "sl2"
    r: int = 2
    alpha: str = "1/2"
    pivot_twist: int = 0
    group_order: int = 2
    json_path: Optional[str] = None
    suite: str = "all"
    seeds: int = 10
    base_seed: int = 0
    grade_pairs: list[list[str]] = field(default_factory=list)
    side: str = "both"
    exhaustive: bool = False
    output: str = "text"

    def validate(self) -> "RunConfig":
        if self.instance not in INSTANCES:
            raise ConfigError(f"instance must be one of {', '.join(INSTANCES)}, got {self.instance!r}")
        if self.suite not in SUITES:
            raise ConfigError(f"suite must be one of {', '.join(SUITES)}, got {self.suite!r}")
        if self.side not in SIDES:
            raise ConfigError(f"side must be one of {', '.join(SIDES)}, got {self.side!r}")
        if not isinstance(self.r, int) or self.r < 2:
            raise ConfigError(f"r must be an integer >= 2, got {self.r!r}")
        if not isinstance(self.seeds, int) or self.seeds < 0:
            raise ConfigError(f"seeds must be a non-negative integer, got {self.seeds!r}")
        if not isinstance(self.base_seed, int):
            raise ConfigError(f"base_seed must be an integer, got {self.base_seed!r}")
        if self.group_order < 1:
            raise ConfigError("group_order must be positive")
        try:
            Fraction(str(self.alpha))
        except (ValueError, ZeroDivisionError):
            raise ConfigError(f"alpha must be a rational number, got {self.alpha!r}") from None
        if self.instance == "json" and not self.json_path:
            raise ConfigError("instance 'json' needs json_path")
        if self.instance != "sl2" and self.suite == "sl2-full":
            raise ConfigError("the sl2-full suite needs the sl2 instance")
        for pair in self.grade_pairs:
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise ConfigError(f"grade pair {pair!r} should have two entries")
        self.grade_pairs = [[str(a), str(b)] for a, b in self.grade_pairs]
        return self

    @property
    def alpha_value(self) -> Fraction:
        return Fraction(str(self.alpha))

    def seed_list(self) -> list[int]:
        return [self.base_seed + i for i in range(self.seeds)]

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def default_config() -> dict[str, Any]:
    return RunConfig().to_dict()


def load_config(path: Path = CONFIG_FILE, overrides: Optional[dict[str, Any]] = None) -> RunConfig:
    """Read path (writing the defaults there if it does not exist) and apply overrides"""
    path = Path(path)
    if not path.exists():
        data = default_config()
        path.write_text(json.dumps(data, indent=2) + "\n")
        logger.info("wrote default configuration to %s", path)
    else:
        try:
            data = json.loads(path.read_text())
        except json.JSONDecodeError as e:
            raise ConfigError(f"{path} is not valid JSON: {e}") from None
        if not isinstance(data, dict):
            raise ConfigError(f"{path}: top level must be an object")

    known = {f.name for f in fields(RunConfig)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError(f"{path}: unknown keys {', '.join(unknown)}")
    merged = {**data, **{k: v for k, v in (overrides or {}).items() if v is not None}}

    env = os.environ.get(SEED_ENV)
    if env is not None:
        try:
            merged["base_seed"] = int(env)
        except ValueError:
            raise ConfigError(f"{SEED_ENV}={env!r} is not an integer") from None

    return RunConfig(**merged).validate()
