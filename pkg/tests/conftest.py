from __future__ import annotations

from fractions import Fraction

import pytest

from hopfg.group_algebra import GroupAlgebraFamily
from hopfg.integrals import GIntegral, integral_suite
from hopfg.uqsl2 import UqSl2Family

HALF = Fraction(1, 2)


@pytest.fixture(scope="session")
def sl2() -> UqSl2Family:
    """uqsl2 at r = 2, alpha = 1/2: window {0, 1/2, 1, 3/2}, dim H_a = 8, N = 8"""
    return UqSl2Family(2, HALF)


@pytest.fixture(scope="session")
def sl2_integrals(sl2: UqSl2Family) -> tuple[list, dict[str, GIntegral]]:
    return integral_suite(sl2)


@pytest.fixture(scope="session")
def sl2_sym(sl2_integrals) -> GIntegral:
    return sl2_integrals[1]["symmetrised"]


@pytest.fixture(scope="session")
def sl2_sym_left(sl2_integrals) -> GIntegral:
    return sl2_integrals[1]["symmetrised_left"]


@pytest.fixture(scope="session")
def sl2_r3() -> UqSl2Family:
    return UqSl2Family(3, HALF)


@pytest.fixture(scope="session")
def group3() -> GroupAlgebraFamily:
    """k[Z/3] over Z/2"""
    return GroupAlgebraFamily(n=3, grading_order=2)


@pytest.fixture(scope="session")
def group3_integrals(group3: GroupAlgebraFamily) -> tuple[list, dict[str, GIntegral]]:
    return integral_suite(group3)


@pytest.fixture(autouse=True)
def _no_seed_env(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv("HOPFG_SEED", raising=False)
