import json
import sys
from functools import lru_cache
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

from rcpkit.ring import build, matrix, product, quotient, upper_triangular, zmod  # noqa: E402

settings.register_profile("default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=300, deadline=None)
settings.load_profile("default")

GOLDEN = json.loads((Path(__file__).parent / "golden" / "golden.json").read_text())

NAMED = {
    "zmod2": zmod(2),
    "zmod4": zmod(4),
    "zmod6": zmod(6),
    "zmod8": zmod(8),
    "zmod12": zmod(12),
    "ut2_zmod2": upper_triangular(2, zmod(2)),
    "ut2_zmod3": upper_triangular(2, zmod(3)),
    "m2_zmod2": matrix(2, zmod(2)),
    "m2_zmod3": matrix(2, zmod(3)),
    "zmod2_x_zmod2": product(zmod(2), zmod(2)),
    "zmod2_x_zmod4": product(zmod(2), zmod(4)),
    "zmod8_mod_4": quotient(zmod(8), [4]),
}


@lru_cache(maxsize=None)
def named_ring(name: str):
    return build(NAMED[name])


@pytest.fixture(scope="session")
def ring():
    return named_ring


@pytest.fixture(scope="session")
def golden():
    return GOLDEN
