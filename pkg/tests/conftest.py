from pathlib import Path

import pytest

from hvnfinite.corpus import group_symmetric
from hvnfinite.group_core import group_cyclic
from hvnfinite.utils.config import Limits

SAMPLES_DIR = Path(__file__).resolve().parent.parent / "samples"


@pytest.fixture(autouse=True)
def _default_caps(monkeypatch):
    monkeypatch.delenv("HVN_ORDER_CAP", raising=False)


@pytest.fixture
def samples_dir() -> Path:
    return SAMPLES_DIR


@pytest.fixture
def limits() -> Limits:
    return Limits()


@pytest.fixture
def s3():
    return group_symmetric(3)


@pytest.fixture
def c4():
    return group_cyclic(4)
