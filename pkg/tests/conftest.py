from pathlib import Path

import pytest

from bcnobs import load_bcn
from bcnobs.pairgraph import build

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


def fixture_path(name: str) -> Path:
    return FIXTURE_DIR / f"{name}.json"


def golden_text(name: str) -> str:
    return (GOLDEN_DIR / f"{name}.dot").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def bcn5():
    return load_bcn(fixture_path("bcn5"))


@pytest.fixture(scope="session")
def bcn6():
    return load_bcn(fixture_path("bcn6"))


@pytest.fixture(scope="session")
def bcn7():
    return load_bcn(fixture_path("bcn7"))


@pytest.fixture(scope="session")
def graph5(bcn5):
    return build(bcn5)


@pytest.fixture(scope="session")
def graph6(bcn6):
    return build(bcn6)


@pytest.fixture(scope="session")
def graph7(bcn7):
    return build(bcn7)
