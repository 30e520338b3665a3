"""Shared fixtures; the engine is imported from src/ the same way main.py does it"""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))


@pytest.fixture(scope="session")
def repo_root() -> Path:
    return ROOT


@pytest.fixture(autouse=True)
def working_precision():
    from mpmath import mp

    previous = mp.dps
    mp.dps = 50
    yield
    mp.dps = previous
