"""
Shared fixtures.

    pytest                      # fast suite, seed from POLYFLAG_SEED
    pytest --seed 7             # reproduce a randomized run
    pytest --run-slow           # include the exhaustive sweeps
"""

import json
import random
import sys
from pathlib import Path

import pytest

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.complex.io import load_complex
from src.config import get_config
from src.logging_config import setup_logging

CORPUS_DIR = project_root / "data" / "corpus"
GOLDENS_DIR = project_root / "data" / "goldens"


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=None, help="Seed for randomized tests (default: POLYFLAG_SEED)")
    parser.addoption("--run-slow", action="store_true", default=False, help="Run tests marked slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip_slow = pytest.mark.skip(reason="slow sweep; use --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session", autouse=True)
def structured_logging():
    setup_logging(log_level="WARNING")


@pytest.fixture
def seed(request) -> int:
    value = request.config.getoption("--seed")
    return value if value is not None else get_config().random_seed


@pytest.fixture
def rng(seed) -> random.Random:
    return random.Random(seed)


@pytest.fixture
def corpus():
    """Load a corpus complex by name: corpus("pentagon")."""
    def load(name: str):
        return load_complex(CORPUS_DIR / f"{name}.scx")
    return load


@pytest.fixture
def corpus_path():
    def path(name: str) -> str:
        return str(CORPUS_DIR / f"{name}.scx")
    return path


def golden_names():
    return sorted(p.stem for p in GOLDENS_DIR.glob("*.json"))


def load_golden(name: str) -> dict:
    return json.loads((GOLDENS_DIR / f"{name}.json").read_text(encoding="utf-8"))
