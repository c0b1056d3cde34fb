"""Shared fixtures."""

from pathlib import Path

import numpy as np
import pytest

from packed_thinnings.config import reset_settings, set_debug_checks

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for randomized suites."""
    return np.random.default_rng(20240611)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(autouse=True)
def debug_checks():
    """Run every test with eager invariant checks, restoring afterwards."""
    set_debug_checks(True)
    yield
    set_debug_checks(True)


@pytest.fixture
def fresh_settings(monkeypatch):
    """Drop cached settings before and after a test that edits the environment."""
    reset_settings()
    yield monkeypatch
    monkeypatch.undo()
    reset_settings()
