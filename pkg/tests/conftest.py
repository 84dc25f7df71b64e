"""Shared fixtures; puts src/ on the import path."""

import sys
from pathlib import Path

import pytest

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from charclass.stiefel_manifold import validate  # noqa: E402

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR


@pytest.fixture
def w5_12():
    """W(5,2;1,2): the running example with p1 = 24 and w2 = 0."""
    return validate(5, 2, (1, 2))


@pytest.fixture
def small_defaults():
    """Verification parameters small enough for unit tests."""
    return {
        "ring": {"triples": 20, "coeff_range": [-4, 4], "caps": [2, 4]},
        "bundles": {
            "expressions": 15,
            "max_exponent": 3,
            "max_multiplicity": 3,
            "tensor_exponent_bound": 3,
        },
        "stiefel": {"n_max": 5, "l_max": 2, "gcd_samples": 30},
        "classify": {
            "identity_samples": 200,
            "n_max": 8,
            "k_max": 5,
            "l_abs_max": 20,
            "grid_n_max": 5,
            "grid_l_max": 2,
        },
    }
