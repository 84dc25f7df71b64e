"""
Application settings and configuration.

This module contains all package-level settings including:
- Project paths
- Report and enumeration defaults
- Exit codes of the command-line surface
- Environment variable names
- Loading of the verification-suite defaults (config/verify_defaults.json)
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)

# Project root directory
PROJECT_ROOT = Path(__file__).parent.parent.parent

# Configuration and output directories
CONFIG_DIR = PROJECT_ROOT / "config"
VERIFY_DEFAULTS_PATH = CONFIG_DIR / "verify_defaults.json"
DEFAULT_OUTPUT_DIR = PROJECT_ROOT / "data" / "enumerations"

# Package settings
SETTINGS: Dict[str, Any] = {
    # Package metadata
    "app_subtitle": "Characteristic classes of right generalized complex projective Stiefel manifolds",

    # Report settings
    "schema_version": "1",
    "default_cap": 2,
    "default_format": "text",
    "enumerate_formats": ["tsv", "json-lines", "parquet"],

    # Verification settings
    "default_seed": 20240101,
    "seed_env_var": "CHARCLASS_SEED",

    # Batch evaluation
    "default_workers": 1,
}

# Exit codes of the CLI (sysexits-style for usage and I/O)
EXIT_CODES: Dict[str, int] = {
    "success": 0,
    "verification_failure": 1,
    "domain_rejection": 2,
    "usage": 64,
    "io_error": 74,
    "internal_error": 70,
}

# Built-in fallback for config/verify_defaults.json
_BUILTIN_VERIFY_DEFAULTS: Dict[str, Dict[str, Any]] = {
    "ring": {"triples": 1000, "coeff_range": [-9, 9], "caps": [2, 4]},
    "bundles": {
        "expressions": 200,
        "max_exponent": 6,
        "max_multiplicity": 4,
        "tensor_exponent_bound": 10,
    },
    "stiefel": {"n_max": 10, "l_max": 3, "gcd_samples": 500},
    "classify": {
        "identity_samples": 10000,
        "n_max": 12,
        "k_max": 8,
        "l_abs_max": 50,
        "grid_n_max": 10,
        "grid_l_max": 3,
    },
}


def load_verify_defaults(path: Optional[Path] = None) -> Dict[str, Dict[str, Any]]:
    """
    Load verification-suite defaults from JSON.

    Sections missing from the file are filled from the built-in defaults.

    Args:
        path: Path to the JSON file. Defaults to config/verify_defaults.json

    Returns:
        Dictionary mapping suite name to its parameter dictionary
    """
    config_path = Path(path) if path is not None else VERIFY_DEFAULTS_PATH

    merged = {name: dict(section) for name, section in _BUILTIN_VERIFY_DEFAULTS.items()}

    if not config_path.exists():
        logger.warning(f"Verify defaults file not found: {config_path}, using built-in defaults")
        return merged

    with open(config_path, "r", encoding="utf-8") as f:
        loaded = json.load(f)

    for name, section in loaded.items():
        merged.setdefault(name, {}).update(section)

    return merged


def resolve_seed(cli_seed: Optional[int]) -> int:
    """
    Resolve the verification seed.

    The CHARCLASS_SEED environment variable overrides the command-line value.

    Args:
        cli_seed: Seed given on the command line (None = not given)

    Returns:
        Seed to use

    Raises:
        ValueError: If the environment variable is not an integer, or the seed is negative
    """
    env_value = os.environ.get(SETTINGS["seed_env_var"])
    if env_value is not None and env_value.strip():
        try:
            seed = int(env_value)
        except ValueError:
            raise ValueError(
                f"{SETTINGS['seed_env_var']} must be an integer, got {env_value!r}"
            ) from None
        source = SETTINGS["seed_env_var"]
    elif cli_seed is not None:
        seed, source = cli_seed, "--seed"
    else:
        return SETTINGS["default_seed"]

    if seed < 0:
        raise ValueError(f"{source} must be >= 0, got {seed}")
    return seed


def get_output_path(file_name: str, output_dir: Optional[Path] = None) -> Path:
    """
    Get the file path for an enumeration output.

    Args:
        file_name: Output file name (e.g., 'grid_n10_l3.tsv')
        output_dir: Directory (defaults to data/enumerations/)

    Returns:
        Path object pointing to the output file
    """
    base = Path(output_dir) if output_dir is not None else DEFAULT_OUTPUT_DIR
    return base / file_name
