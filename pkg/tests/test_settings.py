import json

import pytest

from charclass.settings import (
    DEFAULT_OUTPUT_DIR,
    EXIT_CODES,
    SETTINGS,
    get_output_path,
    load_verify_defaults,
    resolve_seed,
)


def test_exit_codes():
    assert EXIT_CODES == {
        "success": 0,
        "verification_failure": 1,
        "domain_rejection": 2,
        "usage": 64,
        "io_error": 74,
        "internal_error": 70,
    }


def test_load_verify_defaults_from_repo_config():
    defaults = load_verify_defaults()
    assert set(defaults) == {"ring", "bundles", "stiefel", "classify"}
    assert defaults["classify"]["identity_samples"] == 10000
    assert defaults["bundles"]["tensor_exponent_bound"] == 10


def test_load_verify_defaults_merges_partial_file(tmp_path):
    path = tmp_path / "verify.json"
    path.write_text(json.dumps({"ring": {"triples": 5}}), encoding="utf-8")
    defaults = load_verify_defaults(path)
    assert defaults["ring"]["triples"] == 5
    assert defaults["ring"]["caps"] == [2, 4]
    assert defaults["stiefel"]["n_max"] == 10


def test_load_verify_defaults_missing_file(tmp_path):
    defaults = load_verify_defaults(tmp_path / "absent.json")
    assert defaults["ring"]["triples"] == 1000


def test_resolve_seed(monkeypatch):
    monkeypatch.delenv(SETTINGS["seed_env_var"], raising=False)
    assert resolve_seed(None) == SETTINGS["default_seed"]
    assert resolve_seed(7) == 7

    monkeypatch.setenv(SETTINGS["seed_env_var"], "99")
    assert resolve_seed(7) == 99

    monkeypatch.setenv(SETTINGS["seed_env_var"], "abc")
    with pytest.raises(ValueError):
        resolve_seed(7)


@pytest.mark.parametrize("env_value, cli_seed", [(None, -1), ("-5", 7), ("-5", None)])
def test_resolve_seed_rejects_negative(monkeypatch, env_value, cli_seed):
    if env_value is None:
        monkeypatch.delenv(SETTINGS["seed_env_var"], raising=False)
    else:
        monkeypatch.setenv(SETTINGS["seed_env_var"], env_value)
    with pytest.raises(ValueError, match=">= 0"):
        resolve_seed(cli_seed)


def test_resolve_seed_accepts_zero(monkeypatch):
    monkeypatch.delenv(SETTINGS["seed_env_var"], raising=False)
    assert resolve_seed(0) == 0


def test_get_output_path(tmp_path):
    assert get_output_path("grid.tsv") == DEFAULT_OUTPUT_DIR / "grid.tsv"
    assert get_output_path("grid.tsv", tmp_path) == tmp_path / "grid.tsv"
