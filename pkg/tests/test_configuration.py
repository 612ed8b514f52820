"""Test module for environment-driven configuration."""

import os
from pathlib import Path

import pytest

from polyprod.configuration import Configuration


def test_defaults(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    """Test the default tunables when nothing is set."""
    monkeypatch.chdir(tmp_path)
    config = Configuration.from_environment(threads=1)
    assert config.roots_brute_threshold == 100_000
    assert config.trial_division_bound == 1_000_000
    assert config.root_tolerance == 1e-10
    assert config.log_file is None


def test_environment_values(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    """Test that POLYPROD_* variables are coerced to the field types."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("POLYPROD_THREADS", "3")
    monkeypatch.setenv("POLYPROD_ROOT_TOLERANCE", "1e-8")
    monkeypatch.setenv("POLYPROD_LOG_LEVEL", "DEBUG")
    config = Configuration.from_environment()
    assert config.threads == 3
    assert config.root_tolerance == 1e-8
    assert config.log_level == "DEBUG"


def test_dotenv_file(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    """Test that a .env file in the working directory is read."""
    (tmp_path / ".env").write_text("POLYPROD_KERNEL_DIGITS_LIMIT=12\n")
    monkeypatch.chdir(tmp_path)
    try:
        config = Configuration.from_environment()
        assert config.kernel_digits_limit == 12
    finally:
        os.environ.pop("POLYPROD_KERNEL_DIGITS_LIMIT", None)


def test_overrides_win(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    """Test that explicit overrides beat the environment and None is ignored."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("POLYPROD_THREADS", "4")
    config = Configuration.from_environment(threads=2, log_file=None)
    assert config.threads == 2
    assert config.with_threads(None) is config
    assert config.with_threads(5).threads == 5


def test_invalid_environment_value(
    monkeypatch: pytest.MonkeyPatch, tmp_path: Path
) -> None:
    """Test that a value of the wrong type names the variable."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("POLYPROD_RHO_RESTARTS", "many")
    with pytest.raises(ValueError, match="POLYPROD_RHO_RESTARTS"):
        Configuration.from_environment()


@pytest.mark.parametrize(
    "overrides",
    [
        {"threads": 0},
        {"roots_brute_threshold": 1},
        {"rho_restarts": 0},
        {"root_tolerance": 2.0},
    ],
)
def test_validation(
    overrides: dict, monkeypatch: pytest.MonkeyPatch, tmp_path: Path
) -> None:
    """Test that unusable settings are rejected."""
    monkeypatch.chdir(tmp_path)
    with pytest.raises(ValueError):
        Configuration.from_environment(**overrides)
