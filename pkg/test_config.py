#!/usr/bin/env python3
"""
Tests for settings loaded from the environment and the validated run
configuration of the command-line tool.
"""

import sys
from pathlib import Path

import pytest
from pydantic import ValidationError

sys.path.insert(0, str(Path(__file__).parent))

from config import get_settings, reload_settings
from models.run_config import HARD_CUBE_LIMIT, ComplexMode, RunConfig
from models.validators import ValidationUtils


@pytest.fixture(autouse=True)
def fresh_settings():
    yield
    reload_settings()


def test_defaults(monkeypatch):
    for name in ("ANNSKEIN_CUBE_CAP", "ANNSKEIN_R_MAX", "ANNSKEIN_SEED", "LOG_LEVEL", "ENVIRONMENT"):
        monkeypatch.delenv(name, raising=False)
    settings = reload_settings()
    assert settings.computation.cube_cap == 24
    assert settings.computation.default_r_max == 4
    assert settings.computation.default_seed == 7
    assert settings.logging.level == "WARNING"
    assert settings.is_development


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("ANNSKEIN_CUBE_CAP", "10")
    monkeypatch.setenv("ANNSKEIN_SEED", "99")
    monkeypatch.setenv("LOG_LEVEL", "debug")
    settings = reload_settings()
    assert get_settings() is settings
    assert settings.computation.cube_cap == 10
    assert settings.computation.default_seed == 99
    assert settings.logging.level == "DEBUG"


def test_cube_cap_above_hard_limit_is_rejected(monkeypatch):
    monkeypatch.setenv("ANNSKEIN_CUBE_CAP", str(HARD_CUBE_LIMIT + 1))
    with pytest.raises(ValidationError):
        reload_settings().computation


def test_cap_override(monkeypatch):
    monkeypatch.delenv("ANNSKEIN_CUBE_CAP", raising=False)
    settings = reload_settings()
    assert settings.get_cube_cap() == 24
    assert settings.get_cube_cap(3) == 3
    with pytest.raises(ValueError):
        settings.get_cube_cap(HARD_CUBE_LIMIT + 1)


def test_log_config_without_file(monkeypatch):
    monkeypatch.setenv("LOG_FILE_PATH", "")
    config = reload_settings().get_log_config(verbose=True)
    assert list(config["handlers"]) == ["console"]
    assert config["handlers"]["console"]["stream"] == "ext://sys.stderr"
    assert config["root"]["level"] == "DEBUG"


def test_log_config_with_file(monkeypatch, tmp_path):
    path = tmp_path / "logs" / "annskein.log"
    monkeypatch.setenv("LOG_FILE_PATH", str(path))
    config = reload_settings().get_log_config()
    assert config["handlers"]["file"]["filename"] == str(path)
    assert path.parent.is_dir()


def test_run_config_defaults():
    cfg = RunConfig(command="homology", braid="2: -1")
    assert cfg.mode == ComplexMode.SKEIN.value
    assert cfg.format == "table"
    assert cfg.progress


def test_run_config_needs_one_source():
    with pytest.raises(ValidationError):
        RunConfig(command="homology")
    with pytest.raises(ValidationError):
        RunConfig(command="homology", braid="2: 1", pd=Path("d.json"))


def test_random_only_for_check():
    with pytest.raises(ValidationError):
        RunConfig(command="pages", random=5)
    assert RunConfig(command="check", suite="d2", random=5).random == 5


def test_check_without_source():
    assert RunConfig(command="check", suite="cone").braid is None


def test_run_config_cap_range():
    with pytest.raises(ValidationError):
        RunConfig(command="homology", braid="1:", cap=HARD_CUBE_LIMIT + 1)


def test_braid_text_validation():
    assert ValidationUtils.validate_braid_text("3: 1 -2 1 -2")
    assert ValidationUtils.validate_braid_text("1:")
    assert not ValidationUtils.validate_braid_text("1 -2")
    assert ValidationUtils.split_braid_text("2: -1") == (2, (-1,))
    with pytest.raises(ValueError):
        ValidationUtils.split_braid_text("nonsense")


def test_resolution_word_validation():
    assert ValidationUtils.validate_resolution_word((0, 1, 1), 3)
    assert not ValidationUtils.validate_resolution_word((0, 2), 2)
    assert not ValidationUtils.validate_resolution_word((0,), 2)


def test_run_config_rejects_malformed_braid():
    with pytest.raises(ValidationError):
        RunConfig(command="homology", braid="2 1")
