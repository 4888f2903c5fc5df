from pathlib import Path

import pytest

from core.config import Config, _read_yaml, config


@pytest.fixture
def restore_config():
    yield config
    config.config_path = None
    config.load_config()


def test_singleton():
    assert Config() is config


def test_defaults(monkeypatch):
    monkeypatch.delenv("QEULER_ENUM_CEILING", raising=False)
    monkeypatch.delenv("QEULER_CACHE", raising=False)
    assert config.enumeration_ceiling == 10
    assert config.weight_cache_size > 0
    assert config.cache_path == Path("qeulerian-cache.txt")
    assert config.logging.level == "INFO"


def test_environment_overrides(monkeypatch, tmp_path):
    monkeypatch.setenv("QEULER_ENUM_CEILING", "7")
    monkeypatch.setenv("QEULER_CACHE", str(tmp_path / "c.txt"))
    assert config.enumeration_ceiling == 7
    assert config.cache_path == tmp_path / "c.txt"


def test_bad_ceiling_override(monkeypatch):
    monkeypatch.setenv("QEULER_ENUM_CEILING", "ten")
    with pytest.raises(ValueError, match="QEULER_ENUM_CEILING"):
        config.enumeration_ceiling


def test_jobs_zero_means_all_cores():
    assert config.jobs >= 1


def test_user_file_overlays_defaults(tmp_path, restore_config, monkeypatch):
    monkeypatch.delenv("QEULER_ENUM_CEILING", raising=False)
    user = tmp_path / "qeuler.yaml"
    user.write_text("enumeration:\n  ceiling: 8\n")
    config.reload(str(user))
    assert config.enumeration_ceiling == 8
    assert config.enumeration.jobs == 0
    assert config.database_path == Path("qeulerian.db")


def test_missing_user_file(tmp_path, restore_config):
    with pytest.raises(FileNotFoundError):
        config.reload(str(tmp_path / "absent.yaml"))


def test_empty_file_rejected(tmp_path):
    empty = tmp_path / "empty.yaml"
    empty.write_text("")
    with pytest.raises(ValueError, match="empty or invalid"):
        _read_yaml(empty)


def test_unknown_key():
    with pytest.raises(AttributeError):
        config.no_such_section
