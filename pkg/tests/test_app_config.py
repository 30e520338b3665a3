import json

from core.app_config import DEFAULT_CONFIG_FILE, DEFAULT_SETTINGS, AppConfig


def test_defaults_without_a_file(tmp_path):
    config = AppConfig(tmp_path / "missing.json")
    assert config.settings == DEFAULT_SETTINGS
    assert config.get("numerics.precision") == 50
    assert config.get("numerics.unknown", "fallback") == "fallback"


def test_shipped_file_mirrors_the_defaults():
    assert json.loads(DEFAULT_CONFIG_FILE.read_text()) == DEFAULT_SETTINGS


def test_partial_file_is_merged(tmp_path):
    path = tmp_path / "engine.json"
    path.write_text(json.dumps({"output": {"format": "json"}}))
    config = AppConfig(path)
    assert config.get("output.format") == "json"
    assert config.get("output.significant_digits") == 12
    assert config.get("series.sweep") == "jacobi"


def test_broken_file_falls_back(tmp_path, caplog):
    path = tmp_path / "engine.json"
    path.write_text("{not json")
    config = AppConfig(path)
    assert config.settings == DEFAULT_SETTINGS
    assert "Error loading config" in caplog.text


def test_set_and_persist(tmp_path):
    path = tmp_path / "engine.json"
    config = AppConfig(path)
    config.set("statistics.p_max", 40, persist=True)
    config.set("oracle.show_progress", True)
    reloaded = AppConfig(path)
    assert reloaded.get("statistics.p_max") == 40
    assert reloaded.get("oracle.show_progress") is False


def test_defaults_are_not_shared(tmp_path):
    first = AppConfig(tmp_path / "a.json")
    first.set("verify.orders", 9)
    assert AppConfig(tmp_path / "b.json").get("verify.orders") == 3
