import os

import yaml

from src.config_manager import BUDGET_ENV, DEFAULT_SETTINGS, SETTINGS_ENV, ConfigManager


def test_creates_settings_with_defaults(tmp_path, mocker):
    logger = mocker.Mock()
    path = tmp_path / "data" / "settings.yaml"
    manager = ConfigManager(logger, settings_file=str(path))
    assert path.exists()
    assert yaml.safe_load(path.read_text(encoding="utf-8")) == DEFAULT_SETTINGS
    assert manager.get_full_config() == DEFAULT_SETTINGS
    logger.info.assert_called_once()


def test_file_values_override_defaults(tmp_path, mocker):
    path = tmp_path / "settings.yaml"
    path.write_text("workers: 4\ndefault_seed: 7\nbridge_ip: 1.2.3.4\n", encoding="utf-8")
    logger = mocker.Mock()
    config = ConfigManager(logger, settings_file=str(path)).get_full_config()
    assert config["workers"] == 4
    assert config["default_seed"] == 7
    assert config["table_budget"] == DEFAULT_SETTINGS["table_budget"]
    assert "bridge_ip" not in config
    logger.warning.assert_called_once()


def test_broken_yaml_falls_back_to_defaults(tmp_path, mocker):
    path = tmp_path / "settings.yaml"
    path.write_text("workers: [1,\n", encoding="utf-8")
    logger = mocker.Mock()
    assert ConfigManager(logger, settings_file=str(path)).get_full_config() == DEFAULT_SETTINGS
    logger.error.assert_called_once()


def test_budget_environment_override(tmp_path, mocker):
    mocker.patch.dict(os.environ, {BUDGET_ENV: "1000"})
    manager = ConfigManager(mocker.Mock(), settings_file=str(tmp_path / "settings.yaml"))
    assert manager.get_full_config()["enumeration_budget"] == 1000


def test_invalid_budget_override_is_ignored(tmp_path, mocker):
    mocker.patch.dict(os.environ, {BUDGET_ENV: "viel"})
    logger = mocker.Mock()
    manager = ConfigManager(logger, settings_file=str(tmp_path / "settings.yaml"))
    assert manager.get_full_config()["enumeration_budget"] == DEFAULT_SETTINGS["enumeration_budget"]
    logger.warning.assert_called_once()


def test_settings_path_from_environment(tmp_path, mocker):
    path = tmp_path / "andere.yaml"
    path.write_text("max_rejections: 5\n", encoding="utf-8")
    mocker.patch.dict(os.environ, {SETTINGS_ENV: str(path)})
    manager = ConfigManager(mocker.Mock())
    assert manager.settings_file == str(path)
    assert manager.get_full_config()["max_rejections"] == 5


def test_safe_write_failure(tmp_path, mocker):
    logger = mocker.Mock()
    manager = ConfigManager(logger, settings_file=str(tmp_path / "settings.yaml"))
    mocker.patch("src.config_manager.yaml.dump", side_effect=yaml.YAMLError("kaputt"))
    target = tmp_path / "neu.yaml"
    assert not manager.safe_write(str(target), {"workers": 2})
    assert not target.exists()
    assert not (tmp_path / "neu.yaml.tmp").exists()
    logger.error.assert_called_once()


def test_resolve_path(tmp_path, mocker):
    manager = ConfigManager(mocker.Mock(), settings_file=str(tmp_path / "settings.yaml"))
    assert manager.resolve_path("data/x.log") == os.path.join(manager.base_dir, "data/x.log")
    assert manager.resolve_path("/tmp/x.log") == "/tmp/x.log"
    assert manager.resolve_path("") == ""
