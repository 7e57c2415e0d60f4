"""
Verwaltet das Laden und Speichern der zentralen YAML-Konfigurationsdatei.
"""

import logging
import os
import threading
import yaml

DEFAULT_SETTINGS = {
    "enumeration_budget": 1 << 24,
    "table_budget": 1 << 20,
    "workers": 1,
    "sample_rejection": True,
    "max_rejections": 1000,
    "collapse_samples": 20000,
    "default_seed": 42,
    "log_level": "INFO",
    "log_file": "data/aritygap.log",
}

BUDGET_ENV = "ARITYGAP_BUDGET"
SETTINGS_ENV = "ARITYGAP_SETTINGS"


class ConfigManager:
    """Verwaltet das Laden und Speichern der zentralen YAML-Konfigurationsdatei."""

    def __init__(self, logger: logging.Logger, settings_file: str = None):
        self.logger = logger
        self.base_dir = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
        self.data_dir = os.path.join(self.base_dir, "data")
        self.settings_file = (
            settings_file
            or os.environ.get(SETTINGS_ENV)
            or os.path.join(self.data_dir, "settings.yaml")
        )
        self._lock = threading.Lock()
        self._ensure_config_files()

    def _ensure_config_files(self):
        """Stellt sicher, dass die Einstellungsdatei existiert."""
        if not os.path.exists(self.settings_file):
            os.makedirs(os.path.dirname(os.path.abspath(self.settings_file)), exist_ok=True)
            if self.safe_write(self.settings_file, DEFAULT_SETTINGS):
                self.logger.info(
                    f"Einstellungsdatei '{os.path.basename(self.settings_file)}' mit Standardwerten erstellt."
                )

    def safe_write(self, file_path: str, data: dict) -> bool:
        """Schreibt Daten atomar in die YAML-Datei, um Datenverlust zu vermeiden."""
        temp_file = file_path + ".tmp"
        try:
            with self._lock:
                with open(temp_file, "w", encoding="utf-8") as f:
                    yaml.dump(
                        data, f, indent=2, allow_unicode=True, default_flow_style=False
                    )
                os.replace(temp_file, file_path)
            return True
        except (IOError, yaml.YAMLError) as e:
            self.logger.error(f"Fehler beim Schreiben der Konfiguration: {e}")
            if os.path.exists(temp_file):
                os.remove(temp_file)
            return False

    def _load_settings(self) -> dict:
        try:
            with self._lock:
                with open(self.settings_file, "r", encoding="utf-8") as f:
                    content = yaml.safe_load(f)
        except (FileNotFoundError, yaml.YAMLError) as e:
            self.logger.error(f"Einstellungen konnten nicht geladen werden: {e}. Verwende Standardwerte.")
            return {}
        if content is None:
            return {}
        if not isinstance(content, dict):
            self.logger.warning("Einstellungsdatei enthält keine Zuordnung und wird ignoriert.")
            return {}
        unknown = sorted(set(content) - set(DEFAULT_SETTINGS))
        if unknown:
            self.logger.warning(f"Unbekannte Einstellungen werden ignoriert: {', '.join(map(str, unknown))}")
        return {key: value for key, value in content.items() if key in DEFAULT_SETTINGS}

    def _apply_environment(self, config: dict):
        raw = os.environ.get(BUDGET_ENV)
        if raw is None:
            return
        try:
            budget = int(raw)
            if budget < 1:
                raise ValueError(raw)
        except ValueError:
            self.logger.warning(f"{BUDGET_ENV}='{raw}' ist keine positive Ganzzahl und wird ignoriert.")
            return
        config["enumeration_budget"] = budget
        self.logger.debug(f"Aufzählungsbudget aus {BUDGET_ENV}: {budget}")

    def get_full_config(self) -> dict:
        """Standardwerte, überlagert von der Einstellungsdatei und den Umgebungsvariablen."""
        config = dict(DEFAULT_SETTINGS)
        config.update(self._load_settings())
        self._apply_environment(config)
        return config

    def resolve_path(self, path: str) -> str:
        """Relative Pfade aus den Einstellungen beziehen sich auf das Projektverzeichnis."""
        if not path or os.path.isabs(path):
            return path
        return os.path.join(self.base_dir, path)
