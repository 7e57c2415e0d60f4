# src/logger.py
import logging
import sys
import os


class AppLogger:
    """
    Initialisiert und konfiguriert einen Logger, der auf stderr und optional
    in eine Datei schreibt. stdout bleibt den Ausgaben der Befehle vorbehalten.
    """

    def __init__(self, log_file=None, level=logging.INFO):
        self.logger = logging.getLogger("ArityGapLogger")
        self.formatter = logging.Formatter(
            "%(asctime)s - %(levelname)s - [%(module)s.py:%(lineno)d] - %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
        )

        if not self.logger.handlers:
            self.logger.propagate = False
            ch = logging.StreamHandler(sys.stderr)
            ch.setFormatter(self.formatter)
            self.logger.addHandler(ch)

        if log_file:
            self.add_file_handler(log_file)
        self.set_level(level)

    def add_file_handler(self, log_file):
        """Hängt eine Logdatei an, sofern sie nicht schon angehängt ist."""
        path = os.path.abspath(log_file)
        for handler in self.logger.handlers:
            if isinstance(handler, logging.FileHandler) and handler.baseFilename == path:
                return
        os.makedirs(os.path.dirname(path), exist_ok=True)
        fh = logging.FileHandler(path, mode="a", encoding="utf-8")
        fh.setFormatter(self.formatter)
        self.logger.addHandler(fh)

    def set_level(self, level):
        """Akzeptiert logging-Konstanten oder Namen wie 'DEBUG'."""
        if isinstance(level, str):
            level = logging.getLevelName(level.upper())
            if not isinstance(level, int):
                level = logging.INFO
        self.logger.setLevel(level)

    def get_logger(self):
        """Gibt die konfigurierte Logger-Instanz zurück."""
        return self.logger

