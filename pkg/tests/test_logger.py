import logging

import pytest

from src.logger import AppLogger


@pytest.fixture
def app_logger():
    instance = AppLogger()
    yield instance
    for handler in list(instance.logger.handlers):
        if isinstance(handler, logging.FileHandler):
            instance.logger.removeHandler(handler)
            handler.close()
    instance.set_level(logging.INFO)


def test_get_logger_is_shared(app_logger):
    assert app_logger.get_logger() is logging.getLogger("ArityGapLogger")
    assert AppLogger().get_logger() is app_logger.get_logger()


@pytest.mark.parametrize("level,expected", [("debug", logging.DEBUG), ("WARNING", logging.WARNING), ("gibtsnicht", logging.INFO), (logging.ERROR, logging.ERROR)])
def test_set_level(app_logger, level, expected):
    app_logger.set_level(level)
    assert app_logger.get_logger().level == expected


def test_file_handler_is_added_once(app_logger, tmp_path):
    path = tmp_path / "logs" / "aritygap.log"
    app_logger.add_file_handler(str(path))
    app_logger.add_file_handler(str(path))
    file_handlers = [h for h in app_logger.logger.handlers if isinstance(h, logging.FileHandler)]
    assert len(file_handlers) == 1

    app_logger.get_logger().warning("Prüflauf abgeschlossen")
    file_handlers[0].flush()
    assert "WARNING - [test_logger.py" in path.read_text(encoding="utf-8")
