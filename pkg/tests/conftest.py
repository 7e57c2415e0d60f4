import io
import logging
import os

import pytest

from cli import create_cli
from src.config_manager import ConfigManager
from src.finite_function import FiniteFunction

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture
def data_path():
    def path(name):
        return os.path.join(DATA_DIR, name)

    return path


@pytest.fixture
def xor():
    return FiniteFunction(2, 2, 2, [0, 1, 1, 0])


@pytest.fixture
def and_():
    return FiniteFunction(2, 2, 2, [0, 0, 0, 1])


@pytest.fixture
def maj3():
    return FiniteFunction(2, 2, 3, [0, 0, 0, 1, 0, 1, 1, 1])


@pytest.fixture
def xor3():
    return FiniteFunction(2, 2, 3, [0, 1, 1, 0, 1, 0, 0, 1])


@pytest.fixture
def settings_file(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text('log_file: ""\n', encoding="utf-8")
    return str(path)


@pytest.fixture
def run_cli(settings_file, mocker):
    """Führt die Kommandozeile aus und liefert (Exit-Code, stdout)."""

    def run(*argv):
        out = io.StringIO()
        config_manager = ConfigManager(mocker.Mock(), settings_file=settings_file)
        cli = create_cli(config_manager, logging.getLogger("aritygap-tests"), out=out)
        return cli.run([str(arg) for arg in argv]), out.getvalue()

    return run
