import argparse
import logging
import sys
from dataclasses import dataclass
from typing import TextIO

from src.errors import ArityGapError, BudgetExceededError

from .commands import analyze, anf, classify, generate, search, sweep

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

COMMANDS = (analyze, anf, classify, sweep, search, generate)


@dataclass
class CommandContext:
    """Was jeder Befehl zur Laufzeit braucht."""

    config: dict
    logger: logging.Logger
    out: TextIO

    def emit(self, text: str):
        print(text, file=self.out)


class ArityGapCli:
    def __init__(self, parser: argparse.ArgumentParser, context: CommandContext):
        self.parser = parser
        self.context = context

    def run(self, argv=None) -> int:
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            return EXIT_OK if e.code in (0, None) else EXIT_INPUT
        if args.verbose:
            self.context.logger.setLevel(logging.DEBUG)

        try:
            return args.handler(args, self.context)
        except BudgetExceededError as e:
            self.context.logger.error(f"Budget überschritten: {e}")
            return EXIT_BUDGET
        except ArityGapError as e:
            self.context.logger.error(f"{type(e).__name__}: {e}")
            return EXIT_INPUT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aritygap",
        description="Wesentliche Variablen, Zhegalkin-Polynome und Stelligkeitslücken endlicher Funktionen.",
    )
    parser.add_argument("--verbose", action="store_true", help="Debug-Ausgaben auf stderr")
    parser.add_argument("--settings", metavar="PATH", help="alternative Einstellungsdatei")
    subparsers = parser.add_subparsers(dest="command", required=True)
    # Befehlsmodule registrieren
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def create_cli(config_manager=None, logger_instance=None, out=None) -> ArityGapCli:
    """
    Erstellt die Kommandozeile (Application Factory).
    """
    logger = logger_instance or logging.getLogger(__name__)
    if config_manager is not None:
        config = config_manager.get_full_config()
    else:
        from src.config_manager import DEFAULT_SETTINGS

        config = dict(DEFAULT_SETTINGS)
    context = CommandContext(config=config, logger=logger, out=out or sys.stdout)
    return ArityGapCli(build_parser(), context)
