import argparse
import sys

from src.logger import AppLogger
from src.config_manager import ConfigManager
from cli import create_cli


def _bootstrap_options(argv):
    """Liest --settings und --verbose vor, da Logger und Konfiguration vor der Kommandozeile entstehen."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--settings")
    parser.add_argument("--verbose", action="store_true")
    options, _ = parser.parse_known_args(argv)
    return options


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    options = _bootstrap_options(argv)

    # Logger zuerst, damit schon das Laden der Einstellungen protokolliert wird
    app_logger = AppLogger()
    logger = app_logger.get_logger()
    config_manager = ConfigManager(logger, settings_file=options.settings)
    config = config_manager.get_full_config()

    app_logger.set_level("DEBUG" if options.verbose else config["log_level"])
    if config.get("log_file"):
        app_logger.add_file_handler(config_manager.resolve_path(config["log_file"]))

    cli = create_cli(config_manager=config_manager, logger_instance=logger)
    return cli.run(argv)


if __name__ == "__main__":
    sys.exit(main())
