"""Application entry point for the Twin City kernel."""

import logging
import sys

from rich.logging import RichHandler

from twincity.config import get_settings

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def setup_logging(level: str | None = None) -> None:
    """Configure application logging.

    Results go to stdout, so every log record is sent to stderr (through
    rich when stderr is a terminal) and optionally to the configured file.

    Args:
        level: Override for the configured log level
    """
    settings = get_settings()
    level_name = (level or settings.log_level).upper()

    handlers: list[logging.Handler] = []
    if sys.stderr.isatty():
        handlers.append(RichHandler(show_path=False, rich_tracebacks=True))
    else:
        handlers.append(logging.StreamHandler(sys.stderr))
    if settings.log_file:
        handlers.append(logging.FileHandler(settings.log_file, encoding="utf-8"))

    logging.basicConfig(
        level=getattr(logging, level_name, logging.WARNING),
        format=LOG_FORMAT,
        datefmt=DATE_FORMAT,
        handlers=handlers,
        force=True,
    )


def main() -> int:
    """Main entry point, delegating to the command line front end."""
    from twincity.cli.main import main as cli_main

    return cli_main()


if __name__ == "__main__":
    sys.exit(main())
