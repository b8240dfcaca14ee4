"""Loguru sink setup shared by the CLI and the HTTP API."""

import sys

from loguru import logger

LOG_FORMAT = "{time:HH:mm:ss} | {level: <7} | {name}:{function} - {message}\n"


def _stderr_sink(message: str) -> None:
    # looked up per record so redirected streams (tests, pipes) are honoured
    sys.stderr.write(message)


def configure_logging(level: str = "WARNING") -> None:
    """Route all log records to stderr at ``level``.

    stdout is reserved for plan documents, so the default sink is replaced.
    Raises ValueError for an unknown level name.
    """
    logger.remove()
    logger.add(_stderr_sink, level=level.upper(), format=LOG_FORMAT, backtrace=False)
    logger.debug(f"Logging configured at {level.upper()}")
