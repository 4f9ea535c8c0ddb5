import logging
import sys

from groupoid_card.core.config import settings

LOG_FORMAT = "%(asctime)s %(levelname)s [%(name)s] %(message)s"


def configure_logging(level: str | None = None) -> None:
    """
    Configure the package logger

    Logs go to standard error so that command output on standard output
    stays byte-deterministic.

    Args:
        level: Explicit level name; defaults to settings.LOG_LEVEL
               (DEBUG when settings.DEBUG is set)
    """
    if level is None:
        level = "DEBUG" if settings.DEBUG else settings.LOG_LEVEL

    logger = logging.getLogger("groupoid_card")
    logger.setLevel(level.upper())
    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)
