from __future__ import annotations

"""Logging setup: stdlib loggers rendered through rich on stderr."""

import logging
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler

LOGGER_NAME = "weakstar"

stderr_console = Console(stderr=True)

_configured = False


def configure_logging(level: int | str = logging.WARNING, *, console: Optional[Console] = None) -> logging.Logger:
    """Attach a single RichHandler to the package logger (idempotent)."""

    global _configured
    logger = logging.getLogger(LOGGER_NAME)
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
    logger.setLevel(level)
    if not _configured:
        handler = RichHandler(
            console=console or stderr_console,
            show_path=False,
            rich_tracebacks=True,
            markup=False,
        )
        handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
        logger.addHandler(handler)
        logger.propagate = False
        _configured = True
    return logger


def get_logger(name: str) -> logging.Logger:
    if not name.startswith(LOGGER_NAME):
        name = f"{LOGGER_NAME}.{name}"
    return logging.getLogger(name)
