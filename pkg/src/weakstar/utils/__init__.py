"""Shared helpers: JSON I/O, seeding and logging."""

from . import jsonio
from .logs import configure_logging, get_logger, stderr_console
from .seeds import DEFAULT_SEED, seed_everything

__all__ = [
    "jsonio",
    "configure_logging",
    "get_logger",
    "stderr_console",
    "DEFAULT_SEED",
    "seed_everything",
]
