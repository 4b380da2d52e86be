"""weakstar: exact deciders and checkable certificates for weak* degeneracy."""

from importlib.metadata import version, PackageNotFoundError

try:
    __version__ = version("weakstar")
except PackageNotFoundError:  # pragma: no cover
    __version__ = "0.0.0"

__all__ = ["__version__"]
