"""Alon-Tarsi machinery: orientations, Eulerian counts, coefficients, f-AT."""

from .at import ATResult, at_number, is_f_at, is_f_AT
from .eulerian import SizeLimitError, eulerian_diff, eulerian_diff_weighted
from .extraction import ExtractedOrientation, certificate_to_at_orientation
from .orientation import EdgeWeighting, Orientation, all_orientations
from .polynomial import coefficient_oracle, polynomial_coefficients

__all__ = [
    "ATResult",
    "at_number",
    "is_f_at",
    "is_f_AT",
    "SizeLimitError",
    "eulerian_diff",
    "eulerian_diff_weighted",
    "ExtractedOrientation",
    "certificate_to_at_orientation",
    "EdgeWeighting",
    "Orientation",
    "all_orientations",
    "coefficient_oracle",
    "polynomial_coefficients",
]
