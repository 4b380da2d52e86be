from __future__ import annotations

"""Machine-checked counterexamples: the glued planar graph and the bipartite sharpness family."""

from .gadget import GadgetError, GadgetH, build_gadget_h, load_gadget, validate_gadget
from .glued import (
    ALL_PAIRS,
    GluedG,
    RefutationReport,
    ablation,
    build_glued_g,
    check_glued,
    extend_pair,
    verify_not_7_truncated_choosable,
)
from .sharpness import SharpnessBudgetError, SharpnessInstance, build_sharpness_instance

__all__ = [
    "ALL_PAIRS",
    "GadgetError",
    "GadgetH",
    "GluedG",
    "RefutationReport",
    "SharpnessBudgetError",
    "SharpnessInstance",
    "ablation",
    "build_gadget_h",
    "build_glued_g",
    "build_sharpness_instance",
    "check_glued",
    "extend_pair",
    "load_gadget",
    "validate_gadget",
    "verify_not_7_truncated_choosable",
]
