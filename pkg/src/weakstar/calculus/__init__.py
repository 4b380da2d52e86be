"""The weak* operation calculus: moves, certificates, decisions and rewrites."""

from .certificate import (
    Certificate,
    CertificateFormatError,
    VerifyResult,
    certificate_from_rows,
    certificate_to_rows,
    dump_certificate,
    load_certificate,
    verify_certificate,
)
from .degree import ConstructionFailure, degree_certificate, degree_route
from .ops import IllegalOperationError, Operation, OpState, ReplayState, apply_op
from .search import (
    BudgetExceededError,
    CalculusSearch,
    SearchOutcome,
    clique_number,
    decide_strict_weak,
    decide_weak_star,
    strict_weak_degeneracy,
    weak_star_degeneracy,
)
from .split import SplitResult, certificate_split
from .strict import (
    StrictResult,
    decide_strict_degenerate,
    strict_certificate,
    strict_degeneracy,
    strict_finish,
)
from .transform import (
    CertificateTransferError,
    PreconditionError,
    expand_delete_save,
    is_normal,
    lift_certificate,
    normalize_certificate,
    transfer_certificate,
)

__all__ = [
    "Certificate",
    "CertificateFormatError",
    "VerifyResult",
    "certificate_from_rows",
    "certificate_to_rows",
    "dump_certificate",
    "load_certificate",
    "verify_certificate",
    "ConstructionFailure",
    "degree_certificate",
    "degree_route",
    "IllegalOperationError",
    "Operation",
    "OpState",
    "ReplayState",
    "apply_op",
    "BudgetExceededError",
    "CalculusSearch",
    "SearchOutcome",
    "clique_number",
    "decide_strict_weak",
    "decide_weak_star",
    "strict_weak_degeneracy",
    "weak_star_degeneracy",
    "SplitResult",
    "certificate_split",
    "StrictResult",
    "decide_strict_degenerate",
    "strict_certificate",
    "strict_degeneracy",
    "strict_finish",
    "CertificateTransferError",
    "PreconditionError",
    "expand_delete_save",
    "is_normal",
    "lift_certificate",
    "normalize_certificate",
    "transfer_certificate",
]
