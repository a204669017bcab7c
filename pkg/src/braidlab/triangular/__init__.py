"""Triangular and diagonal braidings: certificates, flag search, detection."""

from .certificates import (
    DegenerateBasis,
    TriangularityCertificate,
    TriangularityViolation,
    check_triangular,
    flat_tau_matrix,
    predicted_flat_diagonal,
    verify_certificate,
)
from .detect import (
    HOLDS,
    INDETERMINATE,
    REFUTED,
    DetectionResult,
    DiagonalResult,
    detect_diagonal,
    detect_triangular,
)
from .flags import Flag, FlagNotInvariant, FlagSearch, find_invariant_flags, flag_is_invariant, line_operators

__all__ = [
    "DegenerateBasis", "DetectionResult", "DiagonalResult", "Flag", "FlagNotInvariant",
    "FlagSearch", "HOLDS", "INDETERMINATE", "REFUTED", "TriangularityCertificate",
    "TriangularityViolation", "check_triangular", "detect_diagonal", "detect_triangular",
    "find_invariant_flags", "flag_is_invariant", "flat_tau_matrix", "predicted_flat_diagonal",
    "line_operators", "verify_certificate",
]
