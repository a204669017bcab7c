"""Quantum sl2 modules over Q(v) and the braidings c^f."""

from .module import (
    CommutationFactor,
    ConventionError,
    UqModule,
    UqVerdict,
    build_cf_braiding,
    build_simple_module,
    qint,
    theta_matrix,
    validate_uq_module,
    weight_support_holds,
)
from .report import UqReport, cartan_data, uq_report

__all__ = [
    "CommutationFactor", "ConventionError", "UqModule", "UqReport", "UqVerdict",
    "build_cf_braiding", "build_simple_module", "cartan_data", "qint", "theta_matrix",
    "uq_report", "validate_uq_module", "weight_support_holds",
]
