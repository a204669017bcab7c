"""Exact arithmetic and linear algebra over Q and Q(v)."""

from .eigen import EigenReport, SimulDiagResult, charpoly, eigen, field_roots, minimal_polynomial, simuldiag
from .kernels import BACKEND
from .linalg import ExactMatrix, InconsistentSystem, Subspace, solve_linear
from .scalars import QQ, QV, V, Field, RatFunc, ScalarSyntaxError, field_from_tag, format_scalar, parse_scalar
from .snf import SmithForm, integer_kernel, smith_nf

__all__ = [
    "BACKEND", "EigenReport", "ExactMatrix", "Field", "InconsistentSystem",
    "QQ", "QV", "RatFunc", "ScalarSyntaxError", "SimulDiagResult", "SmithForm",
    "Subspace", "V", "charpoly", "eigen", "field_from_tag", "field_roots",
    "format_scalar", "integer_kernel", "minimal_polynomial", "parse_scalar",
    "simuldiag", "smith_nf", "solve_linear",
]
