"""Truncated FRT bialgebras, their right radical and the reduced quotient."""

from .radical import (
    Projection,
    RadicalTruncation,
    annihilator,
    is_coideal,
    largest_coideal,
    radical_truncation,
)
from .report import QuotientCoalgebra, ReducedReport, reduced_report, right_triangular_indicators
from .rform import RForm, convolution_inverse_holds, extend_rform, rform_generators
from .truncation import (
    DEFAULT_MAX_WORDS,
    FrtTruncation,
    ResourceLimit,
    format_word,
    gen_index,
    graded_truncation,
    rtt_relations,
    rtt_spanning_set,
)

__all__ = [
    "DEFAULT_MAX_WORDS", "FrtTruncation", "Projection", "QuotientCoalgebra", "RForm",
    "RadicalTruncation", "ReducedReport", "ResourceLimit", "annihilator", "convolution_inverse_holds",
    "extend_rform", "format_word", "gen_index", "graded_truncation", "is_coideal", "largest_coideal",
    "radical_truncation", "reduced_report", "right_triangular_indicators", "rform_generators",
    "rtt_relations", "rtt_spanning_set",
]
