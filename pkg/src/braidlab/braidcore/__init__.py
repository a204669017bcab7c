"""Braided vector spaces: storage, validation, transforms and rigidity."""

from .fileio import BraidingFormatError, dump_braiding, load_braiding, read_braiding, write_braiding
from .space import (
    BraidedVectorSpace,
    BraidVerdict,
    ConversionResult,
    FlatMap,
    SingularBraiding,
    change_basis,
    check_braid_equation,
    check_flag_compat,
    check_rigidity,
    compute_c_flat,
    flip_matrix,
    invariance_premise,
    r_operators,
    tensor,
    transform_braiding,
    ybe_convert,
)

__all__ = [
    "BraidVerdict", "BraidedVectorSpace", "BraidingFormatError", "ConversionResult",
    "FlatMap", "SingularBraiding", "change_basis", "check_braid_equation",
    "check_flag_compat", "check_rigidity", "compute_c_flat", "dump_braiding",
    "flip_matrix", "invariance_premise", "load_braiding", "r_operators",
    "read_braiding", "tensor", "transform_braiding", "write_braiding", "ybe_convert",
]
