"""Braidings of group type and their reduced construction k(H/N)."""

from .catalogue import cyclic_action, jordan_over_z, random_abelian_triangular, scalar_over_z, trivial_action, z2_table
from .fileio import GroupFileError, dump_group_yd, load_group_yd, read_group_yd, write_group_yd
from .groups import FgAbelianGroup, GroupError, TableGroup
from .reduction import (
    CrosscheckResult,
    ReducedGroupAlgebra,
    SupportKernel,
    UnsupportedGroupAction,
    crosscheck_group_reduction,
    reduced_group_algebra,
    support_and_kernel,
)
from .ydmodule import GroupYDData, InvalidYDData, YDVerdict, group_braiding, validate_group_yd

__all__ = [
    "CrosscheckResult", "FgAbelianGroup", "GroupError", "GroupFileError", "GroupYDData",
    "InvalidYDData", "ReducedGroupAlgebra", "SupportKernel", "TableGroup", "UnsupportedGroupAction",
    "YDVerdict", "crosscheck_group_reduction", "cyclic_action", "dump_group_yd", "group_braiding",
    "jordan_over_z", "load_group_yd", "random_abelian_triangular", "read_group_yd",
    "reduced_group_algebra", "scalar_over_z", "support_and_kernel", "trivial_action",
    "validate_group_yd", "write_group_yd", "z2_table",
]
