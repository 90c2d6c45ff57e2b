from .errors import InvalidParameter, NumericalFailure, WcoError
from .koenigs import (
    KoenigsResult,
    consistency_check,
    eigenvalue_decay_report,
    koenigs_iterate,
    obstruction_value,
    phi_from_koenigs,
    power_membership_report,
)
from .maps import (
    FixedPointInfo,
    MobiusMap,
    PPFParams,
    fixed_point_in_disk,
    involutive_automorphism,
    ppf_map,
    self_map_check,
    series_fixed_point,
    to_series,
)
from .models import ExitCode, NormalityMethod, OutputFormat, Tolerances, WeightFamily
from .operator import (
    OperatorMatrix,
    SymmetryReport,
    adjoint_kernel_check,
    build_matrix,
    build_ppf_matrix,
    classify,
    eigen_ladder_check,
    normality_residual_grid,
    ppf_classify,
    spectrum,
)
from .series import TruncatedSeries, compose, from_coeffs, revert
from .space import WeightSequence, beta_kappa, kernel, norm_profile

__all__ = [
    "WcoError",
    "InvalidParameter",
    "NumericalFailure",
    "TruncatedSeries",
    "from_coeffs",
    "compose",
    "revert",
    "WeightSequence",
    "beta_kappa",
    "kernel",
    "norm_profile",
    "MobiusMap",
    "PPFParams",
    "FixedPointInfo",
    "involutive_automorphism",
    "ppf_map",
    "fixed_point_in_disk",
    "series_fixed_point",
    "self_map_check",
    "to_series",
    "OperatorMatrix",
    "SymmetryReport",
    "build_matrix",
    "build_ppf_matrix",
    "classify",
    "normality_residual_grid",
    "ppf_classify",
    "adjoint_kernel_check",
    "spectrum",
    "eigen_ladder_check",
    "KoenigsResult",
    "koenigs_iterate",
    "phi_from_koenigs",
    "power_membership_report",
    "obstruction_value",
    "consistency_check",
    "eigenvalue_decay_report",
    "WeightFamily",
    "NormalityMethod",
    "OutputFormat",
    "ExitCode",
    "Tolerances",
]
