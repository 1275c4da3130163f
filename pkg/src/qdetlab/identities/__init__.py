"""Identity checks: structured-matrix builders, sampler, registry, runner."""

from .builders import (
    build_m,
    build_theorem_matrix,
    build_triangular,
    classical_matrix,
    compute_r,
    mehta_wang_matrix,
    moment,
    moment_hankel,
    moment_hankel_rows,
    nishizawa_matrix,
    theorem_matrix_rows,
    triangular_inverse,
)
from .points import ParamPoint, sample_point
from .registry import REGISTRY, CheckDef, check_ids, get_check
from .runner import CheckResult, Report, run_check, run_suite

__all__ = [
    "CheckDef",
    "CheckResult",
    "ParamPoint",
    "REGISTRY",
    "Report",
    "build_m",
    "build_theorem_matrix",
    "build_triangular",
    "check_ids",
    "classical_matrix",
    "compute_r",
    "get_check",
    "mehta_wang_matrix",
    "moment",
    "moment_hankel",
    "moment_hankel_rows",
    "nishizawa_matrix",
    "run_check",
    "run_suite",
    "sample_point",
    "theorem_matrix_rows",
    "triangular_inverse",
]
