"""Circle means, Hardy-norm estimates and boundary-convergence profiles."""

from .profiler import (
    DEFAULT_RADII,
    IdempotentHardyReport,
    RadialProfile,
    boundary_gap_profile,
    boundary_trace,
    circle_mean,
    comparability_constant,
    disk_lm_norm,
    hardy_norm_estimate,
    idempotent_hardy_check,
    radial_profile,
)

__all__ = [
    "RadialProfile",
    "IdempotentHardyReport",
    "DEFAULT_RADII",
    "circle_mean",
    "radial_profile",
    "hardy_norm_estimate",
    "boundary_gap_profile",
    "boundary_trace",
    "comparability_constant",
    "idempotent_hardy_check",
    "disk_lm_norm",
]
