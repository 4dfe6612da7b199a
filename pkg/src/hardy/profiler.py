"""
Hardy-norm profiling on circles inside the disk.

Circle means use the uniform angular rule, which is exact for
trigonometric polynomials of degree below ``n_theta``.  Any finite ladder of
radii only yields a lower bound of the Hardy norm, so sup values are
reported as estimates.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Sequence, Union

import numpy as np
from pydantic import BaseModel, Field, model_validator

from ..algebra.bicomplex import IdempotentArray
from ..fields.boundary_data import BicomplexBoundaryData, BoundaryData
from ..fields.poly_field import PolyField
from ..operators.quadrature import DiskQuadrature
from ..tools.errors import DomainError

logger = logging.getLogger(__name__)

DEFAULT_RADII = (0.5, 0.9, 0.99, 0.999)
DEFAULT_ANGLES = 256
COMPARISON_SLACK = 1e-12

BoundaryTrace = Union[BoundaryData, BicomplexBoundaryData]


class RadialProfile(BaseModel):
    """Circle means (and optional boundary gaps) over a ladder of radii."""

    p: float = Field(gt=0)
    radii: List[float]
    means: List[float]
    gaps: Optional[List[float]] = None

    @model_validator(mode="after")
    def _check_lengths(self) -> "RadialProfile":
        if len(self.radii) != len(self.means):
            raise ValueError("radii and means must have the same length")
        if self.gaps is not None and len(self.gaps) != len(self.radii):
            raise ValueError("radii and gaps must have the same length")
        if any(m < 0 for m in self.means):
            raise ValueError("circle means are non-negative")
        return self

    @property
    def sup_estimate(self) -> float:
        return max(self.means, default=0.0)

    def to_rows(self) -> List[Dict[str, Optional[float]]]:
        """Rows with the CSV columns ``r, mean_p, gap_p``."""
        gaps = self.gaps if self.gaps is not None else [None] * len(self.radii)
        return [{"r": r, "mean_p": m, "gap_p": g} for r, m, g in zip(self.radii, self.means, gaps)]


def _pointwise_norm(values) -> np.ndarray:
    if isinstance(values, IdempotentArray):
        return values.norm()
    return np.abs(values)


def _difference(values, trace_values):
    """Subtract boundary values, lifting complex samples to ``plus = minus``."""
    if isinstance(values, IdempotentArray) or isinstance(trace_values, IdempotentArray):
        return IdempotentArray.lift(values) - IdempotentArray.lift(trace_values)
    return np.asarray(values) - np.asarray(trace_values)


def _check_radius(r: float) -> None:
    if not 0 < r < 1:
        raise DomainError(f"Circle radius {r} must lie in (0, 1)")


def _power_mean(norms: np.ndarray, p: float) -> float:
    return float(np.mean(norms**p) ** (1.0 / p))


def circle_points(r: float, n_theta: int = DEFAULT_ANGLES):
    theta = 2 * np.pi * np.arange(n_theta) / n_theta
    return theta, r * np.exp(1j * theta)


def circle_mean(w, p: float, r: float, n_theta: int = DEFAULT_ANGLES) -> float:
    """``((1/2pi) ∫ ||w(r e^{i theta})||**p d theta)**(1/p)``."""
    _check_radius(r)
    _, points = circle_points(r, n_theta)
    return _power_mean(_pointwise_norm(w.evaluate(points)), p)


def radial_profile(w, p: float, radii: Sequence[float] = DEFAULT_RADII, n_theta: int = DEFAULT_ANGLES) -> RadialProfile:
    radii = [float(r) for r in radii]
    return RadialProfile(p=p, radii=radii, means=[circle_mean(w, p, r, n_theta) for r in radii])


def hardy_norm_estimate(w, p: float, radii: Sequence[float] = DEFAULT_RADII, n_theta: int = DEFAULT_ANGLES) -> float:
    """Sup of the circle means over the sampled radii (a lower bound of the Hardy norm)."""
    return radial_profile(w, p, radii, n_theta).sup_estimate


def boundary_gap_profile(
    w, w_nt: BoundaryTrace, p: float, radii: Sequence[float] = DEFAULT_RADII, n_theta: int = DEFAULT_ANGLES
) -> RadialProfile:
    """Circle means of ``w`` and ``L**p`` distances between ``w(r e^{i theta})`` and ``w_nt(theta)``."""
    radii = [float(r) for r in radii]
    means, gaps = [], []
    for r in radii:
        _check_radius(r)
        theta, points = circle_points(r, n_theta)
        values = w.evaluate(points)
        means.append(_power_mean(_pointwise_norm(values), p))
        gaps.append(_power_mean(_pointwise_norm(_difference(values, w_nt.evaluate(theta))), p))
    logger.debug("Boundary gaps over radii %s: %s", radii, gaps)
    return RadialProfile(p=p, radii=radii, means=means, gaps=gaps)


def boundary_trace(field: PolyField) -> BicomplexBoundaryData:
    """Exact boundary trace of a polynomial field."""
    return BicomplexBoundaryData.trace_of(field)


class IdempotentHardyReport(BaseModel):
    """Bicomplex circle means against the bounds built from the component means."""

    p: float
    radii: List[float]
    bicomplex_means: List[float]
    plus_means: List[float]
    minus_means: List[float]
    lower_bounds: List[float]
    upper_bounds: List[float]
    holds: List[bool]

    @property
    def passed(self) -> bool:
        return all(self.holds)


def comparability_constant(p: float) -> float:
    """Constant of the quasi-triangle inequality in ``L**p``."""
    return max(1.0, 2.0 ** (1.0 / p - 1.0))


def idempotent_hardy_check(
    w, p: float, radii: Sequence[float] = DEFAULT_RADII, n_theta: int = DEFAULT_ANGLES
) -> IdempotentHardyReport:
    """
    Check ``max(M+, M-) / sqrt(2) <= M <= C_p (M+ + M-) / sqrt(2)`` at every radius.

    ``M`` is the bicomplex circle mean and ``M±`` the component means.
    """
    radii = [float(r) for r in radii]
    constant = comparability_constant(p)
    rows = {k: [] for k in ("bicomplex", "plus", "minus", "lower", "upper", "holds")}
    for r in radii:
        _check_radius(r)
        _, points = circle_points(r, n_theta)
        values = w.evaluate(points)
        if not isinstance(values, IdempotentArray):
            raise TypeError("idempotent_hardy_check needs a bicomplex field")
        bicomplex = _power_mean(values.norm(), p)
        plus = _power_mean(np.abs(values.plus), p)
        minus = _power_mean(np.abs(values.minus), p)
        lower = max(plus, minus) / np.sqrt(2)
        upper = constant * (plus + minus) / np.sqrt(2)
        slack = COMPARISON_SLACK * max(1.0, upper)
        rows["bicomplex"].append(bicomplex)
        rows["plus"].append(plus)
        rows["minus"].append(minus)
        rows["lower"].append(float(lower))
        rows["upper"].append(float(upper))
        rows["holds"].append(bool(lower - slack <= bicomplex <= upper + slack))
    report = IdempotentHardyReport(
        p=p,
        radii=radii,
        bicomplex_means=rows["bicomplex"],
        plus_means=rows["plus"],
        minus_means=rows["minus"],
        lower_bounds=rows["lower"],
        upper_bounds=rows["upper"],
        holds=rows["holds"],
    )
    if not report.passed:
        logger.warning("Idempotent comparability violated at radii %s", [r for r, h in zip(radii, report.holds) if not h])
    return report


def disk_lm_norm(w, m: float, quadrature: Optional[DiskQuadrature] = None) -> float:
    """``(∬ ||w||**m dx dy)**(1/m)`` with the origin-centred rule."""
    if m <= 0:
        raise ValueError("The exponent m must be positive")
    quadrature = quadrature or DiskQuadrature()
    nodes, weights = quadrature.origin_rule
    return float(np.dot(_pointwise_norm(w.evaluate(nodes)) ** m, weights) ** (1.0 / m))


__all__ = [
    "RadialProfile",
    "IdempotentHardyReport",
    "DEFAULT_RADII",
    "circle_mean",
    "circle_points",
    "radial_profile",
    "hardy_norm_estimate",
    "boundary_gap_profile",
    "boundary_trace",
    "comparability_constant",
    "idempotent_hardy_check",
    "disk_lm_norm",
]
