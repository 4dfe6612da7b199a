"""Residual, boundary and probe-set diagnostics shared by the solvers."""

from __future__ import annotations

from typing import Optional

import numpy as np

from ..algebra.bicomplex import Bicomplex, IdempotentArray
from ..fields.boundary_data import BoundaryData
from ..fields.component_poly import ComponentPoly
from ..fields.point_field import BicomplexField
from ..fields.poly_field import PolyField
from ..fields.wirtinger import DEFAULT_STEP, fd_del, fd_delbar, fd_wirtinger

GOLDEN_ANGLE = np.pi * (3 - np.sqrt(5))
BOUNDARY_RADIUS = 0.99
BOUNDARY_ANGLES = 512


def probe_points(count: int = 50, r_max: float = 0.9) -> np.ndarray:
    """Deterministic sunflower probe set filling the disk of radius ``r_max``."""
    k = np.arange(count)
    radii = r_max * np.sqrt((k + 0.5) / count)
    return radii * np.exp(1j * GOLDEN_ANGLE * k)


def complex_beltrami_residual(
    w: ComponentPoly, mu: complex, f: Optional[ComponentPoly], points: np.ndarray, h: float = DEFAULT_STEP
) -> float:
    """Max over ``points`` of ``|dw/dz* - mu dw/dz - f|`` with finite-difference derivatives."""
    dz, dzs = fd_wirtinger(w, points, h)
    source = f.evaluate(points) if f is not None else 0.0
    return float(np.abs(dzs - mu * dz - source).max(initial=0.0))


def bicomplex_beltrami_residual(
    w: BicomplexField, mu: Bicomplex, f: Optional[PolyField], points: np.ndarray, h: float = DEFAULT_STEP
) -> float:
    """Max over ``points`` of ``||delbar w - mu del w - f||`` with finite-difference derivatives."""
    residual = fd_delbar(w, points, h) - fd_del(w, points, h).scale(mu)
    if f is not None:
        residual = residual - f.evaluate(points)
    return float(residual.norm().max(initial=0.0))


def circle_l2(values: np.ndarray) -> float:
    """Normalized ``L2(d theta / 2 pi)`` norm of uniform circle samples."""
    return float(np.sqrt(np.mean(np.abs(values) ** 2)))


def real_boundary_error(w: ComponentPoly, gamma: BoundaryData, r: float = BOUNDARY_RADIUS, n: int = BOUNDARY_ANGLES) -> float:
    """L2 gap on the circle of radius ``r`` between ``Re w`` and the harmonic extension of ``gamma``."""
    theta = 2 * np.pi * np.arange(n) / n
    points = r * np.exp(1j * theta)
    return circle_l2(w.evaluate(points).real - gamma.harmonic_extension(points))


def real_trace_error(w: ComponentPoly, gamma: BoundaryData, n: int = BOUNDARY_ANGLES) -> float:
    """L2 gap between ``Re w`` on the unit circle and ``gamma``."""
    theta = 2 * np.pi * np.arange(n) / n
    return circle_l2(w.evaluate(np.exp(1j * theta)).real - gamma.evaluate(theta))


def complex_boundary_error(w: ComponentPoly, gamma: BoundaryData, r: float = BOUNDARY_RADIUS, n: int = BOUNDARY_ANGLES) -> float:
    """L2 gap on the circle of radius ``r`` between ``w`` and the harmonic extension of ``gamma``."""
    theta = 2 * np.pi * np.arange(n) / n
    points = r * np.exp(1j * theta)
    return circle_l2(w.evaluate(points) - gamma.harmonic_extension(points))


def complex_trace_error(w: ComponentPoly, gamma: BoundaryData, n: int = BOUNDARY_ANGLES) -> float:
    theta = 2 * np.pi * np.arange(n) / n
    return circle_l2(w.evaluate(np.exp(1j * theta)) - gamma.evaluate(theta))


def combine_components(plus: float, minus: float) -> float:
    """Bicomplex-norm style combination ``sqrt((a**2 + b**2) / 2)`` of component errors."""
    return float(np.sqrt((plus**2 + minus**2) / 2))


def sup_difference(a: IdempotentArray, b: IdempotentArray) -> float:
    return float((a - b).norm().max(initial=0.0))


__all__ = [
    "probe_points",
    "complex_beltrami_residual",
    "bicomplex_beltrami_residual",
    "circle_l2",
    "real_boundary_error",
    "real_trace_error",
    "complex_boundary_error",
    "complex_trace_error",
    "combine_components",
    "sup_difference",
    "BOUNDARY_RADIUS",
]
