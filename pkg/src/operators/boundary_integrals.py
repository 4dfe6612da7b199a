"""
Boundary integral operators: the Schwarz integral and the Cauchy integral.

Each operator has two evaluation paths.  The Fourier path returns the exact
polynomial for trigonometric-polynomial data; the quadrature path applies the
trapezoid rule to the contour integral and serves as its cross-check.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from ..fields.boundary_data import BoundaryData
from ..fields.component_poly import ComponentPoly
from ..tools.errors import BoundaryDataError, DomainError
from .kernels import schwarz_kernel
from .quadrature import boundary_nodes

DEFAULT_BOUNDARY_NODES = 512


class IntegralField:
    """Lazily evaluated complex field defined by a quadrature rule."""

    def __init__(self, rule: Callable[[np.ndarray], np.ndarray], label: str) -> None:
        self._rule = rule
        self.label = label

    def evaluate(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        if np.any(np.abs(z) >= 1):
            raise DomainError(f"{self.label} can only be evaluated inside the open unit disk")
        flat = z.ravel()
        values = np.array([self._rule(point) for point in flat], dtype=complex)
        return values.reshape(z.shape)

    def __call__(self, z) -> np.ndarray:
        return self.evaluate(z)

    def __repr__(self) -> str:
        return f"IntegralField({self.label})"


def _boundary_samples(gamma: BoundaryData, n: int) -> np.ndarray:
    theta, _ = boundary_nodes(n)
    if gamma.is_sampled and gamma.samples.size == n:
        return np.asarray(gamma.samples, dtype=complex)
    return np.asarray(gamma.evaluate(theta), dtype=complex)


def schwarz_integral(gamma: BoundaryData, a: float = 0.0, method: str = "fourier", n_nodes: int = DEFAULT_BOUNDARY_NODES):
    """
    Holomorphic ``phi`` with ``Re phi = gamma`` on the circle and ``Im phi(0) = a``.

    Args:
        gamma: Real boundary data.
        a: Imaginary part at the origin.
        method: ``"fourier"`` for the closed form, ``"quadrature"`` for the contour rule.
        n_nodes: Trapezoid nodes for the quadrature path.

    Returns:
        ``ComponentPoly`` on the Fourier path, ``IntegralField`` otherwise.

    Raises:
        BoundaryDataError: If ``gamma`` is not real-valued.
    """
    if gamma.kind != "real" or not gamma.is_real():
        raise BoundaryDataError("The Schwarz integral requires real boundary data")
    if method == "fourier":
        coeffs = gamma.coefficients()
        terms = {(0, 0): coeffs.get(0, 0j).real + 1j * a}
        for k, c in coeffs.items():
            if k > 0:
                terms[(k, 0)] = 2 * c
        return ComponentPoly.from_dict(terms)
    if method == "quadrature":
        theta, _ = boundary_nodes(n_nodes)
        values = _boundary_samples(gamma, n_nodes).real

        def rule(z: complex) -> complex:
            kernel = schwarz_kernel(abs(z), np.angle(z) - theta)
            return complex(np.mean(values * kernel)) + 1j * a

        return IntegralField(rule, "schwarz_integral")
    raise ValueError(f"Unknown evaluation method {method!r}")


def cauchy_integral(gamma: BoundaryData, method: str = "fourier", n_nodes: int = DEFAULT_BOUNDARY_NODES):
    """
    Cauchy integral ``(1 / 2 pi i) ∮ gamma(zeta) / (zeta - z) d zeta``.

    The Fourier path keeps the non-negative frequencies of ``gamma``.
    """
    if method == "fourier":
        coeffs = gamma.coefficients()
        return ComponentPoly.from_dict({(k, 0): c for k, c in coeffs.items() if k >= 0})
    if method == "quadrature":
        _, zeta = boundary_nodes(n_nodes)
        values = _boundary_samples(gamma, n_nodes)

        def rule(z: complex) -> complex:
            return complex(np.mean(values * zeta / (zeta - z)))

        return IntegralField(rule, "cauchy_integral")
    raise ValueError(f"Unknown evaluation method {method!r}")


def contour_integral(values: np.ndarray, kernel: np.ndarray) -> complex:
    """``(1 / 2 pi i) ∮ h(zeta) d zeta`` for ``h = values * kernel`` sampled at uniform nodes."""
    n = values.size
    _, zeta = boundary_nodes(n)
    return complex(np.mean(values * kernel * zeta))


__all__ = [
    "IntegralField",
    "schwarz_integral",
    "cauchy_integral",
    "contour_integral",
    "DEFAULT_BOUNDARY_NODES",
]
