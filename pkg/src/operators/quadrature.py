"""
Polar quadrature rules on the unit disk.

Two tensor-product rules are provided:

* the origin rule: Gauss-Legendre radii on (0, 1) with Jacobian ``r`` times
  uniform angles, for smooth integrands;
* the point-centred rule around an interior point ``z``: polar coordinates
  ``zeta = z + rho e^{i phi}`` with ``rho`` running from an exclusion radius
  ``eps`` to the boundary ``R(phi)`` along each ray.  The Jacobian ``rho``
  cancels the ``1/(zeta - z)`` singularity, and principal values of
  ``1/(zeta - z)**2`` are taken over the disk minus the ``eps``-ball.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Tuple

import numpy as np
from numpy.polynomial.legendre import leggauss

from ..tools.errors import DomainError


@dataclass(frozen=True)
class DiskQuadrature:
    """
    Polar quadrature on the open unit disk.

    Args:
        n_r: Gauss-Legendre nodes in the radial direction.
        n_theta: Uniform angular nodes.
        eps_factor: Exclusion radius in units of the radial cell size ``1 / n_r``.
    """

    n_r: int = 64
    n_theta: int = 256
    eps_factor: float = 0.5

    def __post_init__(self) -> None:
        if self.n_r < 2 or self.n_theta < 4:
            raise ValueError("Quadrature needs at least 2 radial and 4 angular nodes")
        if self.eps_factor < 0:
            raise ValueError("Exclusion factor must be non-negative")

    @property
    def exclusion_radius(self) -> float:
        return self.eps_factor / self.n_r

    @cached_property
    def _legendre(self) -> Tuple[np.ndarray, np.ndarray]:
        x, w = leggauss(self.n_r)
        return (x + 1) / 2, w / 2

    @cached_property
    def angles(self) -> np.ndarray:
        return 2 * np.pi * np.arange(self.n_theta) / self.n_theta

    @cached_property
    def origin_rule(self) -> Tuple[np.ndarray, np.ndarray]:
        """Flattened nodes and weights; the weights sum to ``pi``."""
        t, w = self._legendre
        nodes = t[:, None] * np.exp(1j * self.angles)[None, :]
        weights = (w * t)[:, None] * np.full(self.n_theta, 2 * np.pi / self.n_theta)[None, :]
        return nodes.ravel(), weights.ravel()

    def centred_rule(self, z: complex, eps: float = 0.0) -> Tuple[np.ndarray, np.ndarray]:
        """
        Nodes and weights for the disk minus the ball ``|zeta - z| < eps``.

        Raises:
            DomainError: If ``z`` is not inside the open disk.
        """
        z = complex(z)
        if abs(z) >= 1:
            raise DomainError(f"Quadrature centre {z} is not inside the open unit disk")
        eps = min(max(eps, 0.0), 0.5 * (1 - abs(z)))
        direction = np.exp(1j * self.angles)
        b = (np.conj(z) * direction).real
        reach = -b + np.sqrt(b**2 + 1 - abs(z) ** 2)
        t, w = self._legendre
        rho = eps + (reach - eps)[:, None] * t[None, :]
        weights = ((reach - eps)[:, None] * w[None, :]) * rho * (2 * np.pi / self.n_theta)
        nodes = z + rho * direction[:, None]
        return nodes.ravel(), weights.ravel()

    def integrate(self, values: np.ndarray, weights: np.ndarray) -> complex:
        return complex(np.dot(values, weights))

    def refined(self) -> "DiskQuadrature":
        """The rule with both node counts doubled."""
        return DiskQuadrature(2 * self.n_r, 2 * self.n_theta, self.eps_factor)


def boundary_nodes(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Uniform angles and the corresponding points on the unit circle."""
    theta = 2 * np.pi * np.arange(n) / n
    return theta, np.exp(1j * theta)


__all__ = ["DiskQuadrature", "boundary_nodes"]
