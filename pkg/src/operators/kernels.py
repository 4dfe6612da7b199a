"""Poisson and conjugate Poisson kernels of the unit disk."""

from __future__ import annotations

import numpy as np

from ..tools.errors import DomainError


def _check_radius(r: np.ndarray) -> None:
    if np.any(r < 0) or np.any(r >= 1):
        raise DomainError("Kernel radius must satisfy 0 <= r < 1")


def poisson_kernel(r, theta) -> np.ndarray:
    """``P_r(theta) = (1 - r**2) / (1 - 2 r cos(theta) + r**2)``."""
    r = np.asarray(r, dtype=float)
    _check_radius(r)
    theta = np.asarray(theta, dtype=float)
    return (1 - r**2) / (1 - 2 * r * np.cos(theta) + r**2)


def conj_poisson_kernel(r, theta) -> np.ndarray:
    """``Q_r(theta) = 2 r sin(theta) / (1 - 2 r cos(theta) + r**2)``."""
    r = np.asarray(r, dtype=float)
    _check_radius(r)
    theta = np.asarray(theta, dtype=float)
    return 2 * r * np.sin(theta) / (1 - 2 * r * np.cos(theta) + r**2)


def schwarz_kernel(r, theta) -> np.ndarray:
    """``P_r + i Q_r``, equal to ``(e^{it} + z) / (e^{it} - z)`` with ``theta`` the angle of z minus t."""
    return poisson_kernel(r, theta) + 1j * conj_poisson_kernel(r, theta)


__all__ = ["poisson_kernel", "conj_poisson_kernel", "schwarz_kernel"]
