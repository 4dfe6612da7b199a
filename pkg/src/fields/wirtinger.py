"""
Finite-difference Wirtinger derivatives.

These routines are the independent oracle for the exact polynomial
operators: centred differences in x and y are combined into
``d/dz = (d/dx - i d/dy) / 2`` and ``d/dz* = (d/dx + i d/dy) / 2``.
Bicomplex fields are differentiated componentwise, and
``fd_bicomplex_cartesian`` evaluates the Cartesian ``(d/dx ± j d/dy) / 2``
definition on scalar and vector parts.
"""

from __future__ import annotations

from typing import Tuple

import numpy as np

from ..algebra.bicomplex import IdempotentArray
from ..tools.errors import StencilError
from .point_field import BicomplexField, ComplexCallable, as_complex_callable

DEFAULT_STEP = 1e-4


def _check_stencil(z: np.ndarray, h: float) -> None:
    if h <= 0:
        raise ValueError(f"Finite-difference step must be positive, got {h}")
    reach = np.abs(z) + h
    if np.any(reach > 1.0):
        worst = float(reach.max())
        raise StencilError(f"Stencil reaches radius {worst:.6g} outside the closed unit disk")


def _partials(g: ComplexCallable, z: np.ndarray, h: float) -> Tuple[np.ndarray, np.ndarray]:
    dx = (g(z + h) - g(z - h)) / (2 * h)
    dy = (g(z + 1j * h) - g(z - 1j * h)) / (2 * h)
    return dx, dy


def fd_wirtinger(g, z, h: float = DEFAULT_STEP) -> Tuple[np.ndarray, np.ndarray]:
    """
    Estimate ``(dg/dz, dg/dz*)`` of a complex field by centred differences.

    Args:
        g: Complex polynomial or vectorized callable.
        z: Evaluation point(s).
        h: Step size.

    Returns:
        Tuple of derivative estimates with the shape of ``z``.

    Raises:
        StencilError: If ``|z| + h > 1`` at any point.
    """
    z = np.asarray(z, dtype=complex)
    _check_stencil(z, h)
    dx, dy = _partials(as_complex_callable(g), z, h)
    return (dx - 1j * dy) / 2, (dx + 1j * dy) / 2


def fd_components(field: BicomplexField, z, h: float = DEFAULT_STEP):
    """Componentwise ``(d/dz, d/dz*)`` of a bicomplex field as idempotent arrays."""
    z = np.asarray(z, dtype=complex)
    plus_dz, plus_dzs = fd_wirtinger(lambda p: field.evaluate(p).plus, z, h)
    minus_dz, minus_dzs = fd_wirtinger(lambda p: field.evaluate(p).minus, z, h)
    return IdempotentArray(plus_dz, minus_dz), IdempotentArray(plus_dzs, minus_dzs)


def fd_delbar(field: BicomplexField, z, h: float = DEFAULT_STEP) -> IdempotentArray:
    """``delbar`` through its idempotent form ``p+ d/dz + p- d/dz*``."""
    dz, dzs = fd_components(field, z, h)
    return IdempotentArray(dz.plus, dzs.minus)


def fd_del(field: BicomplexField, z, h: float = DEFAULT_STEP) -> IdempotentArray:
    """``del`` through its idempotent form ``p+ d/dz* + p- d/dz``."""
    dz, dzs = fd_components(field, z, h)
    return IdempotentArray(dzs.plus, dz.minus)


def fd_bicomplex_cartesian(field: BicomplexField, z, h: float = DEFAULT_STEP) -> Tuple[IdempotentArray, IdempotentArray]:
    """Return ``(del, delbar)`` from ``(d/dx -/+ j d/dy) / 2`` on scalar and vector parts."""
    z = np.asarray(z, dtype=complex)
    _check_stencil(z, h)
    sc_dx, sc_dy = _partials(lambda p: field.evaluate(p).sc, z, h)
    vec_dx, vec_dy = _partials(lambda p: field.evaluate(p).vec, z, h)
    # j (a + j b) = -b + j a
    delbar = IdempotentArray.from_parts((sc_dx - vec_dy) / 2, (vec_dx + sc_dy) / 2)
    dell = IdempotentArray.from_parts((sc_dx + vec_dy) / 2, (vec_dx - sc_dy) / 2)
    return dell, delbar


__all__ = [
    "DEFAULT_STEP",
    "fd_wirtinger",
    "fd_components",
    "fd_delbar",
    "fd_del",
    "fd_bicomplex_cartesian",
]
