"""
Residual operators of the conjugate-Beltrami, Vekua and GFOE equations.

The conjugate ``w̄`` entering these equations acts on the idempotent
components, ``p+ (w+)* + p- (w-)*`` (``PolyField.idempotent_conj``), so that
each residual splits into the complex component equations.  It agrees with
``Sc w - j Vec w`` whenever the scalar and vector parts are real-valued.
"""

from __future__ import annotations

import logging
from typing import Any, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from ..algebra.bicomplex import ZERO, Bicomplex, as_bicomplex, bc_norm
from ..bvp.diagnostics import probe_points
from ..fields.component_poly import ComponentPoly
from ..fields.poly_field import PolyField
from ..tools.errors import EllipticityError

logger = logging.getLogger(__name__)

ELLIPTICITY_PROBES = 400


def real_coefficient(mu: Any, tol: float = 1e-12) -> PolyField:
    """
    Coerce a real-valued Beltrami coefficient to a ``PolyField``.

    Raises:
        ValueError: If ``mu`` is not real-valued.
        EllipticityError: If ``|mu| >= 1`` somewhere on the probe set.
    """
    if not isinstance(mu, PolyField):
        value = as_bicomplex(mu)
        if abs(value.vec) > tol or abs(value.sc.imag) > tol:
            raise ValueError("The coefficient must be real-valued")
        mu = PolyField.constant(value.sc.real)
    if not mu.is_real_valued(tol):
        raise ValueError("The coefficient must be a real-valued field")
    largest = coefficient_sup(mu)
    if largest >= 1:
        raise EllipticityError(f"sup |mu| = {largest:.6g} on the probe set must be below 1")
    return mu


def coefficient_sup(mu: PolyField) -> float:
    """Largest bicomplex norm of ``mu`` on the probe set (exact for constants)."""
    if mu.max_degree <= 0:
        return bc_norm(mu.eval(0j))
    return float(mu.evaluate(probe_points(ELLIPTICITY_PROBES, r_max=1.0)).norm().max())


def conj_beltrami_residual(f: PolyField, mu) -> PolyField:
    """``delbar f - mu delbar(f̄)`` for a real-valued coefficient ``mu``."""
    mu = real_coefficient(mu)
    return f.bc_delbar() - mu * f.idempotent_conj().bc_delbar()


def vekua_residual(w: PolyField, alpha, a: Optional[PolyField] = None) -> PolyField:
    """``delbar w - A w - alpha w̄``; ``A`` defaults to zero."""
    alpha = alpha if isinstance(alpha, PolyField) else PolyField.constant(alpha)
    residual = w.bc_delbar() - alpha * w.idempotent_conj()
    if a is not None:
        residual = residual - a * w
    return residual


class GfoeCoefficients(BaseModel):
    """Coefficients of ``delbar w = mu1 del w + mu2 delbar w̄ + A w + B w̄``."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    mu1: Bicomplex = ZERO
    mu2: Bicomplex = ZERO
    a: Optional[PolyField] = None
    b: Optional[PolyField] = None

    @field_validator("mu1", "mu2", mode="before")
    @classmethod
    def _coerce(cls, value: Any) -> Bicomplex:
        return as_bicomplex(value)

    @model_validator(mode="after")
    def _check_ellipticity(self) -> "GfoeCoefficients":
        total = bc_norm(self.mu1) + bc_norm(self.mu2)
        if total >= 1:
            raise EllipticityError(f"||mu1|| + ||mu2|| = {total:.6g} must be below 1")
        return self

    def zeroth_order(self) -> Tuple[PolyField, PolyField]:
        zero = PolyField.zero()
        return (self.a if self.a is not None else zero, self.b if self.b is not None else zero)


def gfoe_residual(w: PolyField, coeffs: GfoeCoefficients, f: Optional[PolyField] = None) -> PolyField:
    """``delbar w - mu1 del w - mu2 delbar w̄ - A w - B w̄ - f``."""
    a, b = coeffs.zeroth_order()
    conj = w.idempotent_conj()
    residual = (
        w.bc_delbar()
        - w.bc_del().scale(coeffs.mu1)
        - conj.bc_delbar().scale(coeffs.mu2)
        - a * w
        - b * conj
    )
    if f is not None:
        residual = residual - f
    return residual


def gfoe_component_equations(
    w: PolyField, coeffs: GfoeCoefficients, f: Optional[PolyField] = None
) -> Tuple[ComponentPoly, ComponentPoly]:
    """
    Residuals of the two complex equations solved by the idempotent components.

    The plus equation is written for ``(w+)*`` and conjugated back so that the
    result is comparable with the plus component of ``gfoe_residual``.
    """
    a, b = coeffs.zeroth_order()
    f = f if f is not None else PolyField.zero()
    mu1, mu2 = coeffs.mu1, coeffs.mu2

    v = w.plus.conj()
    plus_conj = (
        v.d_zstar()
        - v.d_z() * np.conj(mu1.plus)
        - w.plus.d_zstar() * np.conj(mu2.plus)
        - a.plus.conj() * v
        - b.plus.conj() * w.plus
        - f.plus.conj()
    )
    u = w.minus
    minus = (
        u.d_zstar()
        - u.d_z() * mu1.minus
        - u.conj().d_zstar() * mu2.minus
        - a.minus * u
        - b.minus * u.conj()
        - f.minus
    )
    return plus_conj.conj(), minus


__all__ = [
    "GfoeCoefficients",
    "real_coefficient",
    "coefficient_sup",
    "conj_beltrami_residual",
    "vekua_residual",
    "gfoe_residual",
    "gfoe_component_equations",
]
