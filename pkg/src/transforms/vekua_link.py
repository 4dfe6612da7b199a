"""
The conjugate-Beltrami / Vekua transform pair for a real-valued coefficient.

For real ``mu`` with ``|mu| < 1``::

    w = (f - mu f̄) / sqrt(1 - mu**2),     f = (w + mu w̄) / sqrt(1 - mu**2),

and ``delbar f = mu delbar f̄`` holds exactly when ``delbar w = alpha w̄`` with
``alpha = -delbar(mu) / (1 - mu**2)``.  The pair is pointwise algebra, so the
transformed fields are point-evaluable; a constant coefficient keeps
polynomial fields polynomial.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Union

import numpy as np

from ..algebra.bicomplex import IdempotentArray
from ..bvp.diagnostics import probe_points
from ..fields.point_field import BicomplexField, PointField
from ..fields.poly_field import PolyField
from ..fields.wirtinger import DEFAULT_STEP, fd_delbar
from ..hardy.profiler import DEFAULT_RADII, radial_profile
from ..tools.errors import EllipticityError
from .residuals import coefficient_sup, conj_beltrami_residual, real_coefficient, vekua_residual

logger = logging.getLogger(__name__)

DEFAULT_ALPHA_TERMS = 12

Field = Union[PolyField, PointField]


@dataclass
class AlphaField:
    """Vekua coefficient with its truncated-series and pointwise representations."""

    series: PolyField
    terms: int
    truncation_bound: float
    pointwise: PointField

    def evaluate(self, z) -> IdempotentArray:
        return self.pointwise.evaluate(z)

    @property
    def is_zero(self) -> bool:
        return self.series.is_zero()


def _real_values(mu: PolyField, z) -> np.ndarray:
    values = mu.evaluate(z).minus.real
    if np.any(np.abs(values) >= 1):
        raise EllipticityError("|mu| reaches 1 at an evaluation point")
    return values


def alpha_from_mu(mu, terms: int = DEFAULT_ALPHA_TERMS) -> AlphaField:
    """
    ``alpha = -delbar(mu) / (1 - mu**2)``.

    The series path expands ``1 / (1 - mu**2)`` to ``terms`` terms and reports
    the sup bound of the omitted tail; the pointwise path divides exactly.
    """
    mu = real_coefficient(mu)
    dmu = mu.bc_delbar()
    square = mu * mu
    geometric, power = PolyField.zero(), PolyField.constant(1.0)
    for _ in range(terms):
        geometric = geometric + power
        power = power * square
    series = -(dmu * geometric)
    sup = coefficient_sup(mu)
    bound = dmu.sup_bound() * sup ** (2 * terms) / (1 - sup**2)

    def rule(z: np.ndarray) -> IdempotentArray:
        m = _real_values(mu, z)
        d = dmu.evaluate(z)
        return IdempotentArray(-d.plus / (1 - m**2), -d.minus / (1 - m**2))

    logger.debug("alpha series with %d terms, tail bound %.3e", terms, bound)
    return AlphaField(series=series, terms=terms, truncation_bound=float(bound), pointwise=PointField(rule, "alpha"))


def _transform(field: Field, mu: PolyField, sign: float, label: str) -> Field:
    if mu.max_degree <= 0 and isinstance(field, PolyField):
        m = float(mu.eval(0j).sc.real)
        scale = 1.0 / np.sqrt(1 - m**2)
        return (field + field.idempotent_conj() * (sign * m)) * scale

    def rule(z: np.ndarray) -> IdempotentArray:
        m = _real_values(mu, z)
        s = np.sqrt(1 - m**2)
        values = field.evaluate(z)
        return IdempotentArray(
            (values.plus + sign * m * np.conj(values.plus)) / s,
            (values.minus + sign * m * np.conj(values.minus)) / s,
        )

    return PointField(rule, label)


def conjbel_to_vekua(f: Field, mu) -> Field:
    """``w = (f - mu f̄) / sqrt(1 - mu**2)``."""
    return _transform(f, real_coefficient(mu), -1.0, "conjbel_to_vekua")


def vekua_to_conjbel(w: Field, mu) -> Field:
    """``f = (w + mu w̄) / sqrt(1 - mu**2)``."""
    return _transform(w, real_coefficient(mu), 1.0, "vekua_to_conjbel")


def _max_norm(values: IdempotentArray) -> float:
    return float(values.norm().max(initial=0.0))


def vekua_link_check(
    f: Field,
    mu,
    points: Optional[np.ndarray] = None,
    h: float = DEFAULT_STEP,
    terms: int = DEFAULT_ALPHA_TERMS,
) -> Dict[str, object]:
    """Conjugate-Beltrami residual of ``f`` next to the Vekua residual of its transform."""
    mu = real_coefficient(mu)
    points = probe_points(50) if points is None else np.asarray(points, dtype=complex)
    w = conjbel_to_vekua(f, mu)
    alpha = alpha_from_mu(mu, terms)

    if isinstance(f, PolyField):
        conj_residual = _max_norm(conj_beltrami_residual(f, mu).evaluate(points))
    else:
        conj_residual = _max_norm(fd_delbar(f, points, h) - mu.evaluate(points).multiply(fd_delbar(_conjugate(f), points, h)))

    if isinstance(w, PolyField) and alpha.is_zero:
        path = "exact"
        vek_residual = _max_norm(vekua_residual(w, alpha.series).evaluate(points))
    else:
        path = "finite_difference"
        values = w.evaluate(points)
        vek_residual = _max_norm(fd_delbar(w, points, h) - alpha.evaluate(points).multiply(values.idempotent_conj()))
    return {
        "conj_beltrami_residual": conj_residual,
        "vekua_residual": vek_residual,
        "path": path,
        "alpha_truncation_bound": alpha.truncation_bound,
    }


def _conjugate(field: BicomplexField) -> PointField:
    return PointField(lambda z: field.evaluate(z).idempotent_conj(), "conjugate")


def hardy_preservation_profile(
    f: Field, mu, p: float, radii: Sequence[float] = DEFAULT_RADII, n_theta: int = 256
) -> Dict[str, object]:
    """Circle means of ``f`` and of its Vekua transform on the same radii."""
    w = conjbel_to_vekua(f, mu)
    f_profile = radial_profile(f, p, radii, n_theta)
    w_profile = radial_profile(w, p, radii, n_theta)
    return {
        "f": f_profile.model_dump(),
        "w": w_profile.model_dump(),
        "f_sup": f_profile.sup_estimate,
        "w_sup": w_profile.sup_estimate,
        "both_finite": bool(np.isfinite(f_profile.sup_estimate) and np.isfinite(w_profile.sup_estimate)),
    }


__all__ = [
    "AlphaField",
    "alpha_from_mu",
    "conjbel_to_vekua",
    "vekua_to_conjbel",
    "vekua_link_check",
    "hardy_preservation_profile",
    "DEFAULT_ALPHA_TERMS",
]
