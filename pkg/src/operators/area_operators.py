"""
Area integral operators on the unit disk.

* ``pompeiu_operator``: ``T_D g(z) = -(1/pi) ∬ g(zeta) / (zeta - z) dA``,
  the right inverse of ``d/dz*``.
* ``schwarz_area_operator``:
  ``S f(z) = -(1/2pi) ∬ [f/zeta (zeta+z)/(zeta-z) + conj(f)/conj(zeta) (1+z conj(zeta))/(1-z conj(zeta))] dA``;
  it solves ``d/dz* S f = f`` with ``Re S f = 0`` on the circle and
  ``Im S f(0) = 0``.
* ``pi_operator``:
  ``T g(z) = -(1/pi) ∬ [g/(zeta-z)**2 + conj(g)/(1-z conj(zeta))**2] dA``
  as a principal value; it equals ``d/dz S g`` and is only real-linear.
* ``t_bicomplex``: ``p+ S*(f+) + p- S(f-)`` with ``S* g = conj(S conj(g))``.

On polynomials every operator has an exact closed form (the ``spectral``
path).  The ``quadrature`` path evaluates the integrals with
``DiskQuadrature`` and is the independent cross-check.
"""

from __future__ import annotations

import logging
from typing import Dict, Optional, Tuple

import numpy as np

from ..algebra.bicomplex import IdempotentArray
from ..fields.component_poly import ComponentPoly
from ..fields.point_field import PointField, as_complex_callable
from ..fields.poly_field import PolyField
from ..tools.errors import QuadratureConvergenceError
from .boundary_integrals import IntegralField
from .quadrature import DiskQuadrature

logger = logging.getLogger(__name__)


# ----------------------------------------------------------------------
# Closed forms on polynomials
# ----------------------------------------------------------------------
def _accumulate(terms: Dict[Tuple[int, int], complex], key: Tuple[int, int], value: complex) -> None:
    terms[key] = terms.get(key, 0j) + value


def pompeiu_poly(g: ComponentPoly) -> ComponentPoly:
    """``T_D`` on ``z**m conj(z)**n``: ``(z**m conj(z)**(n+1) - [m > n] z**(m-n-1)) / (n+1)``."""
    terms: Dict[Tuple[int, int], complex] = {}
    for m, n, c in g.items():
        _accumulate(terms, (m, n + 1), c / (n + 1))
        if m >= n + 1:
            _accumulate(terms, (m - n - 1, 0), -c / (n + 1))
    return ComponentPoly.from_dict(terms)


def reflection_poly(g: ComponentPoly) -> ComponentPoly:
    """``-(1/pi) ∬ conj(g(zeta)) / (1 - z conj(zeta))**2 dA`` on polynomials."""
    terms: Dict[Tuple[int, int], complex] = {}
    for m, n, c in g.items():
        if n >= m:
            _accumulate(terms, (n - m, 0), -np.conj(c) * (n - m + 1) / (n + 1))
    return ComponentPoly.from_dict(terms)


def pi_operator_poly(g: ComponentPoly) -> ComponentPoly:
    return pompeiu_poly(g).d_z() + reflection_poly(g)


def schwarz_area_poly(f: ComponentPoly) -> ComponentPoly:
    """``S f`` on polynomials: ``d/dz*`` primitive minus its holomorphic boundary correction."""
    terms: Dict[Tuple[int, int], complex] = {}
    for m, n, c in f.items():
        scale = 1.0 / (n + 1)
        _accumulate(terms, (m, n + 1), c * scale)
        k = m - n - 1
        if k > 0:
            _accumulate(terms, (k, 0), -c * scale)
        elif k < 0:
            _accumulate(terms, (-k, 0), -np.conj(c) * scale)
        else:
            _accumulate(terms, (0, 0), -c.real * scale)
    return ComponentPoly.from_dict(terms)


def schwarz_area_conj_poly(f: ComponentPoly) -> ComponentPoly:
    """Conjugated twin ``S* f = conj(S(conj f))``; solves ``d/dz S* f = f``."""
    return schwarz_area_poly(f.conj()).conj()


# ----------------------------------------------------------------------
# Quadrature evaluation
# ----------------------------------------------------------------------
class _OriginSamples:
    """Values of a field on the origin rule, shared across evaluation points."""

    def __init__(self, g, quadrature: DiskQuadrature) -> None:
        self.nodes, self.weights = quadrature.origin_rule
        self.values = as_complex_callable(g)(self.nodes)


def _pompeiu_value(g, z: complex, quadrature: DiskQuadrature) -> complex:
    nodes, weights = quadrature.centred_rule(z)
    values = as_complex_callable(g)(nodes)
    return -complex(np.dot(values / (nodes - z), weights)) / np.pi


def _schwarz_area_value(g, z: complex, quadrature: DiskQuadrature, origin: _OriginSamples) -> complex:
    nodes, weights = quadrature.centred_rule(z)
    near = complex(np.dot(as_complex_callable(g)(nodes) / (nodes - z), weights))
    values, zeta, w = origin.values, origin.nodes, origin.weights
    over_zeta = complex(np.dot(values / zeta, w))
    conj_over_zeta = complex(np.dot(np.conj(values) / np.conj(zeta), w))
    reflected = complex(np.dot(np.conj(values) / (1 - z * np.conj(zeta)), w))
    return -(2 * near - over_zeta + conj_over_zeta + 2 * z * reflected) / (2 * np.pi)


def _pi_value(g, z: complex, quadrature: DiskQuadrature, eps: float, origin: _OriginSamples) -> complex:
    g = as_complex_callable(g)
    nodes, weights = quadrature.centred_rule(z, eps)
    centre = complex(g(np.asarray([z]))[0])
    principal = complex(np.dot((g(nodes) - centre) / (nodes - z) ** 2, weights))
    reflected = complex(np.dot(np.conj(origin.values) / (1 - z * np.conj(origin.nodes)) ** 2, origin.weights))
    return -(principal + reflected) / np.pi


def pi_operator_refinement(g, points, quadrature: Optional[DiskQuadrature] = None, eps: Optional[float] = None):
    """
    Evaluate ``T g`` with exclusion radii ``eps`` and ``eps / 2``.

    Returns:
        Tuple ``(values, gaps)`` where ``gaps = |T_eps - T_eps/2|`` per point.
    """
    quadrature = quadrature or DiskQuadrature()
    eps = quadrature.exclusion_radius if eps is None else eps
    origin = _OriginSamples(g, quadrature)
    points = np.atleast_1d(np.asarray(points, dtype=complex))
    coarse = np.array([_pi_value(g, z, quadrature, eps, origin) for z in points])
    fine = np.array([_pi_value(g, z, quadrature, eps / 2, origin) for z in points])
    return fine, np.abs(coarse - fine)


# ----------------------------------------------------------------------
# Public operators
# ----------------------------------------------------------------------
def pompeiu_operator(g, method: str = "spectral", quadrature: Optional[DiskQuadrature] = None):
    """Cauchy-Pompeiu area operator ``T_D``."""
    if method == "spectral":
        return pompeiu_poly(_require_poly(g))
    if method == "quadrature":
        quadrature = quadrature or DiskQuadrature()
        return IntegralField(lambda z: _pompeiu_value(g, z, quadrature), "pompeiu_operator")
    raise ValueError(f"Unknown evaluation method {method!r}")


def schwarz_area_operator(f, method: str = "spectral", quadrature: Optional[DiskQuadrature] = None):
    """
    Area term ``S f`` of the Schwarz problem for ``d/dz*``.

    Args:
        f: ``ComponentPoly`` (spectral or quadrature) or vectorized callable (quadrature).
        method: ``"spectral"`` or ``"quadrature"``.
        quadrature: Rule for the quadrature path.

    Returns:
        ``ComponentPoly`` on the spectral path, ``IntegralField`` otherwise.
    """
    if method == "spectral":
        return schwarz_area_poly(_require_poly(f))
    if method == "quadrature":
        quadrature = quadrature or DiskQuadrature()
        origin = _OriginSamples(f, quadrature)
        return IntegralField(lambda z: _schwarz_area_value(f, z, quadrature, origin), "schwarz_area_operator")
    raise ValueError(f"Unknown evaluation method {method!r}")


def schwarz_area_operator_conj(f, method: str = "spectral", quadrature: Optional[DiskQuadrature] = None):
    """``S* f = conj(S(conj f))``, the operator used on the ``p+`` component."""
    if method == "spectral":
        return schwarz_area_conj_poly(_require_poly(f))
    g = as_complex_callable(f)
    inner = schwarz_area_operator(lambda z: np.conj(g(z)), "quadrature", quadrature)
    return IntegralField(lambda z: np.conj(inner.evaluate(np.asarray([z]))[0]), "schwarz_area_operator_conj")


def pi_operator(
    g,
    method: str = "spectral",
    quadrature: Optional[DiskQuadrature] = None,
    eps: Optional[float] = None,
    pv_tol: Optional[float] = None,
):
    """
    Beurling-type operator ``T g`` (principal value).

    On the quadrature path each evaluation also runs the ``eps / 2``
    refinement; when ``pv_tol`` is given a disagreement above it raises
    ``QuadratureConvergenceError``.
    """
    if method == "spectral":
        return pi_operator_poly(_require_poly(g))
    if method != "quadrature":
        raise ValueError(f"Unknown evaluation method {method!r}")
    quadrature = quadrature or DiskQuadrature()
    eps = quadrature.exclusion_radius if eps is None else eps
    origin = _OriginSamples(g, quadrature)

    def rule(z: complex) -> complex:
        fine = _pi_value(g, z, quadrature, eps / 2, origin)
        if pv_tol is not None:
            coarse = _pi_value(g, z, quadrature, eps, origin)
            if abs(coarse - fine) > pv_tol:
                logger.warning("Principal value at %s not converged: gap %.3e", z, abs(coarse - fine))
                raise QuadratureConvergenceError(
                    f"Principal value refinement gap {abs(coarse - fine):.3e} exceeds {pv_tol:.3e} at z={z}"
                )
        return fine

    return IntegralField(rule, "pi_operator")


def t_bicomplex(f, method: str = "spectral", quadrature: Optional[DiskQuadrature] = None):
    """
    Bicomplex area operator ``T_B f = p+ S*(f+) + p- S(f-)``; ``delbar T_B f = f``.

    Returns:
        ``PolyField`` on the spectral path, ``PointField`` on the quadrature path.
    """
    if method == "spectral":
        if not isinstance(f, PolyField):
            raise TypeError("The spectral path of t_bicomplex needs a PolyField")
        return PolyField(schwarz_area_conj_poly(f.plus), schwarz_area_poly(f.minus))
    if method != "quadrature":
        raise ValueError(f"Unknown evaluation method {method!r}")
    plus = schwarz_area_operator_conj(lambda z: f.evaluate(z).plus, "quadrature", quadrature)
    minus = schwarz_area_operator(lambda z: f.evaluate(z).minus, "quadrature", quadrature)

    def rule(z: np.ndarray) -> IdempotentArray:
        return IdempotentArray(plus.evaluate(z), minus.evaluate(z))

    return PointField(rule, "t_bicomplex")


def _require_poly(g) -> ComponentPoly:
    if not isinstance(g, ComponentPoly):
        raise TypeError("The spectral path needs a ComponentPoly; use method='quadrature' for other fields")
    return g


__all__ = [
    "pompeiu_poly",
    "reflection_poly",
    "pi_operator_poly",
    "schwarz_area_poly",
    "schwarz_area_conj_poly",
    "pompeiu_operator",
    "schwarz_area_operator",
    "schwarz_area_operator_conj",
    "pi_operator",
    "pi_operator_refinement",
    "t_bicomplex",
]
