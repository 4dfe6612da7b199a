"""
Higher-order iterated Beltrami (HOIB) equations with constant coefficient.

A solution of ``L**n w = 0`` with ``L = delbar - mu del`` is written as
``w = sum_k zhat_star**k w_k`` with first-order components ``L w_k = 0``.
Since ``L zhat_star = 1`` the components are recovered by the finite Taylor
inversion ``w_k = (1/k!) sum_j ((-1)**j / j!) zhat_star**j L**(k+j) w``.

Both forms share the code path: bicomplex bundles hold ``PolyField``
components with a ``Bicomplex`` coefficient, complex bundles hold
``ComponentPoly`` components with ``L = d/dz* - mu d/dz`` and ``conj(z)`` in
place of ``zhat_star``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import factorial
from typing import List, Optional, Sequence, Union

import numpy as np

from ..algebra.bicomplex import Bicomplex, IdempotentPair, as_bicomplex, bc_norm, from_idempotent
from ..fields.component_poly import ComponentPoly
from ..fields.poly_field import PolyField, beltrami_apply, check_ellipticity
from ..hardy.profiler import DEFAULT_ANGLES, DEFAULT_RADII, hardy_norm_estimate
from ..tools.errors import AnnihilationError, EllipticityError

logger = logging.getLogger(__name__)

Field = Union[PolyField, ComponentPoly]
Coefficient = Union[Bicomplex, complex]

ANNIHILATION_TOL = 1e-10


# ----------------------------------------------------------------------
# Form-dependent primitives
# ----------------------------------------------------------------------
def _is_complex(w: Field) -> bool:
    return isinstance(w, ComponentPoly)


def _check_mu(mu, complex_form: bool) -> Coefficient:
    if complex_form:
        mu = complex(mu)
        if abs(mu) >= 1:
            raise EllipticityError(f"|mu| = {abs(mu):.6g} must be below 1")
        return mu
    return check_ellipticity(mu)


def _apply(w: Field, mu: Coefficient) -> Field:
    if _is_complex(w):
        return w.d_zstar() - w.d_z() * mu
    return beltrami_apply(w, mu)


def _iterate(w: Field, mu: Coefficient, k: int) -> Field:
    for _ in range(k):
        w = _apply(w, mu)
    return w


def _star(complex_form: bool) -> Field:
    return ComponentPoly.zstar() if complex_form else PolyField.zhat_star()


def _zero(complex_form: bool) -> Field:
    return ComponentPoly.zero() if complex_form else PolyField.zero()


def _size(w: Field) -> float:
    """Largest coefficient modulus (complex) or bicomplex norm (bicomplex)."""
    return w.max_abs() if _is_complex(w) else w.max_coeff_norm()


def _multiply(a: Field, b: Field, scalar: float) -> Field:
    product = a * b
    if _is_complex(product):
        return product * scalar
    return product.scale(Bicomplex(scalar, 0))


# ----------------------------------------------------------------------
# Bundle
# ----------------------------------------------------------------------
@dataclass
class HoibBundle:
    """First-order components ``w_0 .. w_{n-1}`` of an order-``n`` HOIB solution."""

    mu: Coefficient
    components: List[Field] = field(default_factory=list)
    _assembled: Optional[Field] = field(default=None, init=False, repr=False)

    def __post_init__(self) -> None:
        if not self.components:
            raise ValueError("A HOIB bundle needs at least one component")
        kinds = {_is_complex(w) for w in self.components}
        if len(kinds) != 1:
            raise TypeError("Bundle components must all be complex or all bicomplex")
        self.mu = _check_mu(self.mu, self.is_complex)

    @property
    def order(self) -> int:
        return len(self.components)

    @property
    def is_complex(self) -> bool:
        return _is_complex(self.components[0])

    def validate(self, tol: float = ANNIHILATION_TOL) -> None:
        """Raise ``AnnihilationError`` unless every component solves the first-order equation."""
        for k, w in enumerate(self.components):
            residual = _size(_apply(w, self.mu))
            if residual > tol:
                raise AnnihilationError(f"Component {k} is not annihilated: residual {residual:.3e} > {tol:.3e}")

    @property
    def assembled(self) -> Field:
        if self._assembled is None:
            self._assembled = assemble(self)
        return self._assembled


def assemble(bundle: HoibBundle) -> Field:
    """``w = sum_k zhat_star**k w_k``."""
    star = _star(bundle.is_complex)
    total = _zero(bundle.is_complex)
    for k, w in enumerate(bundle.components):
        total = total + (w if k == 0 else _star_power(star, k) * w)
    return total


def _star_power(star: Field, k: int) -> Field:
    return star**k if _is_complex(star) else star.power(k)


def extract_components(w: Field, mu, n: int, tol: float = ANNIHILATION_TOL) -> List[Field]:
    """
    Recover the first-order components of an order-``n`` solution.

    Raises:
        AnnihilationError: If ``L**n w`` has a coefficient above ``tol``.
    """
    if n < 1:
        raise ValueError("The order n must be positive")
    complex_form = _is_complex(w)
    mu = _check_mu(mu, complex_form)
    iterates = [w]
    for _ in range(n):
        iterates.append(_apply(iterates[-1], mu))
    leftover = _size(iterates[n])
    if leftover > tol:
        raise AnnihilationError(f"Field is not annihilated by the order-{n} Beltrami iterate ({leftover:.3e} > {tol:.3e})")

    star = _star(complex_form)
    components = []
    for k in range(n):
        total = _zero(complex_form)
        for j in range(n - k):
            scalar = (-1) ** j / (factorial(j) * factorial(k))
            total = total + _multiply(_star_power(star, j), iterates[k + j], scalar)
        components.append(total)
    logger.debug("Extracted %d HOIB components", n)
    return components


# ----------------------------------------------------------------------
# Hardy-type seminorms
# ----------------------------------------------------------------------
def hoib_hardy_seminorms(
    w: Field, mu, n: int, p: float, radii: Sequence[float] = DEFAULT_RADII, n_theta: int = DEFAULT_ANGLES
) -> List[float]:
    """
    ``sup_r (1/2pi) ∫ ||L**k w(r e^{i theta})||**p d theta`` for ``0 <= k < n``.

    The sup runs over the sampled radii only.
    """
    mu = _check_mu(mu, _is_complex(w))
    values = []
    current = w
    for k in range(n):
        if k:
            current = _apply(current, mu)
        estimate = hardy_norm_estimate(current, p, radii, n_theta)
        values.append(float(estimate**p))
    return values


def hoib_membership_check(
    bundle: HoibBundle, p: float, radii: Sequence[float] = DEFAULT_RADII, n_theta: int = DEFAULT_ANGLES
) -> dict:
    """Finiteness of the assembled seminorms next to the component Hardy estimates."""
    seminorms = hoib_hardy_seminorms(bundle.assembled, bundle.mu, bundle.order, p, radii, n_theta)
    components = [hardy_norm_estimate(w, p, radii, n_theta) for w in bundle.components]
    seminorms_finite = bool(np.all(np.isfinite(seminorms)))
    components_finite = bool(np.all(np.isfinite(components)))
    return {
        "order": bundle.order,
        "p": p,
        "radii": [float(r) for r in radii],
        "seminorms": seminorms,
        "component_estimates": [float(c) for c in components],
        "seminorms_finite": seminorms_finite,
        "components_finite": components_finite,
        "consistent": seminorms_finite == components_finite,
    }


# ----------------------------------------------------------------------
# Random bundles
# ----------------------------------------------------------------------
def _dyadic(rng: np.random.Generator, size, scale: int = 3, bits: int = 3) -> np.ndarray:
    return rng.integers(-scale, scale + 1, size=size) / 2.0**bits


def random_mu(rng: np.random.Generator, bound: float = 0.5, complex_form: bool = False) -> Coefficient:
    """Dyadic coefficient whose components have modulus at most ``bound``."""
    while True:
        parts = _dyadic(rng, 4, scale=4, bits=3)
        plus, minus = complex(parts[0], parts[1]), complex(parts[2], parts[3])
        if complex_form:
            if abs(plus) <= bound:
                return plus
            continue
        mu = from_idempotent(IdempotentPair(plus, minus))
        if abs(plus) <= bound and abs(minus) <= bound and bc_norm(mu) <= bound:
            return mu


def random_bundle(
    rng: np.random.Generator, n: int, degree: int, mu=None, complex_form: bool = False
) -> HoibBundle:
    """
    Bundle of ``n`` random ``mu``-holomorphic components of degree at most ``degree``.

    Coefficients are small dyadic rationals so the polynomial arithmetic of
    assembly and annihilation is exact in floating point.
    """
    mu = random_mu(rng, complex_form=complex_form) if mu is None else mu
    components: List[Field] = []
    for _ in range(n):
        raw = _dyadic(rng, (degree + 1, 4))
        if complex_form:
            zeta = ComponentPoly.z() + ComponentPoly.zstar() * complex(mu)
            w = ComponentPoly.zero()
            for k, row in enumerate(raw):
                w = w + zeta**k * complex(row[0], row[1])
            components.append(w)
        else:
            coefficients = [Bicomplex(complex(a, b), complex(c, d)) for a, b, c, d in raw]
            components.append(PolyField.mu_holomorphic(coefficients, as_bicomplex(mu)))
    return HoibBundle(mu=mu, components=components)


__all__ = [
    "HoibBundle",
    "assemble",
    "extract_components",
    "hoib_hardy_seminorms",
    "hoib_membership_check",
    "random_bundle",
    "random_mu",
    "ANNIHILATION_TOL",
]
