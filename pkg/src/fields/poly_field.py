"""
Exact bicomplex polynomial fields.

A ``PolyField`` represents ``sum c[m, n] zhat**m zhat_star**n`` where ``zhat``
is the bicomplexification of the evaluation point and ``zhat_star`` that of
its conjugate.  Internally the field keeps one ``ComponentPoly`` per
idempotent component: ``zhat`` has components ``(conj(z), z)`` and
``zhat_star`` has ``(z, conj(z))``, so every bicomplex operation reduces to
complex polynomial arithmetic on the two components.
"""

from __future__ import annotations

import logging
from typing import Dict, Iterable, Mapping, Sequence, Tuple

import numpy as np

from ..algebra.bicomplex import (
    ONE,
    Bicomplex,
    IdempotentArray,
    IdempotentPair,
    as_bicomplex,
    bc_norm,
    from_idempotent,
)
from ..tools.errors import EllipticityError
from .component_poly import ComponentPoly

logger = logging.getLogger(__name__)


class PolyField:
    """Bicomplex-valued polynomial in ``zhat`` and ``zhat_star``."""

    __slots__ = ("plus", "minus")

    def __init__(self, plus: ComponentPoly, minus: ComponentPoly) -> None:
        self.plus = plus
        self.minus = minus

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def from_components(cls, plus: ComponentPoly, minus: ComponentPoly) -> "PolyField":
        return cls(plus, minus)

    @classmethod
    def zero(cls) -> "PolyField":
        return cls(ComponentPoly.zero(), ComponentPoly.zero())

    @classmethod
    def constant(cls, value) -> "PolyField":
        value = as_bicomplex(value)
        return cls(ComponentPoly.constant(value.plus), ComponentPoly.constant(value.minus))

    @classmethod
    def zhat(cls) -> "PolyField":
        return cls(ComponentPoly.zstar(), ComponentPoly.z())

    @classmethod
    def zhat_star(cls) -> "PolyField":
        return cls(ComponentPoly.z(), ComponentPoly.zstar())

    @classmethod
    def from_complex(cls, poly: ComponentPoly) -> "PolyField":
        """Embed a complex field ``P`` as ``P + j 0`` (both components equal ``P``)."""
        return cls(poly, poly)

    @classmethod
    def from_coeffs(cls, coeffs: Mapping[Tuple[int, int], object]) -> "PolyField":
        plus_terms: Dict[Tuple[int, int], complex] = {}
        minus_terms: Dict[Tuple[int, int], complex] = {}
        for (m, n), value in coeffs.items():
            value = as_bicomplex(value)
            plus_terms[(n, m)] = plus_terms.get((n, m), 0j) + value.plus
            minus_terms[(m, n)] = minus_terms.get((m, n), 0j) + value.minus
        return cls(ComponentPoly.from_dict(plus_terms), ComponentPoly.from_dict(minus_terms))

    @classmethod
    def mu_holomorphic(cls, coefficients: Sequence[object], mu) -> "PolyField":
        """``sum a_k (zhat + mu zhat_star)**k``, annihilated by ``delbar - mu del``."""
        zeta = cls.zhat() + cls.zhat_star().scale(as_bicomplex(mu))
        result = cls.zero()
        power = cls.constant(ONE)
        for coefficient in coefficients:
            result = result + power.scale(as_bicomplex(coefficient))
            power = power * zeta
        return result

    # ------------------------------------------------------------------
    # Representation
    # ------------------------------------------------------------------
    def to_coeffs(self) -> Dict[Tuple[int, int], Bicomplex]:
        """Coefficient map ``(m, n) -> c`` of the ``zhat**m zhat_star**n`` expansion."""
        pairs: Dict[Tuple[int, int], list] = {}
        for n, m, c in self.plus.items():
            pairs.setdefault((m, n), [0j, 0j])[0] = c
        for m, n, c in self.minus.items():
            pairs.setdefault((m, n), [0j, 0j])[1] = c
        return {
            key: from_idempotent(IdempotentPair(plus, minus))
            for key, (plus, minus) in sorted(pairs.items())
        }

    @property
    def max_degree(self) -> int:
        return max(self.plus.degree, self.minus.degree)

    def max_coeff_norm(self) -> float:
        """Largest bicomplex norm over the coefficients of the expansion."""
        norms = [bc_norm(c) for c in self.to_coeffs().values()]
        return max(norms, default=0.0)

    def sup_bound(self) -> float:
        """Upper bound of the sup of the bicomplex norm on the closed disk."""
        return float(np.sqrt((self.plus.sup_bound() ** 2 + self.minus.sup_bound() ** 2) / 2))

    def is_zero(self, tol: float = 0.0) -> bool:
        return self.plus.is_zero(tol) and self.minus.is_zero(tol)

    def allclose(self, other: "PolyField", tol: float = 1e-12) -> bool:
        return (self - other).max_coeff_norm() <= tol

    def is_complex_embedded(self, tol: float = 1e-12) -> bool:
        return self.plus.allclose(self.minus, tol)

    def is_real_valued(self, tol: float = 1e-12) -> bool:
        """Real-valued fields have equal components that are real polynomials."""
        return self.is_complex_embedded(tol) and self.minus.is_real_valued(tol)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------
    def __add__(self, other: object) -> "PolyField":
        other = _coerce(other)
        return PolyField(self.plus + other.plus, self.minus + other.minus)

    __radd__ = __add__

    def __neg__(self) -> "PolyField":
        return PolyField(-self.plus, -self.minus)

    def __sub__(self, other: object) -> "PolyField":
        return self + (-_coerce(other))

    def __rsub__(self, other: object) -> "PolyField":
        return _coerce(other) - self

    def __mul__(self, other: object) -> "PolyField":
        other = _coerce(other)
        return PolyField(self.plus * other.plus, self.minus * other.minus)

    __rmul__ = __mul__

    def scale(self, w: Bicomplex) -> "PolyField":
        w = as_bicomplex(w)
        return PolyField(self.plus * w.plus, self.minus * w.minus)

    def power(self, k: int) -> "PolyField":
        return PolyField(self.plus**k, self.minus**k)

    def bc_conj(self) -> "PolyField":
        """Pointwise bicomplex conjugate; swaps the idempotent components."""
        return PolyField(self.minus, self.plus)

    def idempotent_conj(self) -> "PolyField":
        """Pointwise ``p+ (w+)* + p- (w-)*``."""
        return PolyField(self.plus.conj(), self.minus.conj())

    # ------------------------------------------------------------------
    # Differential operators
    # ------------------------------------------------------------------
    def d_z(self) -> "PolyField":
        return PolyField(self.plus.d_z(), self.minus.d_z())

    def d_zstar(self) -> "PolyField":
        return PolyField(self.plus.d_zstar(), self.minus.d_zstar())

    def bc_del(self) -> "PolyField":
        """``del = p+ d/dz* + p- d/dz``."""
        return PolyField(self.plus.d_zstar(), self.minus.d_z())

    def bc_delbar(self) -> "PolyField":
        """``delbar = p+ d/dz + p- d/dz*``."""
        return PolyField(self.plus.d_z(), self.minus.d_zstar())

    # ------------------------------------------------------------------
    # Evaluation
    # ------------------------------------------------------------------
    def evaluate(self, z) -> IdempotentArray:
        return IdempotentArray(self.plus.evaluate(z), self.minus.evaluate(z))

    def eval(self, z: complex) -> Bicomplex:
        values = self.evaluate(complex(z))
        return from_idempotent(IdempotentPair(complex(values.plus), complex(values.minus)))

    def __repr__(self) -> str:
        return f"PolyField({self.to_coeffs()!r})"


def _coerce(value: object) -> PolyField:
    if isinstance(value, PolyField):
        return value
    return PolyField.constant(value)


def check_ellipticity(mu, bound: float = 1.0) -> Bicomplex:
    """Return ``mu`` as a bicomplex constant, rejecting ``||mu|| >= bound``."""
    mu = as_bicomplex(mu)
    if bc_norm(mu) >= bound:
        raise EllipticityError(f"Beltrami coefficient norm {bc_norm(mu):.6g} must be below {bound}")
    return mu


def beltrami_apply(f: PolyField, mu) -> PolyField:
    """Apply the Beltrami operator ``delbar f - mu del f`` for a constant ``mu``."""
    mu = check_ellipticity(mu)
    return f.bc_delbar() - f.bc_del().scale(mu)


def beltrami_power(f: PolyField, mu, k: int) -> PolyField:
    """``(delbar - mu del)**k f``."""
    mu = check_ellipticity(mu)
    for _ in range(k):
        f = f.bc_delbar() - f.bc_del().scale(mu)
    return f


def d_z(f: PolyField) -> PolyField:
    return f.d_z()


def d_zstar(f: PolyField) -> PolyField:
    return f.d_zstar()


def bc_del(f: PolyField) -> PolyField:
    return f.bc_del()


def bc_delbar(f: PolyField) -> PolyField:
    return f.bc_delbar()


def eval_field(f: PolyField, z: complex) -> Bicomplex:
    return f.eval(z)


def sum_fields(fields: Iterable[PolyField]) -> PolyField:
    total = PolyField.zero()
    for field in fields:
        total = total + field
    return total


__all__ = [
    "PolyField",
    "beltrami_apply",
    "beltrami_power",
    "check_ellipticity",
    "d_z",
    "d_zstar",
    "bc_del",
    "bc_delbar",
    "eval_field",
    "sum_fields",
]
