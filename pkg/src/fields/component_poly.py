"""
Complex polynomials in z and z*.

A ``ComponentPoly`` stores a coefficient matrix ``a[m, n]`` for the monomial
``z**m * conj(z)**n``.  It is the building block of ``PolyField`` (one
polynomial per idempotent component) and the exact representation on which
the spectral operator paths work.
"""

from __future__ import annotations

from typing import Dict, Iterator, Mapping, Tuple, Union

import numpy as np

Scalar = Union[int, float, complex]


def _as_matrix(coeffs) -> np.ndarray:
    arr = np.array(coeffs, dtype=complex, ndmin=2)
    if arr.ndim != 2:
        raise ValueError(f"Coefficient matrix must be 2-D, got shape {arr.shape}")
    return arr


def _pad(arr: np.ndarray, shape: Tuple[int, int]) -> np.ndarray:
    if arr.shape == shape:
        return arr
    out = np.zeros(shape, dtype=complex)
    out[: arr.shape[0], : arr.shape[1]] = arr
    return out


class ComponentPoly:
    """Complex polynomial ``sum a[m, n] z**m conj(z)**n`` with exact calculus."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=((0j,),)) -> None:
        arr = _trim(_as_matrix(coeffs))
        arr.setflags(write=False)
        self._coeffs = arr

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls) -> "ComponentPoly":
        return cls([[0j]])

    @classmethod
    def constant(cls, value: Scalar) -> "ComponentPoly":
        return cls([[complex(value)]])

    @classmethod
    def monomial(cls, m: int, n: int, coefficient: Scalar = 1.0) -> "ComponentPoly":
        if m < 0 or n < 0:
            raise ValueError("Monomial exponents must be non-negative")
        arr = np.zeros((m + 1, n + 1), dtype=complex)
        arr[m, n] = coefficient
        return cls(arr)

    @classmethod
    def z(cls) -> "ComponentPoly":
        return cls.monomial(1, 0)

    @classmethod
    def zstar(cls) -> "ComponentPoly":
        return cls.monomial(0, 1)

    @classmethod
    def from_dict(cls, terms: Mapping[Tuple[int, int], Scalar]) -> "ComponentPoly":
        if not terms:
            return cls.zero()
        rows = max(m for m, _ in terms) + 1
        cols = max(n for _, n in terms) + 1
        arr = np.zeros((rows, cols), dtype=complex)
        for (m, n), value in terms.items():
            if m < 0 or n < 0:
                raise ValueError(f"Negative exponent pair ({m}, {n})")
            arr[m, n] += value
        return cls(arr)

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------
    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def shape(self) -> Tuple[int, int]:
        return self._coeffs.shape

    @property
    def degree(self) -> int:
        """Total degree ``max(m + n)`` over non-zero terms, ``-1`` for zero."""
        rows, cols = np.nonzero(self._coeffs)
        if rows.size == 0:
            return -1
        return int((rows + cols).max())

    def items(self) -> Iterator[Tuple[int, int, complex]]:
        for m, n in zip(*np.nonzero(self._coeffs)):
            yield int(m), int(n), complex(self._coeffs[m, n])

    def to_dict(self) -> Dict[Tuple[int, int], complex]:
        return {(m, n): c for m, n, c in self.items()}

    def coefficient(self, m: int, n: int) -> complex:
        if m < self.shape[0] and n < self.shape[1]:
            return complex(self._coeffs[m, n])
        return 0j

    def max_abs(self) -> float:
        return float(np.abs(self._coeffs).max())

    def sup_bound(self) -> float:
        """Upper bound of the sup norm on the closed disk (sum of |a[m, n]|)."""
        return float(np.abs(self._coeffs).sum())

    def is_zero(self, tol: float = 0.0) -> bool:
        return self.max_abs() <= tol

    def allclose(self, other: "ComponentPoly", tol: float = 1e-12) -> bool:
        return (self - other).max_abs() <= tol

    def is_real_valued(self, tol: float = 1e-12) -> bool:
        """True when the polynomial takes real values, i.e. equals its conjugate."""
        return self.allclose(self.conj(), tol)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------
    def __add__(self, other: object) -> "ComponentPoly":
        other = _coerce(other)
        shape = (max(self.shape[0], other.shape[0]), max(self.shape[1], other.shape[1]))
        return ComponentPoly(_pad(self._coeffs, shape) + _pad(other._coeffs, shape))

    __radd__ = __add__

    def __neg__(self) -> "ComponentPoly":
        return ComponentPoly(-self._coeffs)

    def __sub__(self, other: object) -> "ComponentPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: object) -> "ComponentPoly":
        return _coerce(other) - self

    def __mul__(self, other: object) -> "ComponentPoly":
        if isinstance(other, (int, float, complex, np.number)):
            return ComponentPoly(self._coeffs * complex(other))
        other = _coerce(other)
        a, b = self._coeffs, other._coeffs
        out = np.zeros((a.shape[0] + b.shape[0] - 1, a.shape[1] + b.shape[1] - 1), dtype=complex)
        for m, n, c in other.items():
            out[m : m + a.shape[0], n : n + a.shape[1]] += c * a
        return ComponentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ComponentPoly":
        if k < 0:
            raise ValueError("Negative powers are not polynomials")
        result = ComponentPoly.constant(1.0)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "ComponentPoly":
        """The polynomial ``z -> conj(p(z))``."""
        return ComponentPoly(self._coeffs.conj().T)

    # ------------------------------------------------------------------
    # Calculus
    # ------------------------------------------------------------------
    def d_z(self) -> "ComponentPoly":
        if self.shape[0] == 1:
            return ComponentPoly.zero()
        scale = np.arange(1, self.shape[0])[:, None]
        return ComponentPoly(self._coeffs[1:, :] * scale)

    def d_zstar(self) -> "ComponentPoly":
        if self.shape[1] == 1:
            return ComponentPoly.zero()
        scale = np.arange(1, self.shape[1])[None, :]
        return ComponentPoly(self._coeffs[:, 1:] * scale)

    def antiderivative_zstar(self) -> "ComponentPoly":
        """Primitive in the second variable vanishing at ``conj(z) = 0``."""
        rows, cols = self.shape
        out = np.zeros((rows, cols + 1), dtype=complex)
        out[:, 1:] = self._coeffs / np.arange(1, cols + 1)[None, :]
        return ComponentPoly(out)

    def compose(self, first: "ComponentPoly", second: "ComponentPoly") -> "ComponentPoly":
        """Substitute ``first`` for z and ``second`` for conj(z) (as independent variables)."""
        first_powers = [ComponentPoly.constant(1.0)]
        for _ in range(1, self.shape[0]):
            first_powers.append(first_powers[-1] * first)
        second_powers = [ComponentPoly.constant(1.0)]
        for _ in range(1, self.shape[1]):
            second_powers.append(second_powers[-1] * second)
        result = ComponentPoly.zero()
        for m, n, c in self.items():
            result = result + (first_powers[m] * second_powers[n]) * c
        return result

    # ------------------------------------------------------------------
    # Evaluation
    # ------------------------------------------------------------------
    def evaluate(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        z_powers = z[..., None] ** np.arange(self.shape[0])
        zbar_powers = np.conj(z)[..., None] ** np.arange(self.shape[1])
        return np.einsum("...m,mn,...n->...", z_powers, self._coeffs, zbar_powers)

    def __call__(self, z) -> np.ndarray:
        return self.evaluate(z)

    def circle_fourier(self, r: float = 1.0) -> Dict[int, complex]:
        """Fourier coefficients of ``theta -> p(r e^{i theta})``."""
        out: Dict[int, complex] = {}
        for m, n, c in self.items():
            out[m - n] = out.get(m - n, 0j) + c * r ** (m + n)
        return out

    def __repr__(self) -> str:
        return f"ComponentPoly({self.to_dict()!r})"


def _trim(arr: np.ndarray) -> np.ndarray:
    rows = np.nonzero(np.any(arr != 0, axis=1))[0]
    cols = np.nonzero(np.any(arr != 0, axis=0))[0]
    if rows.size == 0:
        return np.zeros((1, 1), dtype=complex)
    return arr[: rows[-1] + 1, : cols[-1] + 1].copy()


def _coerce(value: object) -> ComponentPoly:
    if isinstance(value, ComponentPoly):
        return value
    if isinstance(value, (int, float, complex, np.number)):
        return ComponentPoly.constant(value)
    raise TypeError(f"Cannot combine ComponentPoly with {type(value).__name__}")


__all__ = ["ComponentPoly"]
