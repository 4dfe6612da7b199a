"""
Bicomplex numbers and their idempotent decomposition.

A bicomplex number is written ``w = Sc w + j Vec w`` with complex scalar and
vector parts and ``j**2 = -1``.  Every value also has a unique idempotent
representation ``w = p+ w+ + p- w-`` with ``p± = (1 ± j i) / 2`` and
``w± = Sc w ∓ i Vec w``.  Products are computed componentwise in that
representation; the Cartesian product formula is kept as ``mul_cartesian``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Union

import numpy as np

Number = Union[int, float, complex]


def _times_i(value: complex) -> complex:
    """Multiply by the complex unit without introducing signed-zero noise."""
    value = complex(value)
    return complex(-value.imag, value.real)


@dataclass(frozen=True)
class IdempotentPair:
    """
    Idempotent components ``(w+, w-)`` of a bicomplex number.

    Pairs produced by ``to_idempotent`` remember the value they came from so
    that converting back is bit-identical.
    """

    plus: complex
    minus: complex
    origin: Optional["Bicomplex"] = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "plus", complex(self.plus))
        object.__setattr__(self, "minus", complex(self.minus))


@dataclass(frozen=True)
class Bicomplex:
    """
    Bicomplex value with scalar part ``sc`` and vector part ``vec``.

    Instances are immutable and hashable.  Arithmetic operators accept other
    bicomplex values as well as Python numbers, which embed as ``sc = x``.
    """

    sc: complex = 0j
    vec: complex = 0j

    def __post_init__(self) -> None:
        object.__setattr__(self, "sc", complex(self.sc))
        object.__setattr__(self, "vec", complex(self.vec))

    # ------------------------------------------------------------------
    # Idempotent coordinates
    # ------------------------------------------------------------------
    @property
    def plus(self) -> complex:
        return self.sc - _times_i(self.vec)

    @property
    def minus(self) -> complex:
        return self.sc + _times_i(self.vec)

    # ------------------------------------------------------------------
    # Operators
    # ------------------------------------------------------------------
    def __add__(self, other: object) -> "Bicomplex":
        other = as_bicomplex(other)
        return Bicomplex(self.sc + other.sc, self.vec + other.vec)

    __radd__ = __add__

    def __sub__(self, other: object) -> "Bicomplex":
        other = as_bicomplex(other)
        return Bicomplex(self.sc - other.sc, self.vec - other.vec)

    def __rsub__(self, other: object) -> "Bicomplex":
        return as_bicomplex(other) - self

    def __neg__(self) -> "Bicomplex":
        return Bicomplex(-self.sc, -self.vec)

    def __mul__(self, other: object) -> "Bicomplex":
        return mul(self, as_bicomplex(other))

    __rmul__ = __mul__

    def __abs__(self) -> float:
        return bc_norm(self)

    def isclose(self, other: object, tol: float = 1e-12) -> bool:
        """Return True if the two values differ by at most ``tol`` in norm."""
        return bc_norm(self - as_bicomplex(other)) <= tol

    def __repr__(self) -> str:
        return f"Bicomplex(sc={self.sc!r}, vec={self.vec!r})"


def as_bicomplex(value: object) -> Bicomplex:
    """Coerce a number or bicomplex value to ``Bicomplex``."""
    if isinstance(value, Bicomplex):
        return value
    if isinstance(value, IdempotentPair):
        return from_idempotent(value)
    if isinstance(value, (int, float, complex, np.number)):
        return Bicomplex(complex(value), 0j)
    raise TypeError(f"Cannot interpret {type(value).__name__} as a bicomplex number")


def to_idempotent(w: Bicomplex) -> IdempotentPair:
    """Return ``(Sc w - i Vec w, Sc w + i Vec w)``."""
    return IdempotentPair(w.plus, w.minus, origin=w)


def from_idempotent(pair: IdempotentPair) -> Bicomplex:
    """Reassemble ``p+ w+ + p- w-`` into scalar and vector parts."""
    origin = pair.origin
    if origin is not None and origin.plus == pair.plus and origin.minus == pair.minus:
        return origin
    sc = (pair.plus + pair.minus) / 2
    # (w- - w+) / (2i)
    diff = (pair.minus - pair.plus) / 2
    vec = complex(diff.imag, -diff.real)
    return Bicomplex(sc, vec)


def mul(a: Bicomplex, b: Bicomplex) -> Bicomplex:
    """Bicomplex product computed componentwise in idempotent coordinates."""
    return from_idempotent(IdempotentPair(a.plus * b.plus, a.minus * b.minus))


def mul_cartesian(a: Bicomplex, b: Bicomplex) -> Bicomplex:
    """Product via ``(u1 + j u2)(v1 + j v2) = u1 v1 - u2 v2 + j (u1 v2 + u2 v1)``."""
    return Bicomplex(a.sc * b.sc - a.vec * b.vec, a.sc * b.vec + a.vec * b.sc)


def bc_conj(w: Bicomplex) -> Bicomplex:
    """
    Bicomplex conjugate ``Sc w - j Vec w``.

    In idempotent coordinates this swaps the two components.
    """
    return Bicomplex(w.sc, -w.vec)


def complex_conj(w: Bicomplex) -> Bicomplex:
    """Complex-conjugate both parts: ``(Sc w)* + j (Vec w)*``."""
    return Bicomplex(w.sc.conjugate(), w.vec.conjugate())


def idempotent_conj(w: Bicomplex) -> Bicomplex:
    """Conjugate both idempotent components: ``p+ (w+)* + p- (w-)*``."""
    return bc_conj(complex_conj(w))


def bc_norm(w: Bicomplex) -> float:
    """Bicomplex norm ``sqrt((|w+|**2 + |w-|**2) / 2)``."""
    return math.sqrt((abs(w.plus) ** 2 + abs(w.minus) ** 2) / 2)


def bicomplexify(z: Number) -> Bicomplex:
    """Map ``z = x + iy`` to ``x + jy``; its idempotent pair is ``(z*, z)``."""
    z = complex(z)
    return Bicomplex(z.real, z.imag)


def is_complex_embedded(w: Bicomplex, tol: float = 0.0) -> bool:
    """True when ``w`` has no vector part, i.e. both components agree."""
    return abs(w.vec) <= tol


ONE = Bicomplex(1, 0)
ZERO = Bicomplex(0, 0)
J = Bicomplex(0, 1)
I = Bicomplex(1j, 0)
P_PLUS = from_idempotent(IdempotentPair(1, 0))
P_MINUS = from_idempotent(IdempotentPair(0, 1))


class IdempotentArray(NamedTuple):
    """Idempotent component arrays of a sampled bicomplex field."""

    plus: np.ndarray
    minus: np.ndarray

    @classmethod
    def from_parts(cls, sc: np.ndarray, vec: np.ndarray) -> "IdempotentArray":
        sc = np.asarray(sc, dtype=complex)
        vec = np.asarray(vec, dtype=complex)
        return cls(sc - 1j * vec, sc + 1j * vec)

    @classmethod
    def lift(cls, values) -> "IdempotentArray":
        """Embed complex samples as ``plus = minus = values``; bicomplex arrays pass through."""
        if isinstance(values, IdempotentArray):
            return values
        values = np.asarray(values, dtype=complex)
        return cls(values, values.copy())

    @classmethod
    def constant(cls, w: Bicomplex, shape) -> "IdempotentArray":
        return cls(np.full(shape, w.plus, dtype=complex), np.full(shape, w.minus, dtype=complex))

    @property
    def sc(self) -> np.ndarray:
        return (self.plus + self.minus) / 2

    @property
    def vec(self) -> np.ndarray:
        return (self.minus - self.plus) / 2j

    def norm(self) -> np.ndarray:
        """Pointwise bicomplex norm."""
        return np.sqrt((np.abs(self.plus) ** 2 + np.abs(self.minus) ** 2) / 2)

    def value_at(self, index) -> Bicomplex:
        return from_idempotent(IdempotentPair(self.plus[index], self.minus[index]))

    def __add__(self, other: "IdempotentArray") -> "IdempotentArray":  # type: ignore[override]
        return IdempotentArray(self.plus + other.plus, self.minus + other.minus)

    def __sub__(self, other: "IdempotentArray") -> "IdempotentArray":
        return IdempotentArray(self.plus - other.plus, self.minus - other.minus)

    def scale(self, w: Bicomplex) -> "IdempotentArray":
        return IdempotentArray(w.plus * self.plus, w.minus * self.minus)

    def multiply(self, other: "IdempotentArray") -> "IdempotentArray":
        return IdempotentArray(self.plus * other.plus, self.minus * other.minus)

    def bc_conj(self) -> "IdempotentArray":
        return IdempotentArray(self.minus, self.plus)

    def idempotent_conj(self) -> "IdempotentArray":
        return IdempotentArray(np.conj(self.plus), np.conj(self.minus))


__all__ = [
    "Bicomplex",
    "IdempotentPair",
    "IdempotentArray",
    "as_bicomplex",
    "to_idempotent",
    "from_idempotent",
    "mul",
    "mul_cartesian",
    "bc_conj",
    "complex_conj",
    "idempotent_conj",
    "bc_norm",
    "bicomplexify",
    "is_complex_embedded",
    "ONE",
    "ZERO",
    "J",
    "I",
    "P_PLUS",
    "P_MINUS",
]
