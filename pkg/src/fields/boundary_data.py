"""
Boundary data on the unit circle.

Data is stored either as a finite Fourier series ``sum c_k e^{ik theta}`` or
as samples on a uniform angular grid; the Fourier coefficients of sampled
data are obtained with the FFT.  Real data must have conjugate-symmetric
coefficients.  Bicomplex data keeps one complex ``BoundaryData`` per
idempotent component.
"""

from __future__ import annotations

from typing import Callable, Dict, Mapping, Optional

import numpy as np

from ..algebra.bicomplex import Bicomplex, IdempotentArray, IdempotentPair, as_bicomplex, from_idempotent
from ..tools.errors import BoundaryDataError
from .component_poly import ComponentPoly

KINDS = ("real", "complex")
SYMMETRY_TOL = 1e-12


class BoundaryData:
    """
    Real- or complex-valued function on the unit circle.

    Args:
        kind: ``"real"`` or ``"complex"``.
        fourier: Mapping from frequency ``k`` to coefficient.
        samples: Values at ``theta_j = 2 pi j / n``.
    """

    def __init__(
        self,
        kind: str = "real",
        fourier: Optional[Mapping[int, complex]] = None,
        samples: Optional[np.ndarray] = None,
    ) -> None:
        if kind not in KINDS:
            raise BoundaryDataError(f"Unknown boundary data kind {kind!r}; expected one of {KINDS}")
        if (fourier is None) == (samples is None):
            raise BoundaryDataError("Provide exactly one of fourier coefficients or samples")
        self.kind = kind
        self._fourier: Optional[Dict[int, complex]] = None
        self._samples: Optional[np.ndarray] = None
        if fourier is not None:
            self._fourier = {int(k): complex(v) for k, v in fourier.items() if v != 0}
        else:
            values = np.asarray(samples)
            if values.ndim != 1 or values.size < 2:
                raise BoundaryDataError("Samples must be a 1-D array with at least two values")
            if kind == "real" and np.iscomplexobj(values):
                if np.abs(values.imag).max() > SYMMETRY_TOL:
                    raise BoundaryDataError("Real boundary data has non-zero imaginary samples")
                values = values.real
            self._samples = values.astype(float if kind == "real" else complex)
        if kind == "real" and not self.is_real():
            raise BoundaryDataError("Real boundary data must have conjugate-symmetric Fourier coefficients")

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def from_fourier(cls, coefficients: Mapping[int, complex], kind: str = "real") -> "BoundaryData":
        return cls(kind=kind, fourier=coefficients)

    @classmethod
    def from_samples(cls, samples, kind: str = "real") -> "BoundaryData":
        return cls(kind=kind, samples=np.asarray(samples))

    @classmethod
    def from_function(cls, function: Callable[[np.ndarray], np.ndarray], n: int = 256, kind: str = "real") -> "BoundaryData":
        theta = 2 * np.pi * np.arange(n) / n
        values = np.asarray(function(theta))
        if kind == "real":
            values = np.real_if_close(values, tol=1000)
        return cls(kind=kind, samples=values)

    @classmethod
    def constant(cls, value: float) -> "BoundaryData":
        return cls(kind="real" if np.isreal(value) else "complex", fourier={0: value})

    @classmethod
    def cosine(cls, amplitude: float = 1.0) -> "BoundaryData":
        """``amplitude * cos(theta)``."""
        return cls(kind="real", fourier={1: amplitude / 2, -1: amplitude / 2})

    @classmethod
    def trace_of(cls, poly: ComponentPoly) -> "BoundaryData":
        """Complex boundary trace of a polynomial."""
        return cls(kind="complex", fourier=poly.circle_fourier(1.0))

    @classmethod
    def real_trace_of(cls, poly: ComponentPoly) -> "BoundaryData":
        """Real part of the boundary trace of a polynomial."""
        c = poly.circle_fourier(1.0)
        keys = set(c) | {-k for k in c}
        return cls(kind="real", fourier={k: (c.get(k, 0j) + np.conj(c.get(-k, 0j))) / 2 for k in keys})

    # ------------------------------------------------------------------
    # Spectral view
    # ------------------------------------------------------------------
    @property
    def is_sampled(self) -> bool:
        return self._samples is not None

    @property
    def samples(self) -> Optional[np.ndarray]:
        return self._samples

    def coefficients(self) -> Dict[int, complex]:
        """Fourier coefficients; computed by FFT for sampled data."""
        if self._fourier is not None:
            return dict(self._fourier)
        n = self._samples.size
        spectrum = np.fft.fft(self._samples) / n
        freqs = np.fft.fftfreq(n, d=1.0 / n).astype(int)
        return {int(k): complex(c) for k, c in zip(freqs, spectrum)}

    def max_frequency(self) -> int:
        coeffs = self.coefficients()
        return max((abs(k) for k, c in coeffs.items() if abs(c) > 0), default=0)

    def is_real(self, tol: float = SYMMETRY_TOL) -> bool:
        if self._samples is not None:
            return bool(np.abs(np.imag(self._samples)).max() <= tol)
        coeffs = self._fourier
        scale = max((abs(c) for c in coeffs.values()), default=0.0)
        return all(abs(c - np.conj(coeffs.get(-k, 0j))) <= tol * max(1.0, scale) for k, c in coeffs.items())

    def evaluate(self, theta) -> np.ndarray:
        theta = np.asarray(theta, dtype=float)
        total = np.zeros(theta.shape, dtype=complex)
        for k, c in self.coefficients().items():
            total = total + c * np.exp(1j * k * theta)
        if self.kind == "real":
            return total.real
        return total

    def harmonic_extension(self, z) -> np.ndarray:
        """Poisson extension ``sum c_k r^|k| e^{ik theta}`` into the disk."""
        z = np.asarray(z, dtype=complex)
        r, theta = np.abs(z), np.angle(z)
        total = np.zeros(z.shape, dtype=complex)
        for k, c in self.coefficients().items():
            total = total + c * r ** abs(k) * np.exp(1j * k * theta)
        if self.kind == "real":
            return total.real
        return total

    def conj(self) -> "BoundaryData":
        if self._samples is not None:
            return BoundaryData(kind=self.kind, samples=np.conj(self._samples))
        return BoundaryData(kind=self.kind, fourier={-k: np.conj(c) for k, c in self._fourier.items()})

    def __sub__(self, other: "BoundaryData") -> "BoundaryData":
        a, b = self.coefficients(), other.coefficients()
        kind = "real" if self.kind == other.kind == "real" else "complex"
        return BoundaryData(kind=kind, fourier={k: a.get(k, 0j) - b.get(k, 0j) for k in set(a) | set(b)})

    def __repr__(self) -> str:
        source = "samples" if self.is_sampled else "fourier"
        return f"BoundaryData(kind={self.kind!r}, {source}, max_frequency={self.max_frequency()})"


class BicomplexBoundaryData:
    """Bicomplex boundary data held as idempotent components."""

    kind = "bicomplex"

    def __init__(self, plus: BoundaryData, minus: BoundaryData) -> None:
        self.plus = _as_complex_kind(plus)
        self.minus = _as_complex_kind(minus)

    @classmethod
    def from_fourier(cls, coefficients: Mapping[int, object]) -> "BicomplexBoundaryData":
        values = {k: as_bicomplex(c) for k, c in coefficients.items()}
        return cls(
            BoundaryData.from_fourier({k: w.plus for k, w in values.items()}, kind="complex"),
            BoundaryData.from_fourier({k: w.minus for k, w in values.items()}, kind="complex"),
        )

    @classmethod
    def from_complex(cls, data: BoundaryData) -> "BicomplexBoundaryData":
        """Complex-embedded data: both components equal ``data``."""
        return cls(data, data)

    @classmethod
    def trace_of(cls, field) -> "BicomplexBoundaryData":
        """Boundary trace of a ``PolyField``."""
        return cls(BoundaryData.trace_of(field.plus), BoundaryData.trace_of(field.minus))

    def component(self, sign: str) -> BoundaryData:
        if sign == "plus":
            return self.plus
        if sign == "minus":
            return self.minus
        raise ValueError(f"Unknown idempotent component {sign!r}")

    def coefficients(self) -> Dict[int, Bicomplex]:
        plus, minus = self.plus.coefficients(), self.minus.coefficients()
        return {
            k: from_idempotent(IdempotentPair(plus.get(k, 0j), minus.get(k, 0j)))
            for k in sorted(set(plus) | set(minus))
        }

    def evaluate(self, theta) -> IdempotentArray:
        return IdempotentArray(self.plus.evaluate(theta), self.minus.evaluate(theta))

    def __repr__(self) -> str:
        return f"BicomplexBoundaryData(plus={self.plus!r}, minus={self.minus!r})"


def _as_complex_kind(data: BoundaryData) -> BoundaryData:
    if data.kind == "complex":
        return data
    if data.is_sampled:
        return BoundaryData(kind="complex", samples=data.samples.astype(complex))
    return BoundaryData(kind="complex", fourier=data.coefficients())


__all__ = ["BoundaryData", "BicomplexBoundaryData"]
