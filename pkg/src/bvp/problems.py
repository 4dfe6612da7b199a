"""Problem records and solve reports for the boundary value solvers."""

from __future__ import annotations

from typing import Any, Dict, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..algebra.bicomplex import Bicomplex, IdempotentArray, as_bicomplex, bc_norm
from ..fields.boundary_data import BicomplexBoundaryData, BoundaryData
from ..fields.poly_field import PolyField
from ..tools.errors import BoundaryDataError, EllipticityError

VERDICT_PASSED = "passed"
VERDICT_FAILED = "failed"
VERDICT_REFUSED = "refused"


def _admissible_mu(value: Any) -> Bicomplex:
    mu = as_bicomplex(value)
    if bc_norm(mu) >= 1:
        raise EllipticityError(f"||mu|| = {bc_norm(mu):.6g} must be below 1")
    if abs(mu.plus) >= 1 or abs(mu.minus) >= 1:
        raise EllipticityError("Each idempotent component of mu must have modulus below 1")
    return mu


class SchwarzProblem(BaseModel):
    """Bicomplex Schwarz problem: ``delbar w = mu del w + f``, ``Re w± = gamma_{1,2}``, ``Im w±(0) = a_{1,2}``."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    mu: Bicomplex
    f: Optional[PolyField] = None
    gamma1: BoundaryData
    gamma2: BoundaryData
    a1: float = 0.0
    a2: float = 0.0
    tol: float = Field(default=1e-10, gt=0)
    series_cap: int = Field(default=40, ge=1)

    @field_validator("mu", mode="before")
    @classmethod
    def _check_mu(cls, value: Any) -> Bicomplex:
        return _admissible_mu(value)

    @field_validator("gamma1", "gamma2")
    @classmethod
    def _check_real(cls, value: BoundaryData) -> BoundaryData:
        if value.kind != "real":
            raise BoundaryDataError("Schwarz boundary data must be real-valued")
        return value

    def source(self) -> PolyField:
        return self.f if self.f is not None else PolyField.zero()


class DirichletProblem(BaseModel):
    """Bicomplex Dirichlet problem: ``delbar w = mu del w + f``, ``w = gamma`` on the circle."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    mu: Bicomplex
    f: Optional[PolyField] = None
    gamma: BicomplexBoundaryData
    kernel_constant: Optional[Bicomplex] = None
    tol: float = Field(default=1e-8, gt=0)
    series_cap: int = Field(default=40, ge=1)

    @field_validator("mu", mode="before")
    @classmethod
    def _check_mu(cls, value: Any) -> Bicomplex:
        return _admissible_mu(value)

    @field_validator("kernel_constant", mode="before")
    @classmethod
    def _coerce_constant(cls, value: Any) -> Optional[Bicomplex]:
        return None if value is None else as_bicomplex(value)

    def source(self) -> PolyField:
        return self.f if self.f is not None else PolyField.zero()

    def kernel_constants(self) -> Bicomplex:
        """Per-component constant of the shifted kernel; defaults to ``-mu``."""
        return self.kernel_constant if self.kernel_constant is not None else -self.mu


class SolveReport(BaseModel):
    """Solution field plus the residual, boundary and series diagnostics that gate it."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    solution: Optional[Any] = None
    verdict: str = VERDICT_FAILED
    pde_residual_max: float = float("inf")
    exact_residual_max: Optional[float] = None
    boundary_error: float = float("inf")
    boundary_trace_error: Optional[float] = None
    constraint_error: float = float("inf")
    series_terms_used: int = 0
    series_norms: List[float] = Field(default_factory=list)
    series_decay: List[float] = Field(default_factory=list)
    quadrature: Dict[str, float] = Field(default_factory=dict)
    diagnostics: Dict[str, Any] = Field(default_factory=dict)
    messages: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict == VERDICT_PASSED

    def summary(self) -> Dict[str, Any]:
        """JSON-ready diagnostics without the solution field."""
        return self.model_dump(exclude={"solution"})

    def samples(self, radii: Sequence[float] = (0.0, 0.5, 0.9), n_angles: int = 8) -> List[Dict[str, float]]:
        """Solution values on a few circles as ``{r, theta, sc_re, sc_im, vec_re, vec_im}`` rows."""
        if self.solution is None:
            return []
        rows: List[Dict[str, float]] = []
        theta = 2 * np.pi * np.arange(n_angles) / n_angles
        for r in radii:
            points = r * np.exp(1j * theta)
            values = self.solution.evaluate(points)
            if isinstance(values, IdempotentArray):
                sc, vec = values.sc, values.vec
            else:
                sc, vec = np.asarray(values), np.zeros(n_angles, dtype=complex)
            for t, s, v in zip(theta, sc, vec):
                rows.append(
                    {
                        "r": float(r),
                        "theta": float(t),
                        "sc_re": float(s.real),
                        "sc_im": float(s.imag),
                        "vec_re": float(v.real),
                        "vec_im": float(v.imag),
                    }
                )
        return rows

    def to_json_dict(self) -> Dict[str, Any]:
        payload = self.summary()
        payload["samples"] = self.samples()
        return payload


class DirichletCheckReport(BaseModel):
    """Outcome of the Dirichlet compatibility check at a probe set."""

    probe_gaps: List[float] = Field(default_factory=list)
    identity_gap: float = 0.0
    compatibility_gap: float = 0.0
    component_gaps: Dict[str, float] = Field(default_factory=dict)
    series_terms_used: int = 0
    tol: float = 1e-6
    solvable: bool = False

    def summary(self) -> Dict[str, Any]:
        return self.model_dump()


__all__ = [
    "SchwarzProblem",
    "DirichletProblem",
    "SolveReport",
    "DirichletCheckReport",
    "VERDICT_PASSED",
    "VERDICT_FAILED",
    "VERDICT_REFUSED",
]
