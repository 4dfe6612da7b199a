"""
Schwarz problems for the complex and bicomplex Beltrami equations.

Complex problem with constant ``|mu| < 1``::

    dw/dz* = mu dw/dz + f  in the disk,   Re w = gamma on the circle,   Im w(0) = a.

The solution is ``w = phi + S(rho)`` where ``phi`` is the Schwarz integral of
``gamma`` and ``rho`` solves ``rho = f + mu phi' + mu T(rho)``.  ``T`` is only
real-linear, so ``rho`` is accumulated as the Neumann iterates
``rho_0 = f + mu phi'``, ``rho_k = mu T(rho_{k-1})`` until a term falls below
the tolerance.  Every operator runs on its exact polynomial path; the
quadrature paths re-evaluate the solution at a few probes as a cross-check.

The bicomplex problem splits into a minus problem solved directly and a plus
problem solved for ``conj(w+)`` with ``conj(mu+)``, ``conj(f+)`` and the
constraint ``-a1``.
"""

from __future__ import annotations

import logging
from typing import List, Optional, Tuple

import numpy as np

from ..algebra.bicomplex import Bicomplex
from ..fields.boundary_data import BoundaryData
from ..fields.component_poly import ComponentPoly
from ..fields.poly_field import PolyField
from ..fields.wirtinger import DEFAULT_STEP
from ..operators.area_operators import (
    pi_operator_poly,
    pi_operator_refinement,
    schwarz_area_conj_poly,
    schwarz_area_operator,
    schwarz_area_poly,
)
from ..operators.boundary_integrals import schwarz_integral
from ..operators.quadrature import DiskQuadrature
from ..tools.errors import BoundaryDataError, EllipticityError
from . import diagnostics
from .problems import VERDICT_FAILED, VERDICT_PASSED, SchwarzProblem, SolveReport

logger = logging.getLogger(__name__)


class SchwarzSolver:
    """
    Verification-gated Schwarz solver.

    Args:
        quadrature: Rule used by the quadrature cross-check.
        probe_count: Number of interior probes for residual checks.
        fd_step: Finite-difference step of the residual oracle.
        boundary_radius: Radius of the near-boundary circle for ``boundary_error``.
        residual_floor: Lowest residual bound the finite-difference oracle can certify.
        boundary_tol: Bound on the boundary trace error for a passing verdict.
        cross_check_points: Probes re-evaluated with the quadrature paths (0 disables).
    """

    def __init__(
        self,
        quadrature: Optional[DiskQuadrature] = None,
        probe_count: int = 50,
        fd_step: float = DEFAULT_STEP,
        boundary_radius: float = diagnostics.BOUNDARY_RADIUS,
        residual_floor: float = 1e-6,
        boundary_tol: float = 1e-3,
        cross_check_points: int = 4,
    ) -> None:
        self.quadrature = quadrature or DiskQuadrature()
        self.probe_count = probe_count
        self.fd_step = fd_step
        self.boundary_radius = boundary_radius
        self.residual_floor = residual_floor
        self.boundary_tol = boundary_tol
        self.cross_check_points = cross_check_points
        self.logger = logging.getLogger(__name__)

    # ------------------------------------------------------------------
    # Series
    # ------------------------------------------------------------------
    def neumann_series(
        self, mu: complex, source: ComponentPoly, tol: float, cap: int
    ) -> Tuple[ComponentPoly, List[ComponentPoly], List[float], bool]:
        """
        Sum ``rho_k = mu T(rho_{k-1})`` starting from ``source``.

        Returns:
            ``(total, terms, norms, converged)``; ``norms[k]`` bounds the sup
            of ``rho_k`` and the last norm is that of the first omitted term.
        """
        total = ComponentPoly.zero()
        terms: List[ComponentPoly] = []
        norms: List[float] = []
        rho = source
        for k in range(cap + 1):
            norm = rho.sup_bound()
            norms.append(norm)
            if norm < tol:
                self.logger.debug("Series converged after %d terms (next term %.3e)", k, norm)
                return total, terms, norms, True
            if k == cap:
                break
            total = total + rho
            terms.append(rho)
            rho = pi_operator_poly(rho) * mu
        self.logger.warning("Series cap %d reached with term norm %.3e above tolerance %.3e", cap, norms[-1], tol)
        return total, terms, norms, False

    def _decay(self, terms: List[ComponentPoly], probes: np.ndarray) -> List[float]:
        sizes = [float(np.abs(schwarz_area_poly(rho).evaluate(probes)).max()) for rho in terms]
        return [b / a for a, b in zip(sizes, sizes[1:]) if a > 0]

    # ------------------------------------------------------------------
    # Complex problems
    # ------------------------------------------------------------------
    def solve_complex(
        self,
        mu: complex,
        f: Optional[ComponentPoly],
        gamma: BoundaryData,
        a: float = 0.0,
        tol: float = 1e-10,
        cap: int = 40,
    ) -> SolveReport:
        """
        Solve the complex Beltrami Schwarz problem.

        Raises:
            EllipticityError: If ``|mu| >= 1``.
            BoundaryDataError: If ``gamma`` is not real.
        """
        mu = complex(mu)
        if abs(mu) >= 1:
            raise EllipticityError(f"|mu| = {abs(mu):.6g} must be below 1")
        if gamma.kind != "real":
            raise BoundaryDataError("Schwarz boundary data must be real-valued")
        f = f if f is not None else ComponentPoly.zero()

        phi = schwarz_integral(gamma, a)
        source = f + phi.d_z() * mu
        total, terms, norms, converged = self.neumann_series(mu, source, tol, cap)
        w = phi + schwarz_area_poly(total)

        probes = diagnostics.probe_points(self.probe_count)
        report = SolveReport(
            solution=w,
            pde_residual_max=diagnostics.complex_beltrami_residual(w, mu, f, probes, self.fd_step),
            exact_residual_max=(w.d_zstar() - w.d_z() * mu - f).sup_bound(),
            boundary_error=diagnostics.real_boundary_error(w, gamma, self.boundary_radius),
            boundary_trace_error=diagnostics.real_trace_error(w, gamma),
            constraint_error=abs(complex(w.evaluate(0j)).imag - a),
            series_terms_used=len(terms),
            series_norms=norms,
            series_decay=self._decay(terms, probes),
        )
        if self.cross_check_points:
            report.quadrature = self._cross_check(phi, total, w, gamma, a, source, probes)
        self._gate(report, converged, tol)
        return report

    def solve_dbar(self, f: Optional[ComponentPoly], g: BoundaryData, c: float = 0.0) -> SolveReport:
        """Solve ``dw/dz* = f``, ``Re w = g``, ``Im w(0) = c`` with the area operator ``S``."""
        if g.kind != "real":
            raise BoundaryDataError("Schwarz boundary data must be real-valued")
        f = f if f is not None else ComponentPoly.zero()
        phi = schwarz_integral(g, c)
        w = phi + schwarz_area_poly(f)
        probes = diagnostics.probe_points(self.probe_count)
        report = SolveReport(
            solution=w,
            pde_residual_max=diagnostics.complex_beltrami_residual(w, 0j, f, probes, self.fd_step),
            exact_residual_max=(w.d_zstar() - f).sup_bound(),
            boundary_error=diagnostics.real_boundary_error(w, g, self.boundary_radius),
            boundary_trace_error=diagnostics.real_trace_error(w, g),
            constraint_error=abs(complex(w.evaluate(0j)).imag - c),
        )
        if self.cross_check_points:
            report.quadrature = self._cross_check(phi, f, w, g, c, None, probes)
        self._gate(report, True, 0.0)
        return report

    # ------------------------------------------------------------------
    # Bicomplex problems
    # ------------------------------------------------------------------
    def solve_bicomplex(self, problem: SchwarzProblem) -> SolveReport:
        """Solve the bicomplex Schwarz problem through its two complex component problems."""
        mu, f = problem.mu, problem.source()
        plus_report = self.solve_complex(
            np.conj(mu.plus), f.plus.conj(), problem.gamma1, -problem.a1, problem.tol, problem.series_cap
        )
        minus_report = self.solve_complex(mu.minus, f.minus, problem.gamma2, problem.a2, problem.tol, problem.series_cap)
        w = PolyField.from_components(plus_report.solution.conj(), minus_report.solution)
        report = self._bicomplex_report(w, mu, f, plus_report, minus_report)
        converged = plus_report.diagnostics.get("converged", False) and minus_report.diagnostics.get("converged", False)
        self._gate(report, converged, problem.tol)
        return report

    def solve_dbar_bicomplex(
        self,
        f: Optional[PolyField],
        gamma1: BoundaryData,
        gamma2: BoundaryData,
        a1: float = 0.0,
        a2: float = 0.0,
    ) -> SolveReport:
        """Solve ``delbar w = f`` with ``Re w± = gamma_{1,2}``, ``Im w±(0) = a_{1,2}`` via ``T_B``."""
        f = f if f is not None else PolyField.zero()
        phi_plus = schwarz_integral(gamma1, -a1).conj()
        phi_minus = schwarz_integral(gamma2, a2)
        w = PolyField.from_components(phi_plus + schwarz_area_conj_poly(f.plus), phi_minus + schwarz_area_poly(f.minus))
        probes = diagnostics.probe_points(self.probe_count)
        report = SolveReport(
            solution=w,
            pde_residual_max=diagnostics.bicomplex_beltrami_residual(w, Bicomplex(0, 0), f, probes, self.fd_step),
            exact_residual_max=(w.bc_delbar() - f).sup_bound(),
            boundary_error=diagnostics.combine_components(
                diagnostics.real_boundary_error(w.plus, gamma1, self.boundary_radius),
                diagnostics.real_boundary_error(w.minus, gamma2, self.boundary_radius),
            ),
            boundary_trace_error=diagnostics.combine_components(
                diagnostics.real_trace_error(w.plus, gamma1), diagnostics.real_trace_error(w.minus, gamma2)
            ),
            constraint_error=max(
                abs(complex(w.plus.evaluate(0j)).imag - a1), abs(complex(w.minus.evaluate(0j)).imag - a2)
            ),
        )
        self._gate(report, True, 0.0)
        return report

    def _bicomplex_report(
        self, w: PolyField, mu: Bicomplex, f: PolyField, plus: SolveReport, minus: SolveReport
    ) -> SolveReport:
        probes = diagnostics.probe_points(self.probe_count)
        exact = w.bc_delbar() - w.bc_del().scale(mu) - f
        return SolveReport(
            solution=w,
            pde_residual_max=diagnostics.bicomplex_beltrami_residual(w, mu, f, probes, self.fd_step),
            exact_residual_max=exact.sup_bound(),
            boundary_error=diagnostics.combine_components(plus.boundary_error, minus.boundary_error),
            boundary_trace_error=diagnostics.combine_components(plus.boundary_trace_error, minus.boundary_trace_error),
            constraint_error=max(plus.constraint_error, minus.constraint_error),
            series_terms_used=max(plus.series_terms_used, minus.series_terms_used),
            series_norms=[max(a, b) for a, b in _zip_longest(plus.series_norms, minus.series_norms)],
            series_decay=[max(a, b) for a, b in _zip_longest(plus.series_decay, minus.series_decay)],
            quadrature={
                key: max(plus.quadrature.get(key, 0.0), minus.quadrature.get(key, 0.0))
                for key in set(plus.quadrature) | set(minus.quadrature)
            },
            diagnostics={"components": {"plus": plus.summary(), "minus": minus.summary()}},
        )

    # ------------------------------------------------------------------
    # Verification
    # ------------------------------------------------------------------
    def _cross_check(self, phi, rho, w, gamma, a, source, probes) -> dict:
        points = probes[: self.cross_check_points]
        phi_q = schwarz_integral(gamma, a, method="quadrature").evaluate(points)
        area_q = schwarz_area_operator(rho, method="quadrature", quadrature=self.quadrature).evaluate(points)
        spectral = w.evaluate(points)
        checks = {
            "schwarz_integral_gap": float(np.abs(phi_q - phi.evaluate(points)).max()),
            "solution_gap": float(np.abs(phi_q + area_q - spectral).max()),
            "n_r": float(self.quadrature.n_r),
            "n_theta": float(self.quadrature.n_theta),
        }
        if source is not None and not source.is_zero():
            _, gaps = pi_operator_refinement(source, points[:2], self.quadrature)
            checks["pv_refinement_gap"] = float(gaps.max())
        return checks

    def _gate(self, report: SolveReport, converged: bool, tol: float) -> None:
        residual_bound = max(10 * tol, self.residual_floor)
        report.diagnostics["converged"] = converged
        report.diagnostics["residual_bound"] = residual_bound
        failures = []
        if not converged:
            failures.append("series cap reached before the tolerance was met")
        if not report.pde_residual_max <= residual_bound:
            failures.append(f"PDE residual {report.pde_residual_max:.3e} exceeds {residual_bound:.3e}")
        if report.boundary_trace_error is not None and not report.boundary_trace_error <= self.boundary_tol:
            failures.append(f"boundary trace error {report.boundary_trace_error:.3e} exceeds {self.boundary_tol:.3e}")
        report.messages.extend(failures)
        report.verdict = VERDICT_FAILED if failures else VERDICT_PASSED
        if failures:
            self.logger.warning("Schwarz solve rejected: %s", "; ".join(failures))
        else:
            self.logger.info(
                "Schwarz solve accepted: residual %.3e, %d series terms", report.pde_residual_max, report.series_terms_used
            )


def _zip_longest(a: List[float], b: List[float]):
    n = max(len(a), len(b))
    a = list(a) + [0.0] * (n - len(a))
    b = list(b) + [0.0] * (n - len(b))
    return zip(a, b)


_default_solver = SchwarzSolver()


def solve_schwarz_complex(mu, f, gamma, a=0.0, tol=1e-10, cap=40, solver: Optional[SchwarzSolver] = None) -> SolveReport:
    return (solver or _default_solver).solve_complex(mu, f, gamma, a, tol, cap)


def solve_schwarz_dbar(f, g, c=0.0, solver: Optional[SchwarzSolver] = None) -> SolveReport:
    return (solver or _default_solver).solve_dbar(f, g, c)


def solve_schwarz_bicomplex(problem: SchwarzProblem, solver: Optional[SchwarzSolver] = None) -> SolveReport:
    return (solver or _default_solver).solve_bicomplex(problem)


def solve_schwarz_dbar_bicomplex(f, gamma1, gamma2, a1=0.0, a2=0.0, solver: Optional[SchwarzSolver] = None) -> SolveReport:
    return (solver or _default_solver).solve_dbar_bicomplex(f, gamma1, gamma2, a1, a2)


__all__ = [
    "SchwarzSolver",
    "solve_schwarz_complex",
    "solve_schwarz_dbar",
    "solve_schwarz_bicomplex",
    "solve_schwarz_dbar_bicomplex",
]
