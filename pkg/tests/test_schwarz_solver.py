"""
Tests for the Schwarz solvers.

Manufactured solutions of the form ``z + mu conj(z)`` (complex) and
``zhat + mu zhat_star`` (bicomplex) are recovered from their boundary data.
"""

import numpy as np
import pytest
from pydantic import ValidationError

from src.algebra.bicomplex import Bicomplex
from src.bvp.problems import VERDICT_FAILED, VERDICT_PASSED, SchwarzProblem
from src.bvp.schwarz_solver import (
    SchwarzSolver,
    solve_schwarz_bicomplex,
    solve_schwarz_complex,
    solve_schwarz_dbar,
)
from src.fields.boundary_data import BoundaryData
from src.fields.component_poly import ComponentPoly
from src.fields.poly_field import PolyField
from src.operators.quadrature import DiskQuadrature
from src.tools.errors import BoundaryDataError, EllipticityError


@pytest.mark.unit
class TestComplexSchwarz:
    """Complex Beltrami Schwarz problems."""

    def setup_method(self):
        self.solver = SchwarzSolver(quadrature=DiskQuadrature(n_r=32, n_theta=128), cross_check_points=2)
        self.z = ComponentPoly.z()
        self.zs = ComponentPoly.zstar()

    def test_cosine_data_without_coefficient(self):
        report = self.solver.solve_complex(0.0, None, BoundaryData.cosine())
        assert report.passed
        assert report.solution.allclose(self.z)
        assert report.constraint_error <= 1e-12
        assert report.series_terms_used == 0

    def test_manufactured_solution_is_recovered(self):
        mu = 0.3
        report = self.solver.solve_complex(mu, None, BoundaryData.cosine(1 + mu), tol=1e-12)
        assert report.verdict == VERDICT_PASSED
        assert report.solution.allclose(self.z + self.zs * mu, tol=1e-10)
        assert report.exact_residual_max <= 1e-10
        assert report.pde_residual_max <= 1e-6
        assert report.boundary_trace_error <= 1e-10

    def test_series_decays_at_the_coefficient_rate(self):
        report = self.solver.solve_complex(0.6, None, BoundaryData.cosine(), tol=1e-8, cap=80)
        assert report.passed
        assert len(report.series_decay) >= 3
        np.testing.assert_allclose(report.series_decay, 0.6, rtol=1e-8)
        assert report.series_norms[-1] < 1e-8

    def test_complex_coefficient(self):
        mu = 0.2 + 0.3j
        w_true = self.z + self.zs * mu
        gamma = BoundaryData.real_trace_of(w_true)
        report = self.solver.solve_complex(mu, None, gamma, tol=1e-12)
        assert report.passed
        assert report.solution.allclose(w_true, tol=1e-9)

    def test_source_term_and_constraint(self):
        mu = 0.25
        f = self.z * 0.5
        report = self.solver.solve_complex(mu, f, BoundaryData.cosine(), a=0.4, tol=1e-12)
        assert report.passed
        assert report.exact_residual_max <= 1e-10
        assert report.constraint_error <= 1e-12
        assert report.quadrature["solution_gap"] <= 1e-6

    def test_series_cap_fails_the_gate(self):
        report = self.solver.solve_complex(0.6, None, BoundaryData.cosine(), tol=1e-12, cap=3)
        assert report.verdict == VERDICT_FAILED
        assert report.diagnostics["converged"] is False
        assert any("series cap" in message for message in report.messages)

    def test_invalid_inputs(self):
        with pytest.raises(EllipticityError):
            self.solver.solve_complex(1.0, None, BoundaryData.cosine())
        with pytest.raises(BoundaryDataError):
            self.solver.solve_complex(0.1, None, BoundaryData.trace_of(self.z))

    def test_module_level_wrapper(self):
        report = solve_schwarz_complex(0.0, None, BoundaryData.cosine(), solver=self.solver)
        assert report.passed


@pytest.mark.unit
class TestDbarSchwarz:
    """The pure d/dz* problem and its bicomplex form."""

    def setup_method(self):
        self.solver = SchwarzSolver(quadrature=DiskQuadrature(n_r=32, n_theta=128), cross_check_points=2)

    def test_dbar_problem(self):
        f = ComponentPoly.z() + ComponentPoly.zstar() * 2j
        report = solve_schwarz_dbar(f, BoundaryData.cosine(), c=0.2, solver=self.solver)
        assert report.passed
        assert report.solution.d_zstar().allclose(f)
        assert report.constraint_error <= 1e-12
        assert report.boundary_trace_error <= 1e-12

    def test_dbar_series_path_agrees(self):
        f = ComponentPoly.constant(0.5)
        direct = self.solver.solve_dbar(f, BoundaryData.cosine())
        series = self.solver.solve_complex(0.0, f, BoundaryData.cosine())
        assert direct.solution.allclose(series.solution)

    def test_bicomplex_dbar_problem(self):
        f = PolyField.constant(Bicomplex(1, 0.5)) + PolyField.zhat()
        report = self.solver.solve_dbar_bicomplex(f, BoundaryData.cosine(), BoundaryData.constant(0.5), 0.1, -0.2)
        assert report.passed
        assert report.exact_residual_max <= 1e-12
        assert report.constraint_error <= 1e-12


@pytest.mark.unit
class TestBicomplexSchwarz:
    """Bicomplex Schwarz problems split into component problems."""

    def setup_method(self):
        self.solver = SchwarzSolver(quadrature=DiskQuadrature(n_r=32, n_theta=128), cross_check_points=0)

    def _problem(self, mu):
        w = PolyField.zhat() + PolyField.zhat_star().scale(mu)
        problem = SchwarzProblem(
            mu=mu,
            gamma1=BoundaryData.real_trace_of(w.plus),
            gamma2=BoundaryData.real_trace_of(w.minus),
            tol=1e-12,
        )
        return problem, w

    def test_manufactured_bicomplex_solution(self):
        problem, w = self._problem(Bicomplex(0.2, 0.1j))
        report = solve_schwarz_bicomplex(problem, solver=self.solver)
        assert report.passed
        assert report.solution.allclose(w, tol=1e-9)
        assert report.exact_residual_max <= 1e-9

    def test_complex_valued_components(self):
        problem, w = self._problem(Bicomplex(0.1 + 0.1j, 0.05))
        report = self.solver.solve_bicomplex(problem)
        assert report.passed
        assert report.solution.allclose(w, tol=1e-9)
        assert set(report.diagnostics["components"]) == {"plus", "minus"}

    def test_report_serialisation(self):
        problem, _ = self._problem(Bicomplex(0.2))
        report = self.solver.solve_bicomplex(problem)
        payload = report.to_json_dict()
        assert "solution" not in payload
        assert len(payload["samples"]) == 24
        assert set(payload["samples"][0]) == {"r", "theta", "sc_re", "sc_im", "vec_re", "vec_im"}

    def test_problem_validation(self):
        with pytest.raises(ValidationError):
            SchwarzProblem(mu=Bicomplex(0.9, 0.9), gamma1=BoundaryData.cosine(), gamma2=BoundaryData.cosine())
        with pytest.raises(ValidationError):
            SchwarzProblem(
                mu=0.1, gamma1=BoundaryData.trace_of(ComponentPoly.z()), gamma2=BoundaryData.cosine()
            )
        with pytest.raises(ValidationError):
            SchwarzProblem(mu=0.1, gamma1=BoundaryData.cosine(), gamma2=BoundaryData.cosine(), tol=0)
