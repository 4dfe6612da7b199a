"""
Tests for kernels, quadrature rules and the boundary and area operators.

The closed forms on polynomials are checked against their defining
properties, and the quadrature paths are checked against the closed forms.
"""

import numpy as np
import pytest

from src.fields.boundary_data import BoundaryData
from src.fields.component_poly import ComponentPoly
from src.fields.poly_field import PolyField
from src.operators.area_operators import (
    pi_operator,
    pi_operator_poly,
    pi_operator_refinement,
    pompeiu_operator,
    schwarz_area_conj_poly,
    schwarz_area_operator,
    schwarz_area_operator_conj,
    schwarz_area_poly,
    t_bicomplex,
)
from src.operators.boundary_integrals import cauchy_integral, contour_integral, schwarz_integral
from src.operators.kernels import conj_poisson_kernel, poisson_kernel, schwarz_kernel
from src.operators.quadrature import DiskQuadrature, boundary_nodes
from src.tools.errors import BoundaryDataError, DomainError, QuadratureConvergenceError

POINTS = np.array([0.0, 0.3 + 0.2j, -0.5j, -0.4 + 0.1j])


def _sample_polys():
    z, zs = ComponentPoly.z(), ComponentPoly.zstar()
    return [
        ComponentPoly.constant(1 + 2j),
        z,
        zs,
        z * zs * (0.5 - 1j),
        z**3 + zs**2 * 2j,
        (z**2) * zs - zs**3,
    ]


@pytest.mark.unit
class TestKernels:
    """Poisson-type kernels."""

    def setup_method(self):
        self.theta, _ = boundary_nodes(256)

    def test_poisson_kernel_has_unit_mean(self):
        assert np.mean(poisson_kernel(0.7, self.theta)) == pytest.approx(1.0)
        assert np.all(poisson_kernel(0.7, self.theta) > 0)

    def test_conjugate_kernel_is_odd(self):
        np.testing.assert_allclose(conj_poisson_kernel(0.4, self.theta), -conj_poisson_kernel(0.4, -self.theta))

    def test_schwarz_kernel_closed_form(self):
        z = 0.3 * np.exp(0.7j)
        expected = (1 + z) / (1 - z)
        assert schwarz_kernel(abs(z), np.angle(z)) == pytest.approx(expected)

    def test_radius_outside_range(self):
        with pytest.raises(DomainError):
            poisson_kernel(1.0, 0.0)
        with pytest.raises(DomainError):
            conj_poisson_kernel(-0.1, 0.0)


@pytest.mark.unit
class TestDiskQuadrature:
    """Polar quadrature rules."""

    def setup_method(self):
        self.quadrature = DiskQuadrature(n_r=32, n_theta=128)

    def test_origin_rule_area(self):
        _, weights = self.quadrature.origin_rule
        assert weights.sum() == pytest.approx(np.pi)

    def test_origin_rule_integrates_polynomials(self):
        nodes, weights = self.quadrature.origin_rule
        value = self.quadrature.integrate(np.abs(nodes) ** 2, weights)
        assert value == pytest.approx(np.pi / 2)

    def test_centred_rule_area_excludes_ball(self):
        eps = 0.01
        _, weights = self.quadrature.centred_rule(0.5 + 0.1j, eps)
        assert weights.sum() == pytest.approx(np.pi - np.pi * eps**2, rel=1e-10)
        nodes, _ = self.quadrature.centred_rule(-0.3j)
        assert np.abs(nodes).max() <= 1 + 1e-12

    def test_centre_must_be_inside(self):
        with pytest.raises(DomainError):
            self.quadrature.centred_rule(1.0)

    def test_refined_and_exclusion(self):
        refined = self.quadrature.refined()
        assert (refined.n_r, refined.n_theta) == (64, 256)
        assert self.quadrature.exclusion_radius == pytest.approx(0.5 / 32)

    def test_invalid_sizes(self):
        with pytest.raises(ValueError):
            DiskQuadrature(n_r=1)
        with pytest.raises(ValueError):
            DiskQuadrature(eps_factor=-1)


@pytest.mark.unit
class TestBoundaryIntegrals:
    """Schwarz and Cauchy integrals."""

    def setup_method(self):
        self.cosine = BoundaryData.cosine()

    def test_schwarz_integral_of_cosine(self):
        result = schwarz_integral(self.cosine, a=0.25)
        assert result.allclose(ComponentPoly.z() + 0.25j)

    def test_schwarz_integral_quadrature_matches(self):
        spectral = schwarz_integral(self.cosine, a=0.1)
        numeric = schwarz_integral(self.cosine, a=0.1, method="quadrature")
        np.testing.assert_allclose(numeric(POINTS[1:]), spectral(POINTS[1:]), atol=1e-10)

    def test_schwarz_integral_real_part_matches_data(self):
        data = BoundaryData.from_fourier({0: 0.5, 2: 0.25 - 0.1j, -2: 0.25 + 0.1j})
        w = schwarz_integral(data, a=0.3)
        theta, zeta = boundary_nodes(64)
        np.testing.assert_allclose(w(zeta).real, data.evaluate(theta), atol=1e-12)
        assert w(0.0).imag == pytest.approx(0.3)

    def test_schwarz_integral_requires_real_data(self):
        with pytest.raises(BoundaryDataError):
            schwarz_integral(BoundaryData.trace_of(ComponentPoly.z()))
        with pytest.raises(ValueError):
            schwarz_integral(self.cosine, method="simpson")

    def test_cauchy_integral_keeps_holomorphic_part(self):
        data = BoundaryData.trace_of(ComponentPoly.z() ** 2 + ComponentPoly.zstar())
        assert cauchy_integral(data).allclose(ComponentPoly.z() ** 2)
        numeric = cauchy_integral(data, method="quadrature")
        np.testing.assert_allclose(numeric(POINTS), POINTS**2, atol=1e-10)

    def test_contour_integral(self):
        _, zeta = boundary_nodes(32)
        assert contour_integral(np.ones(32), 1 / zeta) == pytest.approx(1.0)
        assert abs(contour_integral(np.ones(32), np.ones(32))) < 1e-14


@pytest.mark.unit
class TestAreaOperatorClosedForms:
    """Defining properties of the exact polynomial operators."""

    def setup_method(self):
        self.polys = _sample_polys()
        self.theta, self.zeta = boundary_nodes(64)

    def test_pompeiu_is_right_inverse_of_d_zstar(self):
        for g in self.polys:
            assert pompeiu_operator(g).d_zstar().allclose(g)

    def test_schwarz_area_solves_dbar_problem(self):
        for f in self.polys:
            s = schwarz_area_poly(f)
            assert s.d_zstar().allclose(f)
            assert np.abs(s(self.zeta).real).max() <= 1e-12
            assert abs(s(0.0).imag) <= 1e-12

    def test_conjugated_twin_solves_d_z_problem(self):
        for f in self.polys:
            s = schwarz_area_conj_poly(f)
            assert s.d_z().allclose(f)
            assert np.abs(s(self.zeta).real).max() <= 1e-12

    def test_pi_operator_is_d_z_of_schwarz_area(self):
        for g in self.polys:
            assert pi_operator_poly(g).allclose(schwarz_area_poly(g).d_z())

    def test_pi_operator_on_constants(self):
        assert pi_operator(ComponentPoly.constant(0.3 + 0.1j)).allclose(ComponentPoly.constant(-0.3 + 0.1j))

    def test_t_bicomplex_inverts_delbar(self):
        rng = np.random.default_rng(2)
        plus = ComponentPoly.from_dict({(1, 1): complex(*rng.normal(size=2)), (0, 2): 1.0})
        minus = ComponentPoly.from_dict({(2, 0): 0.5j, (0, 0): 1.0})
        f = PolyField(plus, minus)
        assert t_bicomplex(f).bc_delbar().allclose(f)

    def test_spectral_path_requires_polynomials(self):
        with pytest.raises(TypeError):
            schwarz_area_operator(lambda z: z)
        with pytest.raises(TypeError):
            t_bicomplex(ComponentPoly.z())
        with pytest.raises(ValueError):
            pompeiu_operator(ComponentPoly.z(), method="monte-carlo")


@pytest.mark.integration
class TestAreaOperatorQuadrature:
    """Quadrature paths against the closed forms."""

    def setup_method(self):
        self.quadrature = DiskQuadrature(n_r=48, n_theta=256)
        z, zs = ComponentPoly.z(), ComponentPoly.zstar()
        self.g = z * zs + zs**2 * (1 - 1j) + 0.5

    def test_pompeiu_quadrature(self):
        numeric = pompeiu_operator(self.g, "quadrature", self.quadrature)
        np.testing.assert_allclose(numeric(POINTS), pompeiu_operator(self.g)(POINTS), atol=1e-8)

    def test_schwarz_area_quadrature(self):
        numeric = schwarz_area_operator(self.g, "quadrature", self.quadrature)
        np.testing.assert_allclose(numeric(POINTS), schwarz_area_poly(self.g)(POINTS), atol=1e-8)

    def test_conjugated_schwarz_area_quadrature(self):
        numeric = schwarz_area_operator_conj(self.g, "quadrature", self.quadrature)
        np.testing.assert_allclose(numeric(POINTS), schwarz_area_conj_poly(self.g)(POINTS), atol=1e-8)

    def test_pi_operator_quadrature(self):
        numeric = pi_operator(self.g, "quadrature", self.quadrature, pv_tol=1e-8)
        np.testing.assert_allclose(numeric(POINTS), pi_operator_poly(self.g)(POINTS), atol=1e-8)

    def test_principal_value_refinement(self):
        _, gaps = pi_operator_refinement(self.g, POINTS, self.quadrature)
        assert gaps.max() <= 1e-10
        _, gaps = pi_operator_refinement(ComponentPoly.z() ** 2, [0.2], self.quadrature)
        assert gaps.max() > 1e-7

    def test_unconverged_principal_value_raises(self):
        numeric = pi_operator(ComponentPoly.z() ** 2, "quadrature", self.quadrature, pv_tol=1e-9)
        with pytest.raises(QuadratureConvergenceError):
            numeric(np.array([0.2]))

    def test_t_bicomplex_quadrature(self):
        f = PolyField(ComponentPoly.zstar(), self.g)
        numeric = t_bicomplex(f, "quadrature", self.quadrature).evaluate(POINTS[1:])
        exact = t_bicomplex(f).evaluate(POINTS[1:])
        assert (numeric - exact).norm().max() <= 1e-8
