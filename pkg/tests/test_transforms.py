"""Tests for the conjugate-Beltrami / Vekua transform pair and the residual operators."""

import numpy as np
import pytest
from pydantic import ValidationError

from src.algebra.bicomplex import Bicomplex
from src.bvp.diagnostics import probe_points
from src.fields.component_poly import ComponentPoly
from src.fields.point_field import PointField
from src.fields.poly_field import PolyField
from src.tools.errors import EllipticityError
from src.transforms.residuals import (
    GfoeCoefficients,
    coefficient_sup,
    conj_beltrami_residual,
    gfoe_component_equations,
    gfoe_residual,
    real_coefficient,
    vekua_residual,
)
from src.transforms.vekua_link import (
    alpha_from_mu,
    conjbel_to_vekua,
    hardy_preservation_profile,
    vekua_link_check,
    vekua_to_conjbel,
)


def random_field(rng, degree):
    coeffs = {}
    for m in range(degree + 1):
        for n in range(degree + 1 - m):
            coeffs[(m, n)] = Bicomplex(complex(*rng.normal(size=2)), complex(*rng.normal(size=2)))
    return PolyField.from_coeffs(coeffs)


def linear_mu():
    """Real coefficient ``0.2 + 0.3 x`` with ``sup |mu| = 0.5`` on the disk."""
    z, zs = ComponentPoly.z(), ComponentPoly.zstar()
    return PolyField.from_complex((z + zs) * 0.15 + 0.2)


@pytest.mark.unit
class TestRealCoefficient:
    """Coercion and ellipticity of real coefficients."""

    def test_constants(self):
        mu = real_coefficient(0.4)
        assert mu.max_degree == 0
        assert coefficient_sup(mu) == pytest.approx(0.4)
        assert coefficient_sup(real_coefficient(0.0)) == 0.0

    def test_polynomial_coefficient(self):
        mu = real_coefficient(linear_mu())
        assert 0.45 < coefficient_sup(mu) <= 0.5

    def test_rejections(self):
        with pytest.raises(ValueError):
            real_coefficient(0.3j)
        with pytest.raises(ValueError):
            real_coefficient(Bicomplex(0.1, 0.2))
        with pytest.raises(ValueError):
            real_coefficient(PolyField.zhat())
        with pytest.raises(EllipticityError):
            real_coefficient(1.0)
        with pytest.raises(EllipticityError):
            real_coefficient(PolyField.from_complex((ComponentPoly.z() + ComponentPoly.zstar()) * 0.6))


@pytest.mark.unit
class TestVekuaTransform:
    """The transform pair and the residual link."""

    def setup_method(self):
        self.rng = np.random.default_rng(17)
        self.points = probe_points(30)

    def test_constant_coefficient_round_trip_is_exact(self):
        f = random_field(self.rng, 3)
        w = conjbel_to_vekua(f, 0.4)
        assert isinstance(w, PolyField)
        assert vekua_to_conjbel(w, 0.4).allclose(f, tol=1e-12)

    def test_zero_coefficient_is_identity(self):
        f = random_field(self.rng, 2)
        assert conjbel_to_vekua(f, 0.0).allclose(f)

    def test_polynomial_coefficient_round_trip(self):
        f = random_field(self.rng, 3)
        mu = linear_mu()
        w = conjbel_to_vekua(f, mu)
        assert isinstance(w, PointField)
        back = vekua_to_conjbel(w, mu).evaluate(self.points)
        assert (back - f.evaluate(self.points)).norm().max() <= 1e-12

    def test_holomorphic_solution_links_exactly(self):
        w = PolyField.zhat().power(2) + PolyField.zhat().scale(Bicomplex(0.5, 0.25j))
        f = vekua_to_conjbel(w, 0.4)
        assert conj_beltrami_residual(f, 0.4).max_coeff_norm() <= 1e-12
        result = vekua_link_check(f, 0.4, self.points)
        assert result["path"] == "exact"
        assert result["conj_beltrami_residual"] <= 1e-12
        assert result["vekua_residual"] <= 1e-12
        assert result["alpha_truncation_bound"] == 0.0

    def test_variable_coefficient_link(self):
        f = PolyField.constant(Bicomplex(0.5, 0.2))
        result = vekua_link_check(f, linear_mu(), self.points)
        assert result["path"] == "finite_difference"
        assert result["conj_beltrami_residual"] <= 1e-8
        assert result["vekua_residual"] <= 1e-5

    def test_non_solution_shows_residuals(self):
        f = PolyField.zhat_star()
        result = vekua_link_check(f, 0.4, self.points)
        assert result["conj_beltrami_residual"] > 0.1
        assert result["vekua_residual"] > 0.1

    def test_alpha_series_matches_pointwise_value(self):
        alpha = alpha_from_mu(linear_mu(), terms=6)
        assert not alpha.is_zero
        series = alpha.series.evaluate(self.points)
        exact = alpha.evaluate(self.points)
        assert (series - exact).norm().max() <= alpha.truncation_bound + 1e-12
        assert alpha_from_mu(0.3).is_zero

    def test_hardy_preservation(self):
        profile = hardy_preservation_profile(random_field(self.rng, 2), linear_mu(), p=2.0, radii=(0.5, 0.9))
        assert profile["both_finite"]
        assert len(profile["w"]["means"]) == 2


@pytest.mark.unit
class TestResidualOperators:
    """Vekua and GFOE residuals."""

    def setup_method(self):
        self.rng = np.random.default_rng(4)

    def test_vekua_residual_of_holomorphic_field(self):
        w = PolyField.zhat().power(3)
        assert vekua_residual(w, 0.0).is_zero()
        assert not vekua_residual(w, 0.5).is_zero()
        shift = PolyField.constant(Bicomplex(0.1))
        assert vekua_residual(PolyField.zero(), 0.5, shift).is_zero()

    def test_gfoe_component_equations_match(self):
        w = random_field(self.rng, 3)
        coeffs = GfoeCoefficients(
            mu1=Bicomplex(0.2, 0.1j),
            mu2=Bicomplex(0.1 - 0.05j, 0.05),
            a=random_field(self.rng, 1),
            b=random_field(self.rng, 1),
        )
        f = random_field(self.rng, 2)
        residual = gfoe_residual(w, coeffs, f)
        plus, minus = gfoe_component_equations(w, coeffs, f)
        assert plus.allclose(residual.plus, tol=1e-10)
        assert minus.allclose(residual.minus, tol=1e-10)

    def test_gfoe_reduces_to_beltrami(self):
        mu = Bicomplex(0.3)
        w = PolyField.mu_holomorphic([1.0, 0.5, 0.25], mu)
        assert gfoe_residual(w, GfoeCoefficients(mu1=mu)).max_coeff_norm() <= 1e-12

    def test_gfoe_ellipticity(self):
        with pytest.raises(ValidationError):
            GfoeCoefficients(mu1=0.6, mu2=0.5)
        assert GfoeCoefficients().zeroth_order()[0].is_zero()
