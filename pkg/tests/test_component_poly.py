"""Tests for complex polynomials in z and conj(z)."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.fields.component_poly import ComponentPoly


def _random_poly(rng, degree):
    terms = {}
    for m in range(degree + 1):
        for n in range(degree + 1 - m):
            terms[(m, n)] = complex(rng.normal(), rng.normal())
    return ComponentPoly.from_dict(terms)


@pytest.mark.unit
class TestComponentPolyConstruction:
    """Constructors and inspection."""

    def test_zero_and_constant(self):
        assert ComponentPoly.zero().is_zero()
        assert ComponentPoly.zero().degree == -1
        c = ComponentPoly.constant(2 - 1j)
        assert c.degree == 0
        assert c.coefficient(0, 0) == 2 - 1j

    def test_monomial(self):
        p = ComponentPoly.monomial(2, 3, 0.5)
        assert p.degree == 5
        assert p.to_dict() == {(2, 3): 0.5}
        assert p.coefficient(7, 7) == 0

    def test_negative_exponents_rejected(self):
        with pytest.raises(ValueError):
            ComponentPoly.monomial(-1, 0)
        with pytest.raises(ValueError):
            ComponentPoly.from_dict({(0, -2): 1.0})

    def test_from_dict_accumulates_and_trims(self):
        p = ComponentPoly.from_dict({(1, 0): 1.0, (3, 2): 0.0})
        assert p.shape == (2, 1)
        assert ComponentPoly.from_dict({}).is_zero()

    def test_sup_bound_dominates_values(self):
        rng = np.random.default_rng(1)
        p = _random_poly(rng, 4)
        points = 0.99 * np.exp(2j * np.pi * rng.random(200)) * np.sqrt(rng.random(200))
        assert np.abs(p(points)).max() <= p.sup_bound() + 1e-12

    def test_bad_operand_raises_type_error(self):
        with pytest.raises(TypeError):
            ComponentPoly.z() + "z"

    def test_negative_power_rejected(self):
        with pytest.raises(ValueError):
            ComponentPoly.z() ** -1


@pytest.mark.unit
class TestComponentPolyAlgebra:
    """Arithmetic agrees with pointwise evaluation."""

    def setup_method(self):
        self.rng = np.random.default_rng(7)
        self.p = _random_poly(self.rng, 3)
        self.q = _random_poly(self.rng, 2)
        self.points = 0.8 * np.sqrt(self.rng.random(50)) * np.exp(2j * np.pi * self.rng.random(50))

    def test_sum_and_product(self):
        np.testing.assert_allclose((self.p + self.q)(self.points), self.p(self.points) + self.q(self.points))
        np.testing.assert_allclose((self.p * self.q)(self.points), self.p(self.points) * self.q(self.points))
        np.testing.assert_allclose((self.p - 2)(self.points), self.p(self.points) - 2)
        np.testing.assert_allclose((3 - self.p)(self.points), 3 - self.p(self.points))

    def test_power(self):
        np.testing.assert_allclose((self.q**3)(self.points), self.q(self.points) ** 3)
        assert (self.q**0).allclose(ComponentPoly.constant(1.0))

    def test_conj_is_pointwise_conjugate(self):
        np.testing.assert_allclose(self.p.conj()(self.points), np.conj(self.p(self.points)))

    def test_real_valued_detection(self):
        z, zs = ComponentPoly.z(), ComponentPoly.zstar()
        assert (z * zs).is_real_valued()
        assert (z + zs).is_real_valued()
        assert not z.is_real_valued()

    def test_compose(self):
        z, zs = ComponentPoly.z(), ComponentPoly.zstar()
        shifted = self.p.compose(z + 0.1, zs + 0.1)
        np.testing.assert_allclose(shifted(self.points), self.p(self.points + 0.1))

    def test_circle_fourier(self):
        p = ComponentPoly.from_dict({(2, 0): 1.0, (1, 1): 2.0, (0, 3): 1j})
        coeffs = p.circle_fourier(0.5)
        assert coeffs[2] == pytest.approx(0.25)
        assert coeffs[0] == pytest.approx(0.5)
        assert coeffs[-3] == pytest.approx(0.125j)


@pytest.mark.unit
class TestComponentPolyCalculus:
    """Exact Wirtinger derivatives."""

    def test_monomial_derivatives(self):
        p = ComponentPoly.monomial(2, 1)
        assert p.d_z().to_dict() == {(1, 1): 2}
        assert p.d_zstar().to_dict() == {(2, 0): 1}
        assert ComponentPoly.z().d_zstar().is_zero()
        assert ComponentPoly.constant(5).d_z().is_zero()

    def test_antiderivative_inverts_d_zstar(self):
        rng = np.random.default_rng(3)
        p = _random_poly(rng, 4)
        assert p.antiderivative_zstar().d_zstar().allclose(p)
        assert p.antiderivative_zstar().coefficient(0, 0) == 0

    @given(
        st.integers(min_value=0, max_value=5),
        st.integers(min_value=0, max_value=5),
        st.floats(min_value=-2, max_value=2, allow_nan=False),
    )
    @settings(max_examples=60, deadline=None)
    def test_product_rule(self, m, n, a):
        p = ComponentPoly.monomial(m, n, 1 + 1j)
        q = ComponentPoly.z() * a + ComponentPoly.zstar() ** 2
        assert (p * q).d_z().allclose(p.d_z() * q + p * q.d_z(), tol=1e-10)
        assert (p * q).d_zstar().allclose(p.d_zstar() * q + p * q.d_zstar(), tol=1e-10)
