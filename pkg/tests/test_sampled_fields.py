"""Tests for point fields, polar grids and finite-difference Wirtinger derivatives."""

import numpy as np
import pytest

from src.algebra.bicomplex import Bicomplex, IdempotentArray
from src.fields.component_poly import ComponentPoly
from src.fields.grid_field import GridField, PolarGrid, sample
from src.fields.point_field import BicomplexField, PointField, as_complex_callable
from src.fields.poly_field import PolyField
from src.fields.wirtinger import fd_bicomplex_cartesian, fd_del, fd_delbar, fd_wirtinger
from src.tools.errors import DomainError, StencilError

FD_TOL = 1e-6


def random_field(rng, degree):
    coeffs = {}
    for m in range(degree + 1):
        for n in range(degree + 1 - m):
            coeffs[(m, n)] = Bicomplex(complex(*rng.normal(size=2)), complex(*rng.normal(size=2)))
    return PolyField.from_coeffs(coeffs)


@pytest.mark.unit
class TestPointField:
    """Callable-backed fields."""

    def test_from_complex_embeds(self):
        field = PointField.from_complex(lambda z: z**2, "square")
        value = field.eval(0.5j)
        assert value.isclose(Bicomplex(-0.25))
        assert "square" in repr(field)

    def test_from_components(self):
        field = PointField.from_components(np.conj, lambda z: z)
        assert field.eval(0.3 + 0.4j).isclose(PolyField.zhat().eval(0.3 + 0.4j))

    def test_constant_rule_broadcasts(self):
        field = PointField(lambda z: IdempotentArray(np.asarray(1.0 + 0j), np.asarray(2.0 + 0j)))
        values = field.evaluate(np.zeros(5))
        assert values.plus.shape == (5,)
        np.testing.assert_allclose(values.minus, 2.0)

    def test_component_accessor(self):
        field = PointField.from_components(lambda z: z, lambda z: 2 * z)
        np.testing.assert_allclose(field.component("minus")(np.array([0.5])), [1.0])
        with pytest.raises(ValueError):
            field.component("both")

    def test_protocol_and_callable_normalisation(self):
        assert isinstance(PolyField.zhat(), BicomplexField)
        assert isinstance(PointField.from_complex(np.exp), BicomplexField)
        poly = as_complex_callable(ComponentPoly.z())
        np.testing.assert_allclose(poly(np.array([0.5j])), [0.5j])
        const = as_complex_callable(lambda z: 3.0)
        assert const(np.zeros(4)).shape == (4,)


@pytest.mark.unit
class TestWirtingerDifferences:
    """Finite differences against exact derivatives."""

    def setup_method(self):
        self.rng = np.random.default_rng(21)
        self.points = 0.8 * np.sqrt(self.rng.random(40)) * np.exp(2j * np.pi * self.rng.random(40))

    def test_complex_wirtinger_pair(self):
        p = ComponentPoly.from_dict({(2, 1): 1.0, (0, 3): 0.5j, (1, 0): -1.0})
        dz, dzs = fd_wirtinger(p, self.points)
        np.testing.assert_allclose(dz, p.d_z()(self.points), atol=FD_TOL)
        np.testing.assert_allclose(dzs, p.d_zstar()(self.points), atol=FD_TOL)

    def test_bicomplex_derivatives_match_exact(self):
        field = random_field(self.rng, 4)
        delbar = fd_delbar(field, self.points)
        dell = fd_del(field, self.points)
        exact_delbar = field.bc_delbar().evaluate(self.points)
        exact_del = field.bc_del().evaluate(self.points)
        assert (delbar - exact_delbar).norm().max() <= 1e-5
        assert (dell - exact_del).norm().max() <= 1e-5

    def test_cartesian_definition_agrees_with_idempotent_form(self):
        field = random_field(self.rng, 3)
        dell, delbar = fd_bicomplex_cartesian(field, self.points)
        assert (delbar - fd_delbar(field, self.points)).norm().max() <= 1e-8
        assert (dell - fd_del(field, self.points)).norm().max() <= 1e-8

    def test_coordinates_differentiate_to_constants(self):
        dell, delbar = fd_bicomplex_cartesian(PolyField.zhat(), self.points)
        assert delbar.norm().max() <= FD_TOL
        assert np.abs(dell.sc - 1).max() <= FD_TOL

    def test_stencil_outside_disk_rejected(self):
        with pytest.raises(StencilError):
            fd_wirtinger(ComponentPoly.z(), np.array([0.99995]))
        with pytest.raises(DomainError):
            fd_delbar(PolyField.zhat(), np.array([1.0 + 0j]))

    def test_step_must_be_positive(self):
        with pytest.raises(ValueError):
            fd_wirtinger(ComponentPoly.z(), np.array([0.1]), h=0.0)


@pytest.mark.unit
class TestPolarGrid:
    """Polar grids and sampled fields."""

    def setup_method(self):
        self.grid = PolarGrid(n_r=8, n_theta=16)

    def test_grid_geometry(self):
        assert self.grid.radii[0] == pytest.approx(1 / 16)
        assert self.grid.radii[-1] < 1
        assert self.grid.points().shape == (8, 16)

    def test_sample_polynomial_field(self):
        sampled = sample(PolyField.zhat(), self.grid)
        assert sampled.shape == (8, 16)
        np.testing.assert_allclose(sampled.norms(), np.abs(sampled.points()))

    def test_difference_between_samples(self):
        a = sample(PolyField.constant(1), self.grid)
        b = sample(PolyField.constant(Bicomplex(1, 0.5)), self.grid)
        assert a.max_abs_difference(b) == pytest.approx(0.5)

    def test_invalid_grids(self):
        values = IdempotentArray(np.zeros((2, 4), dtype=complex), np.zeros((2, 4), dtype=complex))
        angles = np.linspace(0, 2 * np.pi, 4, endpoint=False)
        with pytest.raises(DomainError):
            GridField(np.array([0.5, 1.0]), angles, values)
        with pytest.raises(ValueError):
            GridField(np.array([0.5, 0.4]), angles, values)
        with pytest.raises(ValueError):
            GridField(np.array([0.5]), angles, values)
        with pytest.raises(ValueError):
            PolarGrid(n_r=0)
