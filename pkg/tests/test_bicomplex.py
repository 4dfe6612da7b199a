"""
Tests for bicomplex arithmetic and the idempotent decomposition.

Covers the scalar ``Bicomplex`` type, the conjugations, the norm and the
vectorised ``IdempotentArray`` used by sampled fields.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.algebra.bicomplex import (
    I,
    J,
    ONE,
    P_MINUS,
    P_PLUS,
    ZERO,
    Bicomplex,
    IdempotentArray,
    IdempotentPair,
    as_bicomplex,
    bc_conj,
    bc_norm,
    bicomplexify,
    complex_conj,
    from_idempotent,
    idempotent_conj,
    is_complex_embedded,
    mul,
    mul_cartesian,
    to_idempotent,
)

finite = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)
complexes = st.builds(complex, finite, finite)
bicomplexes = st.builds(Bicomplex, complexes, complexes)
wide = st.floats(min_value=-1e150, max_value=1e150, allow_nan=False, allow_infinity=False)
wide_bicomplexes = st.builds(Bicomplex, st.builds(complex, wide, wide), st.builds(complex, wide, wide))


@pytest.mark.unit
class TestBicomplexBasics:
    """Construction, coercion and the distinguished constants."""

    def test_j_squares_to_minus_one(self):
        assert (J * J).isclose(-ONE)

    def test_i_and_j_commute(self):
        assert (I * J).isclose(J * I)

    def test_idempotents(self):
        assert (P_PLUS * P_PLUS).isclose(P_PLUS)
        assert (P_MINUS * P_MINUS).isclose(P_MINUS)
        assert (P_PLUS * P_MINUS).isclose(ZERO)
        assert (P_PLUS + P_MINUS).isclose(ONE)

    def test_idempotent_components_of_parts(self):
        w = Bicomplex(1 + 2j, 3 - 1j)
        assert w.plus == pytest.approx((1 + 2j) - 1j * (3 - 1j))
        assert w.minus == pytest.approx((1 + 2j) + 1j * (3 - 1j))

    def test_numbers_embed_as_scalars(self):
        w = as_bicomplex(2.5)
        assert w.sc == 2.5 and w.vec == 0
        assert as_bicomplex(np.float64(1.0)).isclose(ONE)
        assert as_bicomplex(IdempotentPair(1, 0)).isclose(P_PLUS)

    def test_unsupported_type_raises(self):
        with pytest.raises(TypeError):
            as_bicomplex("1+j")

    def test_instances_are_hashable(self):
        assert len({Bicomplex(1, 2), Bicomplex(1, 2)}) == 1

    def test_bicomplexify_components(self):
        w = bicomplexify(0.3 + 0.4j)
        assert w.plus == pytest.approx(0.3 - 0.4j)
        assert w.minus == pytest.approx(0.3 + 0.4j)
        assert not is_complex_embedded(w)
        assert is_complex_embedded(as_bicomplex(0.3 + 0.4j))


@pytest.mark.unit
class TestBicomplexLaws:
    """Algebraic identities checked on random values."""

    @given(bicomplexes, bicomplexes)
    @settings(max_examples=200, deadline=None)
    def test_idempotent_product_matches_cartesian(self, a, b):
        scale = 1 + bc_norm(a) * bc_norm(b)
        assert mul(a, b).isclose(mul_cartesian(a, b), tol=1e-12 * scale)

    @given(wide_bicomplexes)
    @settings(max_examples=300, deadline=None)
    def test_idempotent_round_trip_is_exact(self, w):
        back = from_idempotent(to_idempotent(w))
        assert back.sc == w.sc
        assert back.vec == w.vec

    def test_round_trip_keeps_tiny_scalar_part(self):
        w = Bicomplex(1e-20, 1j)
        assert from_idempotent(to_idempotent(w)) == w
        assert from_idempotent(to_idempotent(w)).sc == 1e-20

    def test_pairs_compare_by_components(self):
        w = Bicomplex(1 + 2j, 3 - 1j)
        assert to_idempotent(w) == IdempotentPair(w.plus, w.minus)

    @given(bicomplexes, bicomplexes, bicomplexes)
    @settings(max_examples=100, deadline=None)
    def test_distributive(self, a, b, c):
        lhs = a * (b + c)
        rhs = a * b + a * c
        scale = 1 + bc_norm(a) * (bc_norm(b) + bc_norm(c))
        assert lhs.isclose(rhs, tol=1e-12 * scale)

    @given(bicomplexes)
    @settings(max_examples=200, deadline=None)
    def test_conjugations_are_involutions(self, w):
        assert bc_conj(bc_conj(w)) == w
        assert complex_conj(complex_conj(w)) == w
        assert idempotent_conj(idempotent_conj(w)) == w

    @given(bicomplexes)
    @settings(max_examples=200, deadline=None)
    def test_bc_conj_swaps_components(self, w):
        v = bc_conj(w)
        assert v.plus == pytest.approx(w.minus)
        assert v.minus == pytest.approx(w.plus)

    @given(bicomplexes)
    @settings(max_examples=200, deadline=None)
    def test_idempotent_conj_conjugates_components(self, w):
        v = idempotent_conj(w)
        assert v.plus == pytest.approx(np.conj(w.plus))
        assert v.minus == pytest.approx(np.conj(w.minus))

    @given(bicomplexes)
    @settings(max_examples=200, deadline=None)
    def test_norm_formula_and_conjugation_invariance(self, w):
        expected = math.sqrt((abs(w.plus) ** 2 + abs(w.minus) ** 2) / 2)
        assert bc_norm(w) == pytest.approx(expected)
        assert bc_norm(bc_conj(w)) == pytest.approx(expected)
        assert bc_norm(idempotent_conj(w)) == pytest.approx(expected)

    @given(bicomplexes, bicomplexes)
    @settings(max_examples=200, deadline=None)
    def test_norm_is_submultiplicative_up_to_sqrt2(self, a, b):
        assert bc_norm(a * b) <= math.sqrt(2) * bc_norm(a) * bc_norm(b) + 1e-9

    @given(bicomplexes)
    @settings(max_examples=300, deadline=None)
    def test_norm_lies_between_component_bounds(self, w):
        plus, minus = abs(w.plus), abs(w.minus)
        slack = 1e-12 * (1 + plus + minus)
        assert max(plus, minus) / math.sqrt(2) <= bc_norm(w) + slack
        assert bc_norm(w) <= (plus + minus) / math.sqrt(2) + slack

    def test_lower_norm_bound_is_attained(self):
        assert bc_norm(P_PLUS) == pytest.approx(max(abs(P_PLUS.plus), abs(P_PLUS.minus)) / math.sqrt(2))

    @given(complexes)
    @settings(max_examples=100, deadline=None)
    def test_norm_of_embedded_complex_is_modulus(self, z):
        assert bc_norm(as_bicomplex(z)) == pytest.approx(abs(z))


@pytest.mark.unit
class TestIdempotentArray:
    """Vectorised components."""

    def setup_method(self):
        self.sc = np.array([1 + 1j, 0.5, -2j])
        self.vec = np.array([0.25, 1j, 3 - 1j])
        self.array = IdempotentArray.from_parts(self.sc, self.vec)

    def test_parts_round_trip(self):
        np.testing.assert_allclose(self.array.sc, self.sc)
        np.testing.assert_allclose(self.array.vec, self.vec)

    def test_value_at_matches_scalar_type(self):
        for k in range(3):
            assert self.array.value_at(k).isclose(Bicomplex(self.sc[k], self.vec[k]))

    def test_norm_matches_scalar_norm(self):
        expected = [bc_norm(Bicomplex(s, v)) for s, v in zip(self.sc, self.vec)]
        np.testing.assert_allclose(self.array.norm(), expected)

    def test_scale_and_multiply(self):
        w = Bicomplex(2, 1j)
        scaled = self.array.scale(w)
        product = self.array.multiply(IdempotentArray.constant(w, 3))
        np.testing.assert_allclose(scaled.plus, product.plus)
        np.testing.assert_allclose(scaled.minus, product.minus)
        assert scaled.value_at(1).isclose(w * Bicomplex(self.sc[1], self.vec[1]))

    def test_conjugations(self):
        swapped = self.array.bc_conj()
        np.testing.assert_allclose(swapped.plus, self.array.minus)
        conj = self.array.idempotent_conj()
        np.testing.assert_allclose(conj.minus, np.conj(self.array.minus))

    def test_addition_and_subtraction(self):
        zero = self.array - self.array
        assert np.all(zero.norm() == 0)
        doubled = self.array + self.array
        np.testing.assert_allclose(doubled.sc, 2 * self.sc)
