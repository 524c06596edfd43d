from __future__ import annotations

import numpy as np
import pytest

from vsmsim.lti import Polynomial, poly_add, poly_multiply


def test_multiply_by_identity():
    assert poly_multiply(Polynomial((1.0,)), Polynomial((3.0, 2.0))).coefficients == (3.0, 2.0)


def test_multiply_squares_first_order_lag():
    lag = Polynomial((1.0, 0.3))
    assert poly_multiply(lag, lag).coefficients == pytest.approx((1.0, 0.6, 0.09), rel=1e-15)


def test_multiply_by_zero_is_zero_polynomial():
    product = poly_multiply(Polynomial((0.0,)), Polynomial((5.0, 1.0)))
    assert product.coefficients == (0.0,)
    assert product.is_zero


def test_add_identity_and_cancellation():
    p = Polynomial((1.0, 2.0))
    assert poly_add(p, Polynomial((0.0,))).coefficients == (1.0, 2.0)
    assert poly_add(p, Polynomial((-1.0, -2.0))).coefficients == (0.0,)


def test_add_secondary_plus_proportional_gain():
    # ki_sg + kp_sg·s
    assert poly_add(Polynomial((5.0,)), Polynomial((0.0, 15.0))).coefficients == (5.0, 15.0)


def test_canonical_form_trims_leading_zeros():
    p = Polynomial((1.0, 2.0, 0.0, 0.0))
    assert p.coefficients == (1.0, 2.0)
    assert p.degree == 1
    assert Polynomial(()).coefficients == (0.0,)


def test_origin_multiplicity():
    assert Polynomial((0.0, 0.0, 3.0, 1.0)).origin_multiplicity() == 2
    assert Polynomial((1e-20, 1.0)).origin_multiplicity(1e-12) == 1
    assert Polynomial((2.0,)).origin_multiplicity() == 0
    assert Polynomial((0.0, 0.0, 3.0)).drop_origin_factors(2).coefficients == (3.0,)


def test_multiply_commutative_and_associative():
    rng = np.random.default_rng(7)
    for _ in range(50):
        a, b, c = (Polynomial(rng.normal(size=rng.integers(1, 6))) for _ in range(3))
        ab, ba = poly_multiply(a, b).as_array(), poly_multiply(b, a).as_array()
        np.testing.assert_allclose(ab, ba, rtol=1e-12, atol=1e-12 * np.abs(ab).max())
        left = poly_multiply(poly_multiply(a, b), c).as_array()
        right = poly_multiply(a, poly_multiply(b, c)).as_array()
        np.testing.assert_allclose(left, right, rtol=1e-12, atol=1e-12 * np.abs(left).max())


def test_evaluation_and_roots():
    p = Polynomial((2.0, -3.0, 1.0))          # (s-1)(s-2)
    assert p(1.0) == pytest.approx(0.0)
    assert p(3.0) == pytest.approx(2.0)
    assert sorted(p.roots().real) == pytest.approx([1.0, 2.0])
    assert Polynomial((4.0,)).roots().size == 0


def test_operators_accept_scalars():
    p = Polynomial((1.0, 1.0))
    assert (2.0 * p).coefficients == (2.0, 2.0)
    assert (p + 1.0).coefficients == (2.0, 1.0)
    assert (-p).coefficients == (-1.0, -1.0)
