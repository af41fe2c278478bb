from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from halfpow.errors import NonzeroInnerConstant, OrderExceeded
from halfpow.exact_core import PolyQ
from halfpow.identities import check_duality, check_lagrange_burmann
from halfpow.series import (
    Series,
    binomial_series,
    coeff,
    duality_lhs,
    duality_rhs,
    lagrange_burmann_sides,
    series_arith,
    series_compose,
)
from halfpow.special_series import bernoulli_series
from oracles import binom_product, series_coeffs_of_rational

small = st.fractions(min_value=-5, max_value=5, max_denominator=6)
halves = st.integers(-9, 9).map(lambda p: F(p, 2))


def test_arith_examples():
    one_plus, one_minus = Series([1, 1], 3), Series([1, -1], 3)
    assert series_arith(one_plus, one_minus, "mul") == Series([1, 0, -1], 3)
    assert series_arith(one_plus, Series([], 3), "add") == one_plus
    assert series_arith(Series([1, 1, 1], 3), one_plus, "mul") == Series([1, 2, 2], 3)


def test_compose_examples():
    geo = binomial_series(-1, -1, 4)
    inner = geo.mul_z().truncate(4)
    assert series_compose(geo, inner) == Series([1, 1, 2, 4], 4)
    assert [series_compose(geo, inner)[m] for m in range(4)] == series_coeffs_of_rational([1, -1], [1, -2], 4)
    outer = Series([3, F(1, 2), -2, 7], 4)
    assert outer.compose(Series.z(4)) == outer
    assert Series.const(1, 4).compose(inner) == Series.const(1, 4)


def test_compose_rejects_nonzero_constant():
    with pytest.raises(NonzeroInnerConstant):
        Series([1, 1], 3).compose(Series([1, 1], 3))


def test_binomial_series_examples():
    assert binomial_series(2, 1, 4) == Series([1, 2, 1, 0], 4)
    assert binomial_series(-1, -1, 5) == Series([1] * 5, 5)
    assert binomial_series(F(-1, 2), -1, 4) == Series([1, F(1, 2), F(3, 8), F(5, 16)], 4)


@given(halves, st.integers(0, 14))
def test_binomial_series_matches_oracle(alpha, m):
    s = binomial_series(alpha, F(1, 3), 15)
    assert s[m] == binom_product(alpha, m) * F(1, 3) ** m


@given(small, small, small)
def test_binomial_series_multiplicative(a, b, c):
    N = 10
    assert binomial_series(a, c, N) * binomial_series(b, c, N) == binomial_series(a + b, c, N)


def test_coeff_examples():
    assert coeff(Series([1, 3], 2), 1) == 3
    assert coeff(bernoulli_series(2, 5), 2) == F(1, 6)


def test_coeff_at_order_is_unknown():
    s = Series([1, 3], 2)
    with pytest.raises(OrderExceeded):
        coeff(s, 2)
    with pytest.raises(OrderExceeded):
        s[5]


def test_truncation_order_propagates():
    assert (Series([1, 1], 3) * Series([1, 1, 1, 1, 1], 5)).order == 3


@settings(max_examples=40)
@given(st.lists(small, min_size=1, max_size=6), st.lists(small, min_size=1, max_size=6), st.lists(small, min_size=1, max_size=6))
def test_compose_associative(a, b, c):
    N = 6
    A = Series(a, N)
    B = Series([0] + b, N)
    C = Series([0] + c, N)
    assert A.compose(B).compose(C) == A.compose(B.compose(C))


def test_compose_over_polyq():
    n = PolyQ.n()
    outer = Series([1, n, n * n], 3)
    z = Series.z(3)
    assert outer.compose(z) == outer


def test_duality_examples():
    one = Series.const(1, 8)
    assert duality_rhs(one, 0, 0) == 1
    h = binomial_series(F(-1, 2), -1, 8)
    assert duality_rhs(h, F(9, 2), 5) == 0
    assert duality_lhs(h, F(9, 2), 5) == 0
    assert duality_rhs(one, 3, 2) == F(1, 2)
    assert duality_lhs(one, 3, 2) == F(1, 2)


def test_duality_order_exceeded():
    with pytest.raises(OrderExceeded):
        duality_rhs(Series.const(1, 3), F(1, 2), 5)


def test_duality_randomized_suite():
    r = check_duality(200, seed=11)
    assert r.passed, r.detail


def test_lagrange_burmann_single_instance():
    phi = Series([1, 1], 8)
    g = binomial_series(-1, -1, 7).mul_z()
    H = Series([2, -1, F(1, 3)], 8)
    lhs, rhs = lagrange_burmann_sides(H, phi, g, 5)
    assert lhs == rhs


def test_lagrange_burmann_suite():
    assert check_lagrange_burmann(50, seed=4).passed
