import random
from fractions import Fraction as F

import pytest

from halfpow.errors import InvalidK, OrderExceeded
from halfpow.exact_core import PolyQ
from halfpow.ramanujan_coeffs import (
    A_direct,
    A_gf_catalan,
    A_gf_plus,
    P_direct,
    P_gf,
    coeffset,
    faulhaber_poly,
    odd_indices,
    sumA_functional,
    zero_pattern_holds,
)
from halfpow.series import Series


def poly(*desc):
    """Polynomial from coefficients listed highest degree first."""
    return PolyQ(reversed([F(c) for c in desc]))


def test_A_direct_examples():
    assert A_direct(1)[3] == F(1, 6)
    A5 = A_direct(5)
    assert (A5[3], A5[5], A5[7]) == (F(-1, 96), 0, F(1, 224))
    A9 = A_direct(9)
    assert (A9[3], A9[7], A9[11]) == (F(1, 256), F(-1, 512), F(1, 5632))
    assert A9[1] == A9[5] == A9[9] == 0


def test_A_gf_plus_examples():
    assert A_gf_plus(1)[3] == F(1, 6)
    A7 = A_gf_plus(7)
    assert (A7[5], A7[9], A7[3], A7[7]) == (F(-1, 192), F(1, 1152), 0, 0)
    assert A_gf_plus(13)[3] == F(-143, 40960)


def test_A_gf_catalan_examples():
    A11 = A_gf_catalan(11)
    assert (A11[5], A11[9], A11[13]) == (F(33, 10240), F(-1, 1536), F(1, 26624))
    assert A_gf_catalan(15)[17] == F(1, 557056)
    assert all(A_gf_catalan(k)[1] == 0 for k in range(1, 30, 2))


def test_P_examples():
    assert P_direct(1) == poly("2/3", "1/2")
    assert P_direct(3) == poly("2/5", "1/2", "1/8")
    assert P_direct(7) == poly("2/9", "1/2", "7/24", 0, "-7/384")
    assert P_gf(1) == poly("2/3", "1/2")
    assert P_gf(5) == poly("2/7", "1/2", "5/24", 0)
    assert P_gf(3) == P_direct(3)


@pytest.mark.parametrize("fn", [A_direct, A_gf_plus, A_gf_catalan, P_direct, P_gf, coeffset])
@pytest.mark.parametrize("k", [0, 2, -1, 4])
def test_invalid_k(fn, k):
    with pytest.raises(InvalidK):
        fn(k)


def test_route_equivalence_small():
    for k in range(1, 26, 2):
        assert A_direct(k) == A_gf_plus(k) == A_gf_catalan(k)
        assert P_direct(k) == P_gf(k)


def test_zero_pattern_small():
    for k in range(1, 40, 2):
        assert zero_pattern_holds(k, A_direct(k))


def test_zero_pattern_detects_violation():
    A = dict(A_direct(9))
    A[5] = F(1)
    assert not zero_pattern_holds(9, A)


def test_faulhaber_examples():
    assert faulhaber_poly(0) == poly(1, 0)
    assert faulhaber_poly(1) == poly("1/2", "1/2", 0)
    assert faulhaber_poly(3) == poly("1/4", "1/2", "1/4", 0, 0)


def test_faulhaber_matches_summation():
    for p in range(13):
        fp = faulhaber_poly(p)
        for n in range(31):
            assert fp(n) == sum(i ** p for i in range(1, n + 1))


def test_sumA_functional_examples():
    for k in (1, 5, 9):
        N = (k + 3) // 2
        for variant in ("i", "ii"):
            assert sumA_functional(k, Series.const(1, N), variant) == 0
    assert sumA_functional(1, Series.z(2), "i") == F(1, 6)
    assert sumA_functional(1, Series.z(2), "ii") == F(1, 6)


def test_sumA_functional_random():
    rng = random.Random(5)
    for k in range(1, 16, 2):
        A = coeffset(k).A
        top = (k + 1) // 2
        for _ in range(20):
            coeffs = [F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(top + 1)]
            F_ = Series(coeffs, top + 1)
            direct = sum(A[i] * coeffs[(i - 1) // 2] for i in odd_indices(k))
            assert sumA_functional(k, F_, "i") == sumA_functional(k, F_, "ii") == direct


def test_sumA_functional_over_polyq():
    # F = sum_j n^j z^j gives sum_i A_i n^((i-1)/2)
    k = 7
    n = PolyQ.n()
    F_ = Series([n ** j for j in range(5)], 5)
    expected = sum((a * n ** ((i - 1) // 2) for i, a in coeffset(k).A.items()), PolyQ())
    assert sumA_functional(k, F_, "i") == expected


def test_sumA_functional_needs_order():
    with pytest.raises(OrderExceeded):
        sumA_functional(5, Series.z(3))


def test_coeffset_examples():
    c1 = coeffset(1)
    assert c1.P == poly("2/3", "1/2") and c1.tau_terms() == [(3, F(1, 6))]
    c3 = coeffset(3)
    assert c3.P == poly("2/5", "1/2", "1/8") and c3.A[5] == F(1, 40) and c3.A[3] == 0
    c15 = coeffset(15)
    assert (c15.A[5], c15.A[9]) == (F(-65, 16384), F(41, 49152))
    assert c15.A[7] == c15.A[11] == 0


def test_coeffset_keeps_all_odd_indices():
    cs = coeffset(11)
    assert sorted(cs.A) == list(range(1, 14, 2))
    with pytest.raises(TypeError):
        cs.A[3] = 1
