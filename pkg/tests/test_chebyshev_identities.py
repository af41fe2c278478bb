from fractions import Fraction as F

import mpmath
import pytest

from halfpow.chebyshev_identities import (
    SurdExpr,
    cheb_pair,
    gen_series,
    gf_instance_checks,
    lemma4_check,
    pell_check,
    sqrt_power_numeric_check,
    telescope_symbolic_check,
)
from halfpow.errors import InvalidK, InvalidM
from halfpow.exact_core import PolyQ


def test_cheb_pair_examples():
    one = PolyQ.const(1)
    assert cheb_pair(1).t_over_root == one and cheb_pair(1).u == one
    assert cheb_pair(3).t_over_root == PolyQ([1, 4])
    assert cheb_pair(3).u == PolyQ([3, 4])


@pytest.mark.parametrize("m", [0, 2, -3])
def test_cheb_pair_rejects_bad_m(m):
    with pytest.raises(InvalidM):
        cheb_pair(m)


@pytest.mark.parametrize("m", [1, 5, 9, 15])
def test_cheb_pair_matches_mpmath(m):
    # integer coefficients, so the values at integer n are integers
    c = cheb_pair(m)
    with mpmath.workdps(40):
        for n in (0, 1, 4, 11):
            x = mpmath.sqrt(n + 1)
            assert mpmath.almosteq(mpmath.chebyt(m, x) / x, int(c.t_over_root(n)), 1e-30)
            assert mpmath.almosteq(mpmath.chebyu(m - 1, x), int(c.u(n)), 1e-30)


def test_gen_series_examples():
    T, U = gen_series("T", 4), gen_series("U", 4)
    assert T[0] == 1 and U[0] == 1
    assert U[1] == PolyQ([3, 4])


def test_gen_series_matches_recurrence():
    T, U = gen_series("T", 16), gen_series("U", 16)
    for m in range(1, 32, 2):
        assert T[(m - 1) // 2] == cheb_pair(m).t_over_root
        assert U[(m - 1) // 2] == cheb_pair(m).u


@pytest.mark.parametrize("m", range(1, 32, 2))
def test_pell(m):
    assert pell_check(m)


@pytest.mark.parametrize("m,n,prec", [(1, 0, 128), (3, 1, 128), (5, 3, 256), (9, 40, 128)])
def test_sqrt_power_numeric(m, n, prec):
    assert sqrt_power_numeric_check(m, n, prec)


def test_sqrt_power_by_hand():
    # (1 - sqrt 2)^3 = 7 - 5 sqrt 2
    c = cheb_pair(3)
    assert (c.u(1), c.t_over_root(1)) == (7, 5)


def test_chebyshev_sums_k1_by_hand():
    c = cheb_pair(3)
    P1 = PolyQ([F(1, 2), F(2, 3)])
    assert F(1, 6) * c.t_over_root == P1.shift(1) - 1
    assert F(1, 6) * c.u == P1
    assert lemma4_check(1)


@pytest.mark.parametrize("k", range(1, 32, 2))
def test_lemma4_and_telescope(k):
    assert lemma4_check(k)
    assert telescope_symbolic_check(k)


def test_telescope_detects_corruption(monkeypatch):
    import halfpow.chebyshev_identities as ci
    from halfpow.ramanujan_coeffs import CoeffSet, coeffset

    good = coeffset(7)
    A = dict(good.A)
    A[9] += F(1, 10 ** 6)
    monkeypatch.setattr(ci, "coeffset", lambda k: CoeffSet(k, good.P, A))
    assert not ci.telescope_symbolic_check(7)
    assert not ci.lemma4_check(7)


def test_checks_reject_even_k():
    with pytest.raises(InvalidK):
        lemma4_check(4)
    with pytest.raises(InvalidK):
        telescope_symbolic_check(2)


def test_gf_instances():
    assert gf_instance_checks(16) == (True, True)


def test_surd_arithmetic():
    s, t = SurdExpr.root_n(), SurdExpr.root_n1()
    assert (s * s - PolyQ.n()).is_zero()
    assert (t * t - PolyQ([1, 1])).is_zero()
    assert not (s - t).is_zero()
