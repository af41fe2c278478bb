"""Sanity checks on the reference oracles themselves."""
import math
from fractions import Fraction

import mpmath

from oracles import (
    bernoulli_akiyama_tanigawa,
    binom_product,
    catalan_closed,
    series_coeffs_of_rational,
    tau_bracket,
    tau_oracle,
    zeta_partial_bracket,
)


def test_bernoulli_oracle_known_values():
    B = bernoulli_akiyama_tanigawa(13)
    assert B[:5] == [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30)]
    assert B[12] == Fraction(-691, 2730)


def test_binom_product():
    assert binom_product(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert all(binom_product(Fraction(7), i) == math.comb(7, i) for i in range(10))


def test_catalan_closed():
    assert [catalan_closed(j) for j in range(7)] == [1, 1, 2, 5, 14, 42, 132]


def test_long_division():
    # (1 - z) / (1 - 2z) = 1 + z + 2z^2 + 4z^3
    assert series_coeffs_of_rational([1, -1], [1, -2], 4) == [1, 1, 2, 4]


def test_tau_bracket_is_tight_and_ordered():
    for m in (3, 5, 9):
        lo, hi = tau_bracket(2, m)
        assert lo <= hi and hi - lo < 1e-6


def test_tau_oracle_matches_mpmath_closed_form_at_zero():
    # tau(0,3) = -6 zeta(-1/2) follows from the k = 1 identity at n = 0
    assert abs(tau_oracle(0, 3) + 6 * float(mpmath.zeta(-0.5))) < 1e-6


def test_zeta_bracket():
    lo, hi = zeta_partial_bracket(2.0, 1.0, 10000)
    assert lo <= math.pi ** 2 / 6 <= hi
