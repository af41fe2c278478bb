"""Bernoulli numbers, Bernoulli series, and the quarter-scaled Catalan series."""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Tuple

from .exact_core import PolyQ, as_rational, binom_rational
from .series import Series, binomial_series

__all__ = [
    "BernoulliTable",
    "bernoulli_numbers",
    "bernoulli",
    "bernoulli_series",
    "bernoulli_polynomial",
    "reciprocal_check",
    "negation_identity_check",
    "bz1z_check",
    "catalan_numbers",
    "catalan_quarter_series",
    "catalan_identity_check",
    "CATALAN_IDENTITIES",
]


@dataclass(frozen=True)
class BernoulliTable:
    """``values[i]`` is B_i, with the convention B_1 = -1/2."""

    values: Tuple[Fraction, ...]

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)


_bern_lock = threading.Lock()
_bern_cache = [Fraction(1)]


def _extend_bernoulli(count: int) -> None:
    # sum_{j=0}^{m} C(m+1, j) B_j = 0  for m >= 1
    with _bern_lock:
        b = _bern_cache
        for m in range(len(b), count):
            if m >= 3 and m % 2:
                b.append(Fraction(0))
                continue
            s = sum(comb(m + 1, j) * b[j] for j in range(m))
            b.append(-s / (m + 1))


def bernoulli_numbers(count: int) -> BernoulliTable:
    if count < 0:
        raise ValueError("count must be nonnegative")
    if len(_bern_cache) < count:
        _extend_bernoulli(count)
    return BernoulliTable(tuple(_bern_cache[:count]))


def bernoulli(i: int) -> Fraction:
    if len(_bern_cache) <= i:
        _extend_bernoulli(i + 1)
    return _bern_cache[i]


def bernoulli_series(alpha, order: int) -> Series:
    """The formal series ``sum_i binom(alpha, i) B_i z^i`` to ``order`` terms."""
    alpha = as_rational(alpha)
    B = bernoulli_numbers(order)
    out = []
    b = Fraction(1)
    for i in range(order):
        out.append(b * B[i])
        b = b * (alpha - i) / (i + 1)
    return Series(out, order)


def bernoulli_polynomial(d: int) -> PolyQ:
    """Bernoulli polynomial of degree ``d`` in the variable of :class:`PolyQ`.

    Built without Bernoulli numbers: start from 1, integrate with factor d
    (the Appell property p_d' = d p_{d-1}), and pick the constant so that the
    integral over [0, 1] vanishes.
    """
    p = PolyQ.const(1)
    for deg in range(1, d + 1):
        anti = PolyQ([0] + [deg * c / (j + 1) for j, c in enumerate(p.coeffs)])
        mean = sum(c / (j + 1) for j, c in enumerate(anti.coeffs))
        p = anti - mean
    return p


def reciprocal_check(alpha: int) -> bool:
    """Is ``B_alpha(z)`` the coefficient reversal of the Bernoulli polynomial?"""
    if not isinstance(alpha, int) or alpha < 0:
        raise ValueError("alpha must be a nonnegative integer")
    # B_alpha(z) is a polynomial of degree alpha; order alpha + 3 also checks
    # that the coefficients beyond the degree vanish.
    order = alpha + 3
    lhs = bernoulli_series(alpha, order)
    poly = bernoulli_polynomial(alpha)
    rhs = Series([poly.coeff(alpha - i) for i in range(alpha + 1)], order)
    return lhs == rhs


def negation_identity_check(alpha, order: int) -> bool:
    """``B_alpha(-z) == B_alpha(z) + alpha*z`` up to ``order``."""
    if order < 2:
        raise ValueError("order must be at least 2")
    alpha = as_rational(alpha)
    b = bernoulli_series(alpha, order)
    return b.scale(-1) == b + Series.z(order) * alpha


def bz1z_check(alpha: int, order: int) -> bool:
    """``B_alpha(-z/(1-z)) * (1-z)**alpha == B_alpha(z)`` for integer ``alpha >= 1``."""
    if not isinstance(alpha, int) or alpha < 1:
        raise ValueError("checked only for positive integer alpha")
    b = bernoulli_series(alpha, order)
    inner = -binomial_series(-1, -1, order - 1).mul_z()
    lhs = b.compose(inner) * binomial_series(alpha, -1, order)
    return lhs == b


def catalan_numbers(count: int) -> list:
    """Catalan numbers by Segner's convolution recurrence."""
    cat = [1] if count else []
    for j in range(1, count):
        cat.append(sum(cat[a] * cat[j - 1 - a] for a in range(j)))
    return cat


def catalan_quarter_series(order: int) -> Series:
    """``C(z/4)``, whose ``j``-th coefficient is ``Cat_j / 4**j``."""
    return Series([Fraction(c, 4 ** j) for j, c in enumerate(catalan_numbers(order))], order)


def _cat_i(order: int) -> bool:
    C = catalan_quarter_series(order)
    w = binomial_series(Fraction(-1, 2), -1, order)
    power = C
    C2 = C * C
    for i in range(1, 16, 2):
        lhs = power * w
        for j in range(order):
            if lhs[j] != binom_rational(2 * j + i, j) / 4 ** j:
                return False
        power = power * C2
    return True


def _cat_ii(order: int) -> bool:
    rhs = (1 - binomial_series(Fraction(1, 2), -1, order + 1)).div_z() * 2
    return catalan_quarter_series(order) == rhs


def _cat_iii(order: int) -> bool:
    C = catalan_quarter_series(order)
    z_over_1pz = binomial_series(-1, 1, order - 1).mul_z()
    lhs = C.compose(z_over_1pz)
    rhs = C.scale(-1) * binomial_series(Fraction(1, 2), 1, order)
    return lhs == rhs


def _cat_iv(order: int) -> bool:
    C = catalan_quarter_series(order)
    first = C * binomial_series(Fraction(-1, 2), -1, order)
    second = (binomial_series(Fraction(-1, 2), -1, order + 1) - 1).div_z() * 2
    third = (2 - C) * binomial_series(-1, -1, order)
    return first == second == third


def _cat_v(order: int) -> bool:
    C = catalan_quarter_series(order)
    lhs = (C * C).mul_z().truncate(order) * Fraction(1, 4)
    return lhs == C - 1


CATALAN_IDENTITIES = {"i": _cat_i, "ii": _cat_ii, "iii": _cat_iii, "iv": _cat_iv, "v": _cat_v}


def catalan_identity_check(which: str, order: int) -> bool:
    if order < 2:
        raise ValueError("order must be at least 2")
    try:
        check = CATALAN_IDENTITIES[which]
    except KeyError:
        raise ValueError(f"unknown identity {which!r}; expected one of i..v") from None
    return check(order)
