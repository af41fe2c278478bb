"""Exact coefficients of the half-integer power-sum decomposition.

For odd ``k`` the sum ``sum_{i<=n} i**(k/2)`` splits into a constant, a term
``sqrt(n) * P_k(n)`` with ``P_k`` a polynomial, and a finite combination
``sum_i A^k_i * tau(n, i)`` over odd ``i``. This module computes ``P_k`` two
ways and the ``A^k_i`` three ways, all exactly, and cross-checks them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, Mapping

from .errors import InvalidK, OrderExceeded, RouteMismatch
from .exact_core import PolyQ, binom_rational
from .series import Series, binomial_series
from .special_series import bernoulli, bernoulli_series, catalan_quarter_series

__all__ = [
    "CoeffSet",
    "A_direct",
    "A_gf_plus",
    "A_gf_catalan",
    "P_direct",
    "P_gf",
    "faulhaber_poly",
    "sumA_functional",
    "coeffset",
    "odd_indices",
    "zero_pattern_holds",
]


def _check_k(k) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 1 or k % 2 == 0:
        raise InvalidK(f"k must be an odd positive integer, got {k!r}")


def _alpha(k: int) -> Fraction:
    return Fraction(k, 2) + 1


def _work_order(k: int) -> int:
    # (k+3)/2 coefficients plus a margin of two
    return (k + 3) // 2 + 2


def odd_indices(k: int) -> range:
    return range(1, k + 3, 2)


def A_direct(k: int) -> Dict[int, Fraction]:
    """A^k_i from the explicit double sum over Bernoulli numbers."""
    _check_k(k)
    alpha = _alpha(k)
    out = {}
    for i in odd_indices(k):
        top = (k - i) // 2 + 1
        s = Fraction(0)
        for j in range(top + 1):
            s += (
                binom_rational(2 * j + i, j)
                / 4 ** j
                * binom_rational(alpha, top - j)
                * bernoulli(top - j)
            )
        out[i] = s / (alpha * 2 ** (i - 1))
    return out


def A_gf_plus(k: int) -> Dict[int, Fraction]:
    """A^k_i as coefficients of ``(1+z)**(k+2) * B_{k/2+1}(4z/(1+z)**2)``."""
    _check_k(k)
    alpha = _alpha(k)
    N = _work_order(k)
    inner = binomial_series(-2, 1, N - 1).mul_z() * 4
    gf = bernoulli_series(alpha, N).compose(inner) * binomial_series(k + 2, 1, N)
    scale = 1 / (alpha * 2 ** (k + 1))
    return {i: scale * gf.coeff((k - i) // 2 + 1) for i in odd_indices(k)}


def A_gf_catalan(k: int) -> Dict[int, Fraction]:
    """A^k_i via ``C(z/4)**i * (1-z)**(-1/2) * B_{k/2+1}(z)``."""
    _check_k(k)
    alpha = _alpha(k)
    N = _work_order(k)
    C = catalan_quarter_series(N)
    C2 = C * C
    base = binomial_series(Fraction(-1, 2), -1, N) * bernoulli_series(alpha, N)
    out = {}
    power = C
    for i in odd_indices(k):
        out[i] = (power * base).coeff((k - i) // 2 + 1) / (alpha * 2 ** (i - 1))
        power = power * C2
    return out


def P_direct(k: int) -> PolyQ:
    _check_k(k)
    alpha = _alpha(k)
    top = (k + 1) // 2
    coeffs = [Fraction(0)] * (top + 1)
    for i in range(top + 1):
        coeffs[top - i] = binom_rational(alpha, i) * (-1) ** i * bernoulli(i) / alpha
    return PolyQ(coeffs)


def P_gf(k: int) -> PolyQ:
    """P_k as ``[z^((k+1)/2)] B_{k/2+1}(-z) / (1 - n z)``, computed over Q[n]."""
    _check_k(k)
    alpha = _alpha(k)
    N = _work_order(k)
    n = PolyQ.n()
    geometric = Series([n ** j for j in range(N)], N)
    gf = bernoulli_series(alpha, N).scale(-1) * geometric
    return PolyQ._lift(gf.coeff((k + 1) // 2)) / alpha


def faulhaber_poly(p: int) -> PolyQ:
    """The polynomial in n equal to ``sum_{i=1}^n i**p`` for integer ``p >= 0``."""
    if not isinstance(p, int) or p < 0:
        raise ValueError("p must be a nonnegative integer")
    coeffs = [Fraction(0)] * (p + 2)
    for i in range(p + 1):
        coeffs[p + 1 - i] = binom_rational(p + 1, i) * (-1) ** i * bernoulli(i) / (p + 1)
    return PolyQ(coeffs)


def sumA_functional(k: int, F: Series, variant: str = "i"):
    """``sum_i A^k_i [z^((i-1)/2)] F`` evaluated through its closed generating form.

    Variant ``"i"`` substitutes ``C(z/4) - 1`` into ``F``; variant ``"ii"``
    substitutes ``1 - C(-z/4)``. ``F`` may have rational or Q[n] coefficients.
    """
    _check_k(k)
    top = (k + 1) // 2
    N = top + 1
    if F.order < N:
        raise OrderExceeded(f"F must be known to order {N} for k={k}, got {F.order}")
    alpha = _alpha(k)
    F = F.truncate(N)
    C = catalan_quarter_series(N)
    if variant == "i":
        gf = (
            bernoulli_series(alpha, N)
            * (2 - C)
            * binomial_series(-1, -1, N)
            * F.compose(C - 1)
        )
    elif variant == "ii":
        Cm = C.scale(-1)
        gf = (
            bernoulli_series(alpha, N).scale(-1)
            * (2 - Cm)
            * binomial_series(-1, 1, N)
            * F.compose(1 - Cm)
        )
    else:
        raise ValueError(f"variant must be 'i' or 'ii', got {variant!r}")
    return gf.coeff(top) / alpha


def zero_pattern_holds(k: int, A: Mapping[int, Fraction]) -> bool:
    """A^k_1 = 0 and A^k_i = 0 whenever (k - i)/2 is even."""
    if A[1] != 0:
        return False
    return all(A[i] == 0 for i in odd_indices(k) if i <= k and ((k - i) // 2) % 2 == 0)


@dataclass(frozen=True)
class CoeffSet:
    k: int
    P: PolyQ
    A: Mapping[int, Fraction] = field(hash=False)
    route: str = field(default="direct", compare=False)

    def tau_terms(self):
        """Nonzero ``(i, A^k_i)`` pairs, ascending in ``i``."""
        return [(i, a) for i, a in sorted(self.A.items()) if a != 0]


@lru_cache(maxsize=None)
def coeffset(k: int) -> CoeffSet:
    """All exact ingredients for one ``k``, with every route cross-checked."""
    _check_k(k)
    a0, a1, a2 = A_direct(k), A_gf_plus(k), A_gf_catalan(k)
    if not (a0 == a1 == a2):
        bad = [i for i in a0 if not (a0[i] == a1[i] == a2[i])]
        raise RouteMismatch(f"A^{k}_i routes disagree at i in {bad}")
    p0, p1 = P_direct(k), P_gf(k)
    if p0 != p1:
        raise RouteMismatch(f"P_{k} routes disagree: {p0} vs {p1}")
    if not zero_pattern_holds(k, a0):
        raise RouteMismatch(f"A^{k}_i violates the zero pattern: {a0}")
    top = (k + 1) // 2
    if p0.leading() != Fraction(2, k + 2) or p0.coeff(top - 1) != Fraction(1, 2):
        raise RouteMismatch(f"P_{k} has wrong leading coefficients")
    return CoeffSet(k=k, P=p0, A=MappingProxyType(dict(a0)), route="direct=gf_plus=gf_catalan")
