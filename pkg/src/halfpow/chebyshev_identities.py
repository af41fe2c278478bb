"""Chebyshev polynomials evaluated at sqrt(n+1), and the exact telescoping check.

For odd ``m`` both ``T_m(x)/x`` and ``U_{m-1}(x)`` are polynomials in ``x**2``,
so with ``x**2 = n + 1`` they become elements of Q[n]. Everything here is
exact; the single numeric check lives in :func:`sqrt_power_numeric_check`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidM
from .exact_core import PolyQ
from .ramanujan_coeffs import _check_k, coeffset, odd_indices
from .series import Series, binomial_series
from .special_series import catalan_quarter_series

__all__ = [
    "ChebPair",
    "cheb_pair",
    "gen_series",
    "pell_check",
    "sqrt_power_numeric_check",
    "lemma4_check",
    "telescope_symbolic_check",
    "gf_instance_checks",
    "SurdExpr",
]


@dataclass(frozen=True)
class ChebPair:
    m: int
    t_over_root: PolyQ  # T_m(sqrt(n+1)) / sqrt(n+1)
    u: PolyQ  # U_{m-1}(sqrt(n+1))


@lru_cache(maxsize=None)
def _chebyshev_x(j: int):
    """(T_j, U_j) as polynomials in x, from T_{j+1} = 2x T_j - T_{j-1}."""
    x = PolyQ.n()
    T = [PolyQ.const(1), x]
    U = [PolyQ.const(1), 2 * x]
    for i in range(2, j + 1):
        T.append(2 * x * T[i - 1] - T[i - 2])
        U.append(2 * x * U[i - 1] - U[i - 2])
    return T[j], U[j]


def _even_part_in_n(p: PolyQ) -> PolyQ:
    """Rewrite a polynomial in ``x**2`` as a polynomial in ``n = x**2 - 1``."""
    if any(c != 0 for c in p.coeffs[1::2]):
        raise ValueError("polynomial has odd powers of x")
    return PolyQ._lift(PolyQ(p.coeffs[0::2])(PolyQ((1, 1))))


@lru_cache(maxsize=None)
def cheb_pair(m: int) -> ChebPair:
    if not isinstance(m, int) or m < 1 or m % 2 == 0:
        raise InvalidM(f"m must be an odd positive integer, got {m!r}")
    T_m, _ = _chebyshev_x(m)
    _, U_m1 = _chebyshev_x(m - 1)
    t_over_x = PolyQ(T_m.coeffs[1:])  # T_m is odd, constant term is 0
    return ChebPair(m, _even_part_in_n(t_over_x), _even_part_in_n(U_m1))


def gen_series(which: str, order: int) -> Series:
    """Bisected Chebyshev generating function over Q[n].

    ``"T"``: ``(1 - z) / (1 - 2(2n+1) z + z**2)``, i.e. the T-series with its
    overall sqrt(n+1) factor stripped; ``"U"``: ``(1 + z) / (same)``.
    """
    if which not in ("T", "U"):
        raise ValueError("which must be 'T' or 'U'")
    sign = -1 if which == "T" else 1
    denom = Series([1, PolyQ((-2, -4)), 1], order)
    return Series([1, sign], order) * denom.inverse()


def pell_check(m: int) -> bool:
    """``T_m(x)**2 - (x**2 - 1) U_{m-1}(x)**2 = 1`` with ``x**2 = n + 1``."""
    c = cheb_pair(m)
    n1 = PolyQ((1, 1))
    return n1 * c.t_over_root ** 2 - PolyQ.n() * c.u ** 2 == 1


def sqrt_power_numeric_check(m: int, n: int, precision: int = 128) -> bool:
    """Numerically compare ``(sqrt(n) - sqrt(n+1))**m`` with its Chebyshev form."""
    from .numeric_eval import ApproxReal, approx_sqrt

    if precision < 64:
        raise ValueError("precision must be at least 64 bits")
    c = cheb_pair(m)
    rn, rn1 = approx_sqrt(n, precision), approx_sqrt(n + 1, precision)
    lhs = (rn - rn1) ** m
    rhs = rn * ApproxReal.exact(c.u(Fraction(n)), precision) - rn1 * ApproxReal.exact(
        c.t_over_root(Fraction(n)), precision
    )
    return (lhs - rhs).contains_zero()


def _components(k: int):
    cs = coeffset(k)
    n1 = PolyQ((1, 1))
    sum_t = sum((a * cheb_pair(i).t_over_root for i, a in cs.A.items()), PolyQ())
    sum_u = sum((a * cheb_pair(i).u for i, a in cs.A.items()), PolyQ())
    return cs.P, sum_t, sum_u, n1 ** ((k - 1) // 2)


def lemma4_check(k: int) -> bool:
    """The T- and U-sums of A^k_i reproduce P_k(n+1) - (n+1)^((k-1)/2) and P_k(n)."""
    _check_k(k)
    P, sum_t, sum_u, n1_pow = _components(k)
    return sum_t == P.shift(1) - n1_pow and sum_u == P


class SurdExpr:
    """``c0 + c1 sqrt(n) + c2 sqrt(n+1) + c3 sqrt(n) sqrt(n+1)`` with ``c_j`` in Q[n]."""

    __slots__ = ("c",)

    def __init__(self, c0=PolyQ(), c1=PolyQ(), c2=PolyQ(), c3=PolyQ()):
        self.c = tuple(PolyQ._lift(x) for x in (c0, c1, c2, c3))

    @classmethod
    def root_n(cls):
        return cls(c1=PolyQ.const(1))

    @classmethod
    def root_n1(cls):
        return cls(c2=PolyQ.const(1))

    def __add__(self, o):
        if not isinstance(o, SurdExpr):
            o = SurdExpr(o)
        return SurdExpr(*(x + y for x, y in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        return SurdExpr(*(-x for x in self.c))

    def __sub__(self, o):
        return self + (-o if isinstance(o, SurdExpr) else SurdExpr(-PolyQ._lift(o)))

    def __mul__(self, o):
        if not isinstance(o, SurdExpr):
            return SurdExpr(*(x * o for x in self.c))
        n = PolyQ.n()
        n1 = PolyQ((1, 1))
        a0, a1, a2, a3 = self.c
        b0, b1, b2, b3 = o.c
        # basis products: s*s = n, t*t = n+1, s*t = st, s*st = n t, t*st = (n+1) s, st*st = n(n+1)
        c0 = a0 * b0 + n * a1 * b1 + n1 * a2 * b2 + n * n1 * a3 * b3
        c1 = a0 * b1 + a1 * b0 + n1 * (a2 * b3 + a3 * b2)
        c2 = a0 * b2 + a2 * b0 + n * (a1 * b3 + a3 * b1)
        c3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1
        return SurdExpr(c0, c1, c2, c3)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = SurdExpr(PolyQ.const(1))
        for _ in range(e):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not any(self.c)


def telescope_symbolic_check(k: int) -> bool:
    """``phi_k(n) - phi_k(n+1)`` vanishes identically.

    The difference is expanded directly in Q[n][sqrt(n), sqrt(n+1)], with the
    powers ``(sqrt(n) - sqrt(n+1))**i`` multiplied out rather than taken from
    the Chebyshev polynomials, so this is independent of :func:`lemma4_check`.
    """
    _check_k(k)
    cs = coeffset(k)
    s, t = SurdExpr.root_n(), SurdExpr.root_n1()
    n1 = PolyQ((1, 1))
    expr = (
        t * (-(n1 ** ((k - 1) // 2)))
        - s * cs.P
        + t * cs.P.shift(1)
    )
    diff = s - t
    power = diff
    for i in odd_indices(k):
        if cs.A[i]:
            expr = expr + power * cs.A[i]
        power = power * diff * diff
    return expr.is_zero()


def gf_instance_checks(order: int = 16):
    """The two generating-function identities behind the Chebyshev-weighted sums of A^k_i.

    Returns ``(t_ok, u_ok)`` where
    ``(2 - C(z/4))/(1 - z) * T_n(C(z/4) - 1) == 1/(1 - (n+1) z)`` (T stripped of sqrt(n+1)) and
    ``(2 - C(-z/4))/(1 + z) * U_n(1 - C(-z/4)) == 1/(1 - n z)``, over Q[n].
    """
    C = catalan_quarter_series(order)
    Cm = C.scale(-1)
    n = PolyQ.n()
    n1 = PolyQ((1, 1))
    lhs_t = (2 - C) * binomial_series(-1, -1, order) * gen_series("T", order).compose(C - 1)
    rhs_t = Series([n1 ** j for j in range(order)], order)
    lhs_u = (2 - Cm) * binomial_series(-1, 1, order) * gen_series("U", order).compose(1 - Cm)
    rhs_u = Series([n ** j for j in range(order)], order)
    return lhs_t == rhs_t, lhs_u == rhs_u
