"""Arbitrary-precision enclosures for tau(n, m), C_k and both sides of the identity.

Values are MPFR floats (gmpy2) carried together with a rigorous upper bound
on their absolute error. Every operation rounds to nearest at the working
precision ``p`` and adds ``2**-p * |result|`` to the bound when the result was
inexact; error bounds themselves are computed with upward rounding. Rounding
state lives in per-thread gmpy2 context objects, so nothing is shared
between threads.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

import gmpy2
from gmpy2 import mpfr, mpz

from .errors import ConvergenceParameters, NegativeInput
from .exact_core import as_rational
from .ramanujan_coeffs import _check_k, coeffset
from .special_series import bernoulli, catalan_quarter_series

__all__ = [
    "ApproxReal",
    "approx_sqrt",
    "hurwitz_zeta_half",
    "TauRequest",
    "tau",
    "lhs_sum",
    "C_constant",
    "rhs_eval",
    "Verification",
    "verify_identity",
    "tau0_consistency",
    "DEFAULT_PRECISION",
]

DEFAULT_PRECISION = 256
GUARD_BITS = 32
ERR_BITS = 64

_tls = threading.local()


def _rn(prec: int):
    cache = getattr(_tls, "rn", None)
    if cache is None:
        cache = _tls.rn = {}
    ctx = cache.get(prec)
    if ctx is None:
        ctx = cache[prec] = gmpy2.context(precision=prec, round=gmpy2.RoundToNearest)
    return ctx


def _up():
    ctx = getattr(_tls, "up", None)
    if ctx is None:
        ctx = _tls.up = gmpy2.context(precision=ERR_BITS, round=gmpy2.RoundUp)
    return ctx


def _down():
    ctx = getattr(_tls, "down", None)
    if ctx is None:
        ctx = _tls.down = gmpy2.context(precision=ERR_BITS, round=gmpy2.RoundDown)
    return ctx


_ZERO = mpfr(0)


# Unary minus and abs() on mpfr round to the *global* context precision, so
# route them through a context wide enough to keep them exact.
def _neg(x):
    return _rn(max(x.precision, 2)).minus(x)


def _abs(x):
    return _rn(max(x.precision, 2)).abs(x)


def _round_err(v, inexact: bool, prec: int):
    """Bound on the rounding error of a round-to-nearest result ``v``."""
    if not inexact:
        return _ZERO
    return _up().mul(_abs(v), gmpy2.exp2(-prec)) if v else _ZERO


def _sci(x, digits: int) -> str:
    """Scientific notation with ``digits`` significant digits."""
    if not x:
        return "0"
    mant, exp, _ = x.digits(10, digits)
    sign = ""
    if mant.startswith("-"):
        sign, mant = "-", mant[1:]
    body = mant[0] + ("." + mant[1:] if len(mant) > 1 else "")
    return f"{sign}{body}e{exp - 1:+d}"


def _bound(x, ctx):
    """A positive quantity as an MPFR rounded in the direction of ``ctx``."""
    if isinstance(x, ApproxReal):
        return x.hi() if ctx is _up() else x.lo()
    if isinstance(x, (int, Fraction)):
        q = as_rational(x)
        return ctx.div(mpz(q.numerator), mpz(q.denominator))
    if isinstance(x, str):
        return mpfr(x, ERR_BITS, 10, ctx)
    if isinstance(x, float):
        return mpfr(x)
    return ctx.mul(x, 1)


def _lower(x):
    return _bound(x, _down())


def _upper(x):
    return _bound(x, _up())


@dataclass(frozen=True)
class ApproxReal:
    """A real number known to lie in ``[value - err, value + err]``."""

    value: "mpfr"
    err: "mpfr"
    prec: int

    # -- construction -----------------------------------------------------
    @classmethod
    def exact(cls, q, prec: int) -> "ApproxReal":
        q = as_rational(q)
        rn = _rn(prec)
        rn.clear_flags()
        v = rn.div(mpz(q.numerator), mpz(q.denominator))
        return cls(v, _round_err(v, rn.inexact, prec), prec)

    def _lift(self, other) -> "ApproxReal":
        if isinstance(other, ApproxReal):
            return other
        return ApproxReal.exact(other, self.prec)

    # -- bounds -----------------------------------------------------------
    def hi(self):
        return _up().add(self.value, self.err)

    def lo(self):
        return _down().sub(self.value, self.err)

    def abs_hi(self):
        return _up().add(_abs(self.value), self.err)

    def contains_zero(self) -> bool:
        return _abs(self.value) <= self.err

    def contains(self, other: "ApproxReal") -> bool:
        """Do the two enclosures overlap (so both can hold the same true value)?"""
        a, b = self.value, other.value
        gap = _down().sub(a, b) if a >= b else _down().sub(b, a)
        return gap <= _up().add(self.err, other.err)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = self._lift(other)
        p = max(self.prec, o.prec)
        rn, up = _rn(p), _up()
        rn.clear_flags()
        v = rn.add(self.value, o.value)
        err = up.add(up.add(self.err, o.err), _round_err(v, rn.inexact, p))
        return ApproxReal(v, err, p)

    __radd__ = __add__

    def __neg__(self):
        return ApproxReal(_neg(self.value), self.err, self.prec)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        p = max(self.prec, o.prec)
        rn, up = _rn(p), _up()
        rn.clear_flags()
        v = rn.mul(self.value, o.value)
        err = up.add(
            up.add(up.mul(_abs(self.value), o.err), up.mul(_abs(o.value), self.err)),
            up.add(up.mul(self.err, o.err), _round_err(v, rn.inexact, p)),
        )
        return ApproxReal(v, err, p)

    __rmul__ = __mul__

    def inv(self) -> "ApproxReal":
        a = _abs(self.value)
        if a <= self.err:
            raise ZeroDivisionError("enclosure contains zero")
        p = self.prec
        rn, up, dn = _rn(p), _up(), _down()
        rn.clear_flags()
        v = rn.div(1, self.value)
        err = _round_err(v, rn.inexact, p)
        if self.err:
            denom = dn.mul(a, dn.sub(a, self.err))
            err = up.add(err, up.div(self.err, denom))
        return ApproxReal(v, err, p)

    def __truediv__(self, other):
        return self * self._lift(other).inv()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inv()

    def __pow__(self, e: int) -> "ApproxReal":
        if not isinstance(e, int):
            raise TypeError("only integer powers are supported")
        if e < 0:
            return (self ** (-e)).inv()
        result, base = ApproxReal(mpfr(1), _ZERO, self.prec), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def sqrt(self) -> "ApproxReal":
        if self.value < 0 and _abs(self.value) > self.err:
            raise NegativeInput("square root of a negative enclosure")
        p = self.prec
        rn, up, dn = _rn(p), _up(), _down()
        x = self.value if self.value > 0 else _ZERO
        rn.clear_flags()
        v = rn.sqrt(x)
        err = _round_err(v, rn.inexact, p)
        if self.err:
            lower = dn.sub(x, self.err)
            if lower > 0:
                prop = up.div(self.err, dn.sqrt(x))
            else:
                prop = up.sqrt(up.add(x, self.err))
            err = up.add(err, prop)
        return ApproxReal(v, err, p)

    def with_prec(self, prec: int) -> "ApproxReal":
        return ApproxReal(self.value, self.err, prec)

    # -- output -----------------------------------------------------------
    def decimal(self, digits: Optional[int] = None) -> str:
        if digits is None:
            digits = max(6, int(self.prec * math.log10(2)) + 1)
        return _sci(self.value, digits)

    def err_decimal(self) -> str:
        # round the bound up so the printed error is still an upper bound
        return _sci(_up().mul(self.err, mpfr("1.0000001", ERR_BITS)), 6)

    def __float__(self):
        return float(self.value)

    def __repr__(self):
        return f"ApproxReal({self.decimal(20)} +/- {self.err_decimal()}, prec={self.prec})"


def approx_sqrt(x: Union[int, Fraction, ApproxReal], precision: int) -> ApproxReal:
    if isinstance(x, ApproxReal):
        return x.with_prec(max(precision, x.prec)).sqrt()
    q = as_rational(x)
    if q < 0:
        raise NegativeInput(f"sqrt of negative rational {q}")
    return _sqrt_rational(q, precision)


@lru_cache(maxsize=1 << 16)
def _sqrt_rational(q: Fraction, precision: int) -> ApproxReal:
    return ApproxReal.exact(q, precision).sqrt()


def _half_power(x: Fraction, s: Fraction, prec: int) -> ApproxReal:
    """``x**(-s)`` for rational ``x > 0`` and ``s`` an integer or half-integer."""
    q2 = s * 2
    if q2.denominator != 1:
        raise ValueError("exponent must be an integer or half-integer")
    q2 = int(q2)
    if q2 % 2 == 0:
        return ApproxReal.exact(x, prec) ** (-(q2 // 2))
    return approx_sqrt(x, prec) ** (-q2)


def _log2(x) -> float:
    """log2 of a positive Fraction/int/mpfr without overflow."""
    if isinstance(x, Fraction):
        return math.log2(x.numerator) - math.log2(x.denominator)
    return float(gmpy2.log2(mpfr(x)))


def _log2_rising(s: float, n: int) -> float:
    """log2 of the rising factorial s (s+1) ... (s+n-1)."""
    return (math.lgamma(s + n) - math.lgamma(s)) / math.log(2)


def _rising(s: Fraction, n: int) -> Fraction:
    r = Fraction(1)
    for i in range(n):
        r *= s + i
    return r


_TWO_PI_INV_UPPER = Fraction(4, 25)  # 1/(2 pi) < 0.16
_ZETA3_BOUND = Fraction(5, 4)  # zeta(2R+1) <= zeta(3) < 1.21


def _em_remainder_log2(s: float, X: float, R: int) -> float:
    # |rem| <= 2 zeta(2R+1) (2 pi)^-(2R+1) (s)_{2R} X^{-(s+2R)}
    return (
        1.33
        + (2 * R + 1) * math.log2(0.16)
        + _log2_rising(s, 2 * R)
        - (s + 2 * R) * math.log2(X)
    )


def hurwitz_zeta_half(s, a, precision: int, target_abs_err=None) -> ApproxReal:
    """``sum_{j>=0} (a + j)**(-s)`` for half-integer (or integer) ``s > 1``, ``a >= 1``.

    Direct summation of the first ``M`` terms followed by an Euler-Maclaurin
    tail at ``X = a + M`` with ``R`` Bernoulli corrections. The remainder bound
    ``2 zeta(2R+1) (2 pi)^(-2R-1) |f^(2R)(X)|`` is added to the error.
    """
    s, a = as_rational(s), as_rational(a)
    if s <= 1:
        raise ValueError("s must exceed 1")
    if a < 1:
        raise ValueError("a must be at least 1")
    target = mpfr(2) ** (-precision) if target_abs_err is None else _lower(target_abs_err)
    return _hurwitz(s, a, precision, target)


def _plan_em(s: Fraction, a: Fraction, log2_target: float):
    sf = float(s)
    for M in (0, 4, 16, 64, 256, 1024, 4096):
        X = float(a) + M
        for R in range(1, 400):
            lr = _em_remainder_log2(sf, X, R)
            if lr <= log2_target - 2:
                return M, R
            if R > 2 and lr > _em_remainder_log2(sf, X, R - 1):
                break
    raise ConvergenceParameters(
        f"Euler-Maclaurin cannot reach 2^{log2_target:.1f} for s={s}, a={a}"
    )


@lru_cache(maxsize=4096)
def _hurwitz(s: Fraction, a: Fraction, precision: int, target) -> ApproxReal:
    wp = precision + GUARD_BITS
    log2_target = _log2(target)
    M, R = _plan_em(s, a, log2_target)
    X = a + M
    total = ApproxReal(mpfr(0), _ZERO, wp)
    for j in range(M):
        total = total + _half_power(a + j, s, wp)
    x_neg_s = _half_power(X, s, wp)
    total = total + x_neg_s * X / (s - 1) + x_neg_s * Fraction(1, 2)
    x_inv2 = ApproxReal.exact(1 / (X * X), wp)
    w = x_neg_s * (1 / X)  # X^{-s-1}
    for r in range(1, R + 1):
        c = bernoulli(2 * r) / math.factorial(2 * r) * _rising(s, 2 * r - 1)
        total = total + w * c
        w = w * x_inv2
    # w is now X^{-s-2R-1}; the bound needs X^{-s-2R}
    rem_coeff = 2 * _ZETA3_BOUND * _TWO_PI_INV_UPPER ** (2 * R + 1) * _rising(s, 2 * R) * X
    rem = (w * rem_coeff).abs_hi()
    up = _up()
    result = ApproxReal(total.value, up.add(total.err, rem), wp)
    if result.err > target:
        raise ConvergenceParameters(
            f"zeta_H({s}, {a}) error {result.err_decimal()} exceeds target at {precision} bits"
        )
    return result


@dataclass(frozen=True)
class TauRequest:
    n: int
    m: int
    target_abs_err: object = None

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError("n must be a nonnegative integer")
        if not isinstance(self.m, int) or self.m < 3:
            raise ValueError("m must be an integer >= 3 (tau diverges otherwise)")


TAIL_START = 128


@lru_cache(maxsize=None)
def _catalan_power_coeffs(m: int, J: int):
    C = catalan_quarter_series(J)
    return (C ** m).coeffs


def _trunc_bound_log2(m: int, X: int, J: int) -> float:
    sp = m / 2 + J
    lx = math.log2(X)
    return math.log2(X / (X - 1)) + max(-sp * lx, (1 - sp) * lx - math.log2(sp - 1)) + 1


def _trunc_bound(m: int, X: int, J: int, wp: int):
    """Rigorous bound on the Catalan-expansion remainder summed over x >= X."""
    sp = Fraction(m, 2) + J
    x_neg = _half_power(Fraction(X), sp, wp)
    b = x_neg * (1 + Fraction(X) / (sp - 1)) * Fraction(X, X - 1)
    return b.abs_hi()


@lru_cache(maxsize=1024)
def _tau_tail(m: int, X: int, wp: int, log2_target: int) -> ApproxReal:
    """``sum_{x >= X} (sqrt(x+1) - sqrt(x))**m`` to within ``2**log2_target``."""
    third = log2_target - math.log2(3)
    J = 1
    while _trunc_bound_log2(m, X, J) > third - 1:
        J += 1
        if J > 2000:
            raise ConvergenceParameters(f"tau tail expansion depth exceeds limit (m={m}, X={X})")
    trunc = _trunc_bound(m, X, J, wp)
    d = _catalan_power_coeffs(m, J)
    zeta_target = mpfr(2) ** int(math.floor(third - math.log2(J)))
    total = ApproxReal(mpfr(0), _ZERO, wp)
    for j in range(J):
        if d[j] == 0:
            continue
        z = _hurwitz(Fraction(m, 2) + j, Fraction(X), wp - GUARD_BITS, zeta_target)
        total = total + z * ((-1) ** j * d[j] / 2 ** m)
    return ApproxReal(total.value, _up().add(total.err, trunc), wp)


def _tau_term(x: int, m: int, wp: int) -> ApproxReal:
    s = _sqrt_rational(Fraction(x), wp) + _sqrt_rational(Fraction(x + 1), wp)
    return (s ** m).inv()


def tau(req: TauRequest, precision: int = DEFAULT_PRECISION) -> ApproxReal:
    """``sum_{nu>=0} (sqrt(n+nu) + sqrt(n+nu+1))**(-m)`` as a rigorous enclosure.

    The first ``X - n`` terms are summed directly (``X = max(n, 128)``); the
    remaining terms are rewritten as ``(2 sqrt(x))**(-m) C(-1/(4x))**m``, the
    Catalan power is expanded to ``J`` terms, and each resulting power sum is
    a Hurwitz zeta value.
    """
    n, m = req.n, req.m
    wp = precision + GUARD_BITS
    if req.target_abs_err is None:
        target = mpfr(2) ** (-precision)
    else:
        target = _lower(req.target_abs_err)
    if not target > 0:
        raise ValueError("target_abs_err must be positive")
    log2_target = _log2(target)
    if log2_target < -(precision + GUARD_BITS // 2):
        raise ConvergenceParameters(
            f"target 2^{log2_target:.0f} is finer than {precision}-bit precision can resolve"
        )
    X = max(n, TAIL_START)
    total = _tau_tail(m, X, wp, int(math.floor(log2_target - 1)))
    for x in range(X - 1, n - 1, -1):
        total = total + _tau_term(x, m, wp)
    if total.err > target:
        raise ConvergenceParameters(
            f"tau({n},{m}) error {total.err_decimal()} exceeds target at {precision} bits"
        )
    return total


def lhs_sum(k: int, n: int, precision: int = DEFAULT_PRECISION) -> ApproxReal:
    """``sum_{i=1}^n i**(k/2)``."""
    _check_k(k)
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    wp = precision + GUARD_BITS
    h = (k - 1) // 2
    total = ApproxReal(mpfr(0), _ZERO, wp)
    for i in range(1, n + 1):
        total = total + _sqrt_rational(Fraction(i), wp) * (i ** h)
    return total


def _weighted_tau_sum(k: int, n: int, precision: int, budget) -> ApproxReal:
    terms = coeffset(k).tau_terms()
    wp = precision + GUARD_BITS
    total = ApproxReal(mpfr(0), _ZERO, wp)
    for i, a in terms:
        t = _down().div(budget, _up().mul(len(terms), _upper(abs(a))))
        total = total + tau(TauRequest(n, i, t), precision) * a
    return total


@lru_cache(maxsize=256)
def _c_constant(k: int, precision: int, target) -> ApproxReal:
    cs = coeffset(k)
    wp = precision + GUARD_BITS
    exact_part = ApproxReal.exact(1 - cs.P(Fraction(1)), wp)
    c = exact_part - _weighted_tau_sum(k, 1, precision, _down().div(target, 2))
    if c.err > target:
        raise ConvergenceParameters(f"C_{k} error {c.err_decimal()} exceeds target")
    return c


def C_constant(k: int, precision: int = DEFAULT_PRECISION, target_abs_err=None) -> ApproxReal:
    """``1 - P_k(1) - sum_i A^k_i tau(1, i)``; default error target ``2**(8 - precision)``."""
    _check_k(k)
    target = mpfr(2) ** (8 - precision) if target_abs_err is None else _lower(target_abs_err)
    return _c_constant(k, precision, target)


def rhs_eval(k: int, n: int, precision: int = DEFAULT_PRECISION, target_abs_err=None) -> ApproxReal:
    """``C_k + sqrt(n) P_k(n) + sum_i A^k_i tau(n, i)``."""
    _check_k(k)
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    target = mpfr(2) ** (12 - precision) if target_abs_err is None else _lower(target_abs_err)
    quarter = _down().div(target, 4)
    wp = precision + GUARD_BITS
    cs = coeffset(k)
    c = C_constant(k, precision, quarter)
    poly_part = _sqrt_rational(Fraction(n), wp) * ApproxReal.exact(cs.P(Fraction(n)), wp)
    return c + poly_part + _weighted_tau_sum(k, n, precision, quarter)


@dataclass(frozen=True)
class Verification:
    k: int
    n: int
    residual: ApproxReal
    passed: bool
    within_tol: bool


def verify_identity(k: int, n: int, precision: int = DEFAULT_PRECISION, tol=None) -> Verification:
    """Residual ``lhs_sum - rhs_eval`` and whether its enclosure contains 0.

    With ``tol`` the right-hand side is evaluated to ``tol/2`` and
    ``within_tol`` additionally requires ``|residual| + err <= tol``.
    """
    target = None if tol is None else _down().div(_lower(tol), 2)
    residual = lhs_sum(k, n, precision) - rhs_eval(k, n, precision, target)
    passed = residual.contains_zero()
    within = True if tol is None else residual.abs_hi() <= _lower(tol)
    return Verification(k, n, residual, passed, passed and within)


def tau0_consistency(precision: int = DEFAULT_PRECISION):
    """``tau(0, 3) + 6 C_1``, which must enclose zero; returns ``(tau0, C_1, ok)``."""
    t0 = tau(TauRequest(0, 3), precision)
    c1 = C_constant(1, precision)
    diff = t0 + c1 * 6
    return t0, c1, diff.contains_zero()
