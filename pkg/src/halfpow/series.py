"""Truncated formal power series over an exact coefficient ring.

A :class:`Series` knows its first ``order`` coefficients; everything at index
``order`` and beyond is *unknown*, not zero. Arithmetic propagates the
smallest order of its inputs, so an identity check can never pass on
coefficients that were silently filled in.

Coefficients may be :class:`~fractions.Fraction` or
:class:`~halfpow.exact_core.PolyQ` (or a mix of both, since PolyQ absorbs
rational scalars). Only ring operations are needed, except for
:meth:`Series.inverse`, which needs an invertible constant term.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Tuple

from .errors import NonzeroInnerConstant, OrderExceeded
from .exact_core import PolyQ, as_rational

__all__ = [
    "Series",
    "series_arith",
    "series_compose",
    "binomial_series",
    "coeff",
    "duality_lhs",
    "duality_rhs",
    "lagrange_burmann_sides",
]

_ZERO = Fraction(0)


def _norm(x):
    if isinstance(x, (Fraction, PolyQ)):
        return x
    return as_rational(x)


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, PolyQ)) and not isinstance(x, bool)


class Series:
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable = (), order: Optional[int] = None):
        c = [_norm(x) for x in coeffs]
        if order is None:
            order = len(c)
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(c) < order:
            c.extend([_ZERO] * (order - len(c)))
        self.coeffs: Tuple = tuple(c[:order])
        self.order: int = order

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c, order: int) -> "Series":
        return cls([c], order) if order else cls((), 0)

    @classmethod
    def z(cls, order: int) -> "Series":
        return cls([0, 1], order)

    @classmethod
    def from_poly(cls, coeffs: Iterable, order: int) -> "Series":
        """A polynomial in z; coefficients past its degree are genuinely zero."""
        return cls(list(coeffs)[:order], order)

    # -- access -----------------------------------------------------------
    def coeff(self, m: int):
        if m < 0:
            raise ValueError("coefficient index must be nonnegative")
        if m >= self.order:
            raise OrderExceeded(f"[z^{m}] requested from a series known to order {self.order}")
        return self.coeffs[m]

    __getitem__ = coeff

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise OrderExceeded(f"cannot extend a series of order {self.order} to {order}")
        return Series(self.coeffs[:order], order)

    def __len__(self):
        return self.order

    # -- ring operations --------------------------------------------------
    def _coerce(self, other) -> Optional["Series"]:
        if isinstance(other, Series):
            return other
        if _is_scalar(other):
            return Series.const(other, self.order)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return Series([self.coeffs[i] + o.coeffs[i] for i in range(n)], n)

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return Series([self.coeffs[i] - o.coeffs[i] for i in range(n)], n)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if _is_scalar(other):
            return Series([c * other for c in self.coeffs], self.order)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [_ZERO] * n
        for i in range(n):
            x = a[i]
            if not x:
                continue
            for j in range(n - i):
                y = b[j]
                if y:
                    out[i + j] = out[i + j] + x * y
        return Series(out, n)

    def __rmul__(self, other):
        if _is_scalar(other):
            return Series([other * c for c in self.coeffs], self.order)
        return NotImplemented

    def __pow__(self, e: int) -> "Series":
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative int")
        result, base = Series.const(1, self.order), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and all(
            x == y for x, y in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None

    # -- structural operations -------------------------------------------
    def compose(self, inner: "Series") -> "Series":
        """``self(inner(z))`` for an inner series with exactly zero constant term."""
        if inner.order == 0:
            raise OrderExceeded("inner series has unknown constant term")
        if inner.coeffs[0] != 0:
            raise NonzeroInnerConstant(f"inner constant term is {inner.coeffs[0]}")
        n = min(self.order, inner.order)
        if n == 0:
            return Series((), 0)
        g = inner.truncate(n)
        acc = Series.const(self.coeffs[n - 1], n)
        for i in range(n - 2, -1, -1):
            acc = acc * g + self.coeffs[i]
        return acc

    __call__ = compose

    def scale(self, c) -> "Series":
        """``self(c*z)``."""
        c = as_rational(c)
        out, p = [], Fraction(1)
        for x in self.coeffs:
            out.append(x * p)
            p *= c
        return Series(out, self.order)

    def mul_z(self, k: int = 1) -> "Series":
        """Multiply by ``z**k``; the low coefficients become known zeros."""
        return Series([_ZERO] * k + list(self.coeffs), self.order + k)

    def div_z(self, k: int = 1) -> "Series":
        """Divide by ``z**k``; the first ``k`` coefficients must be known zeros."""
        if k > self.order:
            raise OrderExceeded("not enough known coefficients to divide by z^k")
        if any(c != 0 for c in self.coeffs[:k]):
            raise ValueError("series is not divisible by z^k")
        return Series(self.coeffs[k:], self.order - k)

    def derivative(self) -> "Series":
        if self.order == 0:
            return Series((), 0)
        return Series([i * self.coeffs[i] for i in range(1, self.order)], self.order - 1)

    def inverse(self) -> "Series":
        """Multiplicative inverse; the constant term must be a unit of the ring."""
        if self.order == 0:
            return Series((), 0)
        c0 = self.coeffs[0]
        if isinstance(c0, PolyQ):
            if not (c0.is_constant() and c0):
                raise ZeroDivisionError("constant term is not a unit in Q[n]")
            c0 = c0.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("constant term is zero")
        inv0 = 1 / c0
        out = [inv0]
        for k in range(1, self.order):
            s = _ZERO
            for j in range(1, k + 1):
                if self.coeffs[j]:
                    s = s + self.coeffs[j] * out[k - j]
            out.append(-s * inv0)
        return Series(out, self.order)

    def __repr__(self):
        return f"Series([{', '.join(str(c) for c in self.coeffs)}], order={self.order})"


def series_arith(a: Series, b: Series, op: str) -> Series:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def series_compose(outer: Series, inner: Series) -> Series:
    return outer.compose(inner)


def coeff(s: Series, m: int):
    return s.coeff(m)


def binomial_series(alpha, c, order: int) -> Series:
    """``(1 + c*z)**alpha`` truncated to ``order`` coefficients."""
    alpha, c = as_rational(alpha), as_rational(c)
    out = []
    b, p = Fraction(1), Fraction(1)
    for i in range(order):
        out.append(b * p)
        b = b * (alpha - i) / (i + 1)
        p *= c
    return Series(out, order)


def duality_lhs(h: Series, alpha, m: int):
    """``[z^m] h(z) * B_alpha(z)``."""
    from .special_series import bernoulli_series

    if h.order <= m:
        raise OrderExceeded(f"h known to order {h.order}, need > {m}")
    return (h.truncate(m + 1) * bernoulli_series(alpha, m + 1)).coeff(m)


def duality_rhs(h: Series, alpha, m: int):
    """``[z^m] h(z/(1+z)) * (1+z)**(m-1-alpha) * B_alpha(-z)``.

    Equal to :func:`duality_lhs` for every ``h``, ``alpha`` and ``m >= 0``.
    """
    from .special_series import bernoulli_series

    if m < 0:
        raise ValueError("m must be nonnegative")
    if h.order <= m:
        raise OrderExceeded(f"h known to order {h.order}, need > {m}")
    alpha = as_rational(alpha)
    N = m + 1
    z_over_1pz = binomial_series(-1, 1, N - 1).mul_z() if N > 1 else Series([0], 1)
    hz = h.truncate(N).compose(z_over_1pz)
    prod = hz * binomial_series(m - 1 - alpha, 1, N) * bernoulli_series(alpha, N).scale(-1)
    return prod.coeff(m)


def lagrange_burmann_sides(H: Series, phi: Series, g: Series, m: int):
    """Both sides of the Lagrange-Burmann extraction identity.

    Returns ``([z^m] H(z) phi(z)**m, [z^m] H(g(z)) g'(z) z / g(z))`` where
    ``g`` must be the compositional inverse of ``z/phi(z)``; that is checked
    to the working order before anything is extracted.
    """
    N = m + 1
    if H.order < N or phi.order < N or g.order < N + 1:
        raise OrderExceeded("inputs are not known far enough for [z^m]")
    phi_n = phi.truncate(N)
    if phi_n.coeffs[0] == 0:
        raise ValueError("phi(0) must be nonzero")
    z_over_phi = phi.truncate(N).inverse().mul_z()
    if z_over_phi.compose(g.truncate(N + 1)) != Series.z(N + 1):
        raise ValueError("g is not the compositional inverse of z/phi(z)")
    lhs = (H.truncate(N) * phi_n ** m).coeff(m)
    g_n = g.truncate(N + 1)
    factor = g_n.derivative() * g_n.div_z().inverse()
    rhs = (H.truncate(N).compose(g_n.truncate(N)) * factor).coeff(m)
    return lhs, rhs
