"""Exact scalars and dense polynomials in one variable ``n`` over Q.

Rationals are :class:`fractions.Fraction`, re-exported as :data:`Rational`.
:class:`PolyQ` is an immutable dense polynomial whose coefficients are
Fractions; it interoperates with ``int`` and ``Fraction`` operands so it can
serve as the coefficient ring of a power series.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Optional, Union

Rational = Fraction
Scalar = Union[int, Fraction]

__all__ = ["Rational", "PolyQ", "as_rational", "binom_rational", "poly_eval", "poly_shift"]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: they would smuggle rounding into exact code.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def binom_rational(alpha, i: int) -> Fraction:
    """Generalized binomial coefficient ``alpha*(alpha-1)*...*(alpha-i+1) / i!``."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    alpha = as_rational(alpha)
    num = Fraction(1)
    for j in range(i):
        num *= (alpha - j) / (j + 1)
    return num


class PolyQ:
    """Dense univariate polynomial over Q in the symbol ``n``.

    ``coeffs[j]`` is the coefficient of ``n**j``; trailing zeros are trimmed,
    so the zero polynomial has an empty coefficient tuple and ``degree`` None.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [as_rational(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple = tuple(c)

    @classmethod
    def n(cls) -> "PolyQ":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "PolyQ":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c=1) -> "PolyQ":
        return cls([0] * degree + [c])

    @property
    def degree(self) -> Optional[int]:
        return len(self.coeffs) - 1 if self.coeffs else None

    def coeff(self, j: int) -> Fraction:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else Fraction(0)

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @staticmethod
    def _lift(other) -> Optional["PolyQ"]:
        if isinstance(other, PolyQ):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return PolyQ((other,))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, x in enumerate(b):
            out[j] += x
        return PolyQ(out)

    __radd__ = __add__

    def __neg__(self) -> "PolyQ":
        return PolyQ(-x for x in self.coeffs)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                return PolyQ()
            return PolyQ(x * other for x in self.coeffs)
        if not isinstance(other, PolyQ):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PolyQ()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return PolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "PolyQ":
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative int")
        result, base = PolyQ((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * (Fraction(1) / other)
        if isinstance(other, PolyQ) and other.is_constant() and other.coeffs:
            return self * (1 / other.coeffs[0])
        return NotImplemented

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeff(0))
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a rational or another PolyQ."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, c) -> "PolyQ":
        """Return ``q`` with ``q(n) = self(n + c)``."""
        return PolyQ._lift(self(PolyQ((as_rational(c), 1))))

    def __repr__(self):
        return f"PolyQ({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if c == 0:
                continue
            mag = abs(c)
            var = "" if j == 0 else ("n" if j == 1 else f"n^{j}")
            if j == 0:
                body = str(mag)
            elif mag == 1:
                body = var
            else:
                body = f"{mag} {var}"
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)


def poly_eval(p: PolyQ, x) -> Fraction:
    return p(as_rational(x))


def poly_shift(p: PolyQ, c) -> PolyQ:
    return p.shift(c)
