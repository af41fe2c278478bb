"""Exact decomposition of sums of half-integer powers ``sum_{i<=n} i**(k/2)``."""
from .errors import (
    ConvergenceParameters,
    InvalidK,
    InvalidM,
    NegativeInput,
    NonzeroInnerConstant,
    OrderExceeded,
    RouteMismatch,
)
from .exact_core import PolyQ, Rational, binom_rational
from .numeric_eval import (
    ApproxReal,
    C_constant,
    TauRequest,
    hurwitz_zeta_half,
    tau,
    verify_identity,
)
from .ramanujan_coeffs import CoeffSet, coeffset
from .series import Series

__all__ = [
    "ApproxReal",
    "C_constant",
    "CoeffSet",
    "ConvergenceParameters",
    "InvalidK",
    "InvalidM",
    "NegativeInput",
    "NonzeroInnerConstant",
    "OrderExceeded",
    "PolyQ",
    "Rational",
    "RouteMismatch",
    "Series",
    "TauRequest",
    "binom_rational",
    "coeffset",
    "hurwitz_zeta_half",
    "tau",
    "verify_identity",
]
