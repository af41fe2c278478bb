"""Exception types shared across the package."""


class OrderExceeded(IndexError):
    """A coefficient beyond a series' truncation order was requested."""


class NonzeroInnerConstant(ValueError):
    """Substitution into a series whose inner argument has a nonzero constant term."""


class InvalidK(ValueError):
    """The exponent parameter k must be an odd positive integer."""


class InvalidM(ValueError):
    """The Chebyshev index m must be an odd positive integer."""


class RouteMismatch(RuntimeError):
    """Independent computation routes disagree; results cannot be trusted."""


class NegativeInput(ValueError):
    pass


class ConvergenceParameters(ArithmeticError):
    """The requested error bound is unreachable at the given working precision."""
