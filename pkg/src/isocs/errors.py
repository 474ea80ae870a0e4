"""Exception types raised across the package."""


class IsocsError(Exception):
    pass


class DomainError(IsocsError, ValueError):
    """Argument outside the function's domain."""


class ConvergenceError(IsocsError, ArithmeticError):
    """A series or quadrature stopped before reaching its tolerance."""

    def __init__(self, message, error_estimate=None, terms=None):
        super().__init__(message)
        self.error_estimate = error_estimate
        self.terms = terms


class DivergentArgumentError(IsocsError, ArithmeticError):
    """Series argument lies outside the disc of convergence.

    Distinct from ConvergenceError: no amount of extra terms would help.
    """

    def __init__(self, message, argument=None):
        super().__init__(message)
        self.argument = argument


class DivergentIntegralError(IsocsError, ArithmeticError):
    def __init__(self, message, error_estimate=None):
        super().__init__(message)
        self.error_estimate = error_estimate


class TruncationError(IsocsError):
    """Fock-space truncation too small for the requested state or sum."""

    def __init__(self, message, tail=None):
        super().__init__(message)
        self.tail = tail
