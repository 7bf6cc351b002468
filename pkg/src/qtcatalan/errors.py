"""Exceptions shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain on which an operation is defined."""


class NotPolynomialError(ArithmeticError):
    """A rational expression failed to reduce to a Laurent polynomial.

    Raised by exact division when a binomial denominator factor does not
    divide the numerator.  For the tableau sums this signals either an
    invalid input vector or an implementation bug, since the full sums are
    guaranteed to be polynomial.
    """
