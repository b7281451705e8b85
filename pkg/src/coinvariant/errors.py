"""Exception types shared across the engine.

Every arithmetic shortcut in this package rests on an exactness theorem
(polynomial quotients that must be polynomials, class sums that must clear
n!).  When one of these fails it signals a bug in a table or a convention,
never a recoverable condition, so the errors below are loud and specific.
"""


class NonExactDivision(ArithmeticError):
    """A polynomial or coefficient-wise division left a remainder."""


class NonIntegral(ArithmeticError):
    """A class sum that must be an integer multiple of n! was not."""


class LimitExceeded(ValueError):
    """A table was requested above its configured size cap."""
