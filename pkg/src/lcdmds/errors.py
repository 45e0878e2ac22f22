"""Exception types shared across the package.

The hierarchy is organized by how callers handle a failure, not by where it
occurs: bad parameters and unmet construction hypotheses are ParameterError,
mixing values from different fields is FieldMismatch, and so on. Division by
zero raises the builtin ZeroDivisionError.
"""


class LcdMdsError(Exception):
    """Base class for all package errors."""


class ParameterError(LcdMdsError, ValueError):
    """Invalid argument or unmet construction hypothesis.

    The message names the violated condition (e.g. "4 is not prime",
    "requires n + k >= q + 1").
    """


class FieldMismatch(LcdMdsError, ValueError):
    """Values from two different finite fields were combined."""


class BudgetExceeded(LcdMdsError, RuntimeError):
    """An exhaustive check would exceed its work budget."""


class NoConstructionApplies(LcdMdsError):
    """None of the five covered parameter families matches (n, k).

    This means the package provides no construction for the parameters, not
    that no LCD MDS code with these parameters exists.
    """


class TheoremViolation(LcdMdsError, RuntimeError):
    """A constructed code failed LCD or MDS verification.

    Every construction is proven to produce LCD MDS codes, so this always
    indicates an implementation bug and is never silently ignored.
    """
