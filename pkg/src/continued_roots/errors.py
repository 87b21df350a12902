"""Exception types raised by fitting, evaluation, and reporting.

Each class carries a stable ``kind`` string used by the CLI when it emits
machine-readable error objects.
"""

from __future__ import annotations


class ContinuedRootError(Exception):
    """Base class for failures specific to continued-root arithmetic."""

    kind = "error"


class DegenerateSeriesError(ContinuedRootError):
    """The linear coefficient is zero, so the parameter chain has no anchor."""

    kind = "degenerate-input"


class VanishingSensitivityError(ContinuedRootError):
    """A Taylor coefficient stopped responding to its parameter.

    Happens when an earlier parameter fitted to exactly zero cuts the chain:
    the affine equation for the named order has (numerically) zero slope.
    """

    kind = "vanishing-sensitivity"

    def __init__(self, order: int, slope: float):
        self.order = order
        self.slope = slope
        super().__init__(
            f"coefficient of x^{order} is insensitive to parameter {order} "
            f"(affine slope {slope:.3e}); cannot solve for it"
        )


class ComplexBreakdownError(ContinuedRootError):
    """A bracket base went negative under a non-integer power."""

    kind = "complex-breakdown"

    def __init__(self, depth: int, x: float):
        self.depth = depth
        self.x = x
        super().__init__(
            f"bracket at depth {depth} has a non-positive base at x = {x:g}; "
            "the value is not real"
        )


class RealnessError(ContinuedRootError):
    """An operation requiring positive parameters met a non-positive one."""

    kind = "realness"


class NoRealApproximantError(ContinuedRootError):
    """No member of a sequence has all-non-negative parameters."""

    kind = "no-real-approximant"


class UnknownProblemError(ContinuedRootError):
    """Requested benchmark problem does not exist."""

    kind = "not-found"

    def __init__(self, name: str, valid: tuple[str, ...]):
        self.name = name
        self.valid = valid
        super().__init__(
            f"unknown problem {name!r}; valid names: {', '.join(valid)}"
        )
