"""Continued-root approximants: construction, fitting, and asymptotics.

The central object is a nested form with one repeated power s,

    f(x) = (1 + A1 x (1 + A2 x (... (1 + Ak x)**s ...)**s)**s,

whose small-x expansion can match a given Taylor series order by order and
whose large-x behaviour is a clean power law.  Choosing s = beta/(1 + beta)
makes that power law carry a prescribed target exponent beta in the limit
of infinite nesting depth.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ._backend import kernels
from .errors import (
    ComplexBreakdownError,
    DegenerateSeriesError,
    NoRealApproximantError,
    RealnessError,
    VanishingSensitivityError,
)
from .series import TruncatedSeries

# Affine slopes below this (relative to the linear coefficient) are treated
# as exactly zero when solving for a parameter.
SLOPE_TOLERANCE = 1e-13


def exponent_to_power(exponent: float) -> float:
    """Nesting power s that realises a large-argument exponent beta.

    Defined as beta / (1 + beta); requires beta > -1/2 so that |s| < 1 and
    the infinite-depth construction converges.
    """
    if not exponent > -0.5:
        raise ValueError(
            f"target exponent must exceed -1/2, got {exponent!r}"
        )
    return exponent / (1.0 + exponent)


def power_to_exponent(power: float) -> float:
    """Large-argument exponent realised by a nesting power s, s / (1 - s)."""
    if not abs(power) < 1.0:
        raise ValueError(f"nesting power must satisfy |s| < 1, got {power!r}")
    return power / (1.0 - power)


def finite_order_exponent(power: float, order: int) -> float:
    """Exponent of the order-k form: the geometric sum s + s^2 + ... + s^k.

    Evaluated in closed form as (s - s**(k+1)) / (1 - s).  Tends to the
    infinite-depth exponent s / (1 - s) when |s| < 1.
    """
    if order < 1:
        raise ValueError(f"order must be at least 1, got {order}")
    if power == 1.0:
        return float(order)
    return (power - power ** (order + 1)) / (1.0 - power)


@dataclass(frozen=True)
class ExponentTarget:
    """Known large-argument behaviour an extrapolation should reproduce.

    ``exponent`` is the true power of growth; ``amplitude`` is the true
    prefactor of x**exponent when it is known, used as the error baseline.
    """

    exponent: float
    amplitude: float | None = None

    def __post_init__(self):
        if not self.exponent > -0.5:
            raise ValueError(
                f"target exponent must exceed -1/2, got {self.exponent!r}"
            )

    @property
    def power(self) -> float:
        return exponent_to_power(self.exponent)


@dataclass(frozen=True)
class AmplitudeResult:
    """Large-argument power law of one approximant: amplitude * x**exponent."""

    amplitude: float
    exponent: float
    order: int


@dataclass(frozen=True)
class ContinuedRootApproximant:
    """A fitted (or hand-built) nested-root form of fixed depth.

    ``params`` holds A1..Ak from the outermost bracket inward.  The form is
    real-valued on x >= 0 exactly when every parameter is non-negative.
    """

    power: float
    params: tuple[float, ...]

    def __post_init__(self):
        if len(self.params) < 1:
            raise ValueError("an approximant needs at least one parameter")
        object.__setattr__(
            self, "params", tuple(float(a) for a in self.params)
        )
        object.__setattr__(self, "power", float(self.power))

    @property
    def order(self) -> int:
        """Nesting depth k."""
        return len(self.params)

    @property
    def is_real_valued(self) -> bool:
        """True when the form stays real for all x >= 0."""
        return all(a >= 0.0 for a in self.params)

    def expand(self, order: int) -> TruncatedSeries:
        """Small-argument Taylor expansion through the given order.

        The expansion is exact in the formal sense: coefficients beyond the
        nesting depth are the ones induced by the closed form, not zero.
        """
        if order < 0:
            raise ValueError(f"expansion order must be non-negative, got {order}")
        return TruncatedSeries(
            tuple(kernels.nested_expansion(list(self.params), self.power, order))
        )

    def evaluate(self, x: float) -> float:
        """Value of the nested form at x >= 0.

        Raises ComplexBreakdownError, naming the offending depth, if a
        negative parameter drives some bracket base negative under a
        non-integer power.
        """
        if x < 0.0:
            raise ValueError(f"argument must be non-negative, got {x!r}")
        value, depth = kernels.nested_evaluate(
            list(self.params), self.power, float(x), float(self.power).is_integer()
        )
        if depth:
            raise ComplexBreakdownError(depth, x)
        return value

    def amplitude(self) -> AmplitudeResult:
        """Large-argument power law of this form.

        The amplitude is the product of A_n**(s**n) over the depth, and the
        exponent is the finite geometric sum of powers.  All parameters must
        be strictly positive for the fractional powers to be real.
        """
        for n, a in enumerate(self.params, start=1):
            if a <= 0.0:
                raise RealnessError(
                    f"amplitude requires strictly positive parameters; "
                    f"parameter {n} is {a!r}"
                )
        s = self.power
        b = 1.0
        for n, a in enumerate(self.params, start=1):
            b *= a ** (s**n)
        return AmplitudeResult(b, finite_order_exponent(s, self.order), self.order)

    def asymptote(self, x: float) -> float:
        """Value of the large-argument power law at a point x > 0."""
        if not x > 0.0:
            raise ValueError(f"asymptote requires x > 0, got {x!r}")
        result = self.amplitude()
        return result.amplitude * x**result.exponent

    def amplitude_estimate(
        self, target_exponent: float, match_point: float = 1.0
    ) -> float:
        """Estimate of the amplitude of x**target_exponent.

        The finite-depth form grows like B_k * x**beta_k with beta_k short of
        the target; the estimate converts one law into the other by matching
        them at ``match_point``: B_k * match_point**(beta_k - target).  With
        the default match point 1 this is just B_k.
        """
        if not match_point > 0.0:
            raise ValueError(
                f"match point must be positive, got {match_point!r}"
            )
        result = self.amplitude()
        if match_point == 1.0:
            return result.amplitude
        return result.amplitude * match_point ** (result.exponent - target_exponent)

    def to_rational(self) -> tuple[list[float], list[float]]:
        """Collapse the s = -1 form into a ratio of polynomials.

        Returns (numerator, denominator) coefficient lists in ascending
        powers.  Both have constant term 1; the numerator has degree
        floor(k/2) and the denominator ceil(k/2).  Only defined for
        power exactly -1, where every bracket is a reciprocal.
        """
        if self.power != -1.0:
            raise ValueError(
                f"rational reduction requires power -1, got {self.power!r}"
            )
        # Track the innermost-so-far bracket value as p(x)/q(x); wrapping
        # with parameter a maps it to (p + a x q)/p, and the final outer
        # reciprocal swaps the pair.
        p = [1.0, self.params[-1]]
        q = [1.0]
        for a in reversed(self.params[:-1]):
            shifted = [0.0] + [a * c for c in q]
            width = max(len(p), len(shifted))
            merged = [0.0] * width
            for i, c in enumerate(p):
                merged[i] += c
            for i, c in enumerate(shifted):
                merged[i] += c
            p, q = merged, p
        return q, p


def fit(series: TruncatedSeries, power: float) -> ContinuedRootApproximant:
    """Fit a nested-root form whose expansion matches the series exactly.

    Matching proceeds order by order: with A1..A(n-1) fixed, the n-th Taylor
    coefficient of the nested form is an affine function of A_n, so each
    step solves one linear equation built from two trial expansions.  The
    resulting depth equals the series order.

    Args:
        series: coefficients c0..cK with c0 = 1 and K >= 1.
        power: the repeated nesting power s, non-zero.

    Raises:
        DegenerateSeriesError: the linear coefficient is zero.
        VanishingSensitivityError: some coefficient no longer responds to
            its parameter (slope below tolerance), typically after an
            earlier parameter fitted to exactly zero.
        ValueError: c0 != 1, K < 1, or power == 0.
    """
    coeffs = series.coeffs
    if coeffs[0] != 1.0:
        raise ValueError(
            f"fit requires a series normalised to constant term 1, got {coeffs[0]!r}"
        )
    if series.order < 1:
        raise ValueError("fit needs at least the linear coefficient")
    if power == 0.0:
        raise ValueError("nesting power must be non-zero")
    if coeffs[1] == 0.0:
        raise DegenerateSeriesError(
            "linear coefficient is zero; the parameter chain has no anchor"
        )
    slope_floor = SLOPE_TOLERANCE * max(1.0, abs(coeffs[1]))
    params: list[float] = []
    for n in range(1, series.order + 1):
        at_zero = kernels.nested_expansion(params + [0.0], power, n)[n]
        at_one = kernels.nested_expansion(params + [1.0], power, n)[n]
        slope = at_one - at_zero
        if abs(slope) < slope_floor:
            raise VanishingSensitivityError(n, slope)
        params.append((coeffs[n] - at_zero) / slope)
    return ContinuedRootApproximant(power, tuple(params))


def fit_sequence(
    series: TruncatedSeries, power: float, orders: Iterable[int]
) -> list[ContinuedRootApproximant]:
    """Fit one approximant per requested depth from truncations of a series."""
    out = []
    for k in orders:
        if k > series.order:
            raise ValueError(
                f"depth {k} exceeds the available series order {series.order}"
            )
        out.append(fit(TruncatedSeries(series.coeffs[: k + 1]), power))
    return out


def best_real_order(
    approximants: Sequence[ContinuedRootApproximant],
) -> ContinuedRootApproximant:
    """Highest-order member that is real-valued on x >= 0.

    Raises NoRealApproximantError when every member has a negative
    parameter.
    """
    if not approximants:
        raise ValueError("no approximants given")
    best = None
    for approx in approximants:
        if approx.is_real_valued and (best is None or approx.order > best.order):
            best = approx
    if best is None:
        raise NoRealApproximantError(
            f"none of the {len(approximants)} approximants is real-valued "
            "on the non-negative half-line"
        )
    return best
