"""Convergence certificates and extrapolation reports.

The nested-root form of depth k is algebraically a generalised nested
radical, so a classical boundedness criterion applies: rewrite the form as
a radical with depth-dependent root exponents and check that the rescaled
inner terms stay below a finite cap.  ``herschfeld_terms`` computes that
certificate for one approximant; ``sequence_report`` tabulates amplitude
estimates across depths against a known limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .approximant import (
    ContinuedRootApproximant,
    ExponentTarget,
    finite_order_exponent,
)
from .errors import ContinuedRootError, RealnessError


def nested_radical_exponent(power: float, depth: int) -> float:
    """Root-exponent growth factor at a given depth of the radical rewrite.

    For depth n this is (1 - s**(n-1)) / ((1 - s) * s**(n-1)); the products
    gamma_n * s**n that enter the boundedness terms then telescope to
    (s - s**n) / (1 - s).
    """
    if depth < 1:
        raise ValueError(f"depth must be at least 1, got {depth}")
    if power == 0.0 or power == 1.0:
        raise ValueError(
            f"radical exponents are undefined for power {power!r}"
        )
    return (1.0 - power ** (depth - 1)) / ((1.0 - power) * power ** (depth - 1))


@dataclass(frozen=True)
class ConvergenceDiagnostics:
    """Boundedness certificate for one approximant on [0, variable_bound].

    ``bound_terms[i]`` is the rescaled contribution of depth i + 2; the
    infinite-depth construction converges when such terms stay bounded,
    and for |s| < 1 they approach ``bound_limit`` = (L*M)**(s/(1-s)).
    The certificate covers the depths actually present; the analytic limit
    covers the tail.
    """

    power: float
    variable_bound: float
    param_bound: float
    radical_exponents: tuple[float, ...]
    bound_terms: tuple[float, ...]
    bound_limit: float
    power_valid: bool

    @property
    def bounded(self) -> bool:
        """True when every computed term is finite and capped.

        The cap is the larger of the analytic limit and the first term,
        which covers both the growing (L*M > 1) and shrinking (L*M < 1)
        regimes.
        """
        if not self.power_valid:
            return False
        cap = max(self.bound_limit, *self.bound_terms) if self.bound_terms else self.bound_limit
        return all(t <= cap * (1.0 + 1e-12) for t in self.bound_terms)


def herschfeld_terms(
    approximant: ContinuedRootApproximant, variable_bound: float
) -> ConvergenceDiagnostics:
    """Boundedness certificate for an approximant on [0, variable_bound].

    With L = variable_bound and M the largest parameter, the term at depth
    n is (L*M)**(gamma_n * s**n), n = 2..k.  All parameters must be
    strictly positive and |s| must be below 1 for the criterion to apply.
    """
    s = approximant.power
    if not abs(s) < 1.0:
        raise ValueError(
            f"the boundedness criterion requires |power| < 1, got {s!r}"
        )
    if s == 0.0:
        raise ValueError("the boundedness criterion is undefined for power 0")
    if not variable_bound > 0.0:
        raise ValueError(
            f"variable bound must be positive, got {variable_bound!r}"
        )
    for n, a in enumerate(approximant.params, start=1):
        if a <= 0.0:
            raise RealnessError(
                f"the certificate requires strictly positive parameters; "
                f"parameter {n} is {a!r}"
            )
    m = max(approximant.params)
    lm = variable_bound * m
    exponents = tuple(
        nested_radical_exponent(s, n) for n in range(2, approximant.order + 1)
    )
    terms = tuple(
        lm ** (g * s**n) for g, n in zip(exponents, range(2, approximant.order + 1))
    )
    return ConvergenceDiagnostics(
        power=s,
        variable_bound=variable_bound,
        param_bound=m,
        radical_exponents=exponents,
        bound_terms=terms,
        bound_limit=lm ** (s / (1.0 - s)),
        power_valid=abs(s) < 1.0,
    )


@dataclass(frozen=True)
class ReportRow:
    """One depth of an extrapolation table.

    A row that could not be computed (for example because a parameter went
    negative) carries the failure message in ``error`` and None in the
    affected numeric fields; such rows are informative, not fatal.
    """

    order: int
    amplitude: float | None
    exponent: float | None
    observable: float | None
    percent_error: float | None
    error: str | None = None

    @property
    def failed(self) -> bool:
        return self.error is not None


@dataclass(frozen=True)
class ExtrapolationReport:
    """Amplitude estimates across depths, with errors against a known limit."""

    rows: tuple[ReportRow, ...]
    target: ExponentTarget
    observable_prefactor: float
    match_point: float

    @property
    def any_failed(self) -> bool:
        return any(row.failed for row in self.rows)

    @property
    def known_observable(self) -> float | None:
        """Observable implied by the known amplitude, if one was given."""
        if self.target.amplitude is None:
            return None
        return self.observable_prefactor * self.target.amplitude


def sequence_report(
    approximants: Sequence[ContinuedRootApproximant],
    target: ExponentTarget,
    observable_prefactor: float = 1.0,
    match_point: float = 1.0,
) -> ExtrapolationReport:
    """Tabulate amplitude estimates for a sequence of increasing depths.

    For each approximant the observable is prefactor * B_k adjusted to the
    target exponent at ``match_point`` (a match point of 1 leaves B_k as
    is), and the percent error compares the amplitude estimate against the
    target amplitude when that is known.  Approximants that cannot produce
    a real amplitude yield failed rows rather than aborting the report.

    Raises ValueError when depths are not strictly increasing or the
    prefactor is not positive.
    """
    if not observable_prefactor > 0.0:
        raise ValueError(
            f"observable prefactor must be positive, got {observable_prefactor!r}"
        )
    if not match_point > 0.0:
        raise ValueError(f"match point must be positive, got {match_point!r}")
    orders = [a.order for a in approximants]
    if any(b <= a for a, b in zip(orders, orders[1:])):
        raise ValueError(f"depths must be strictly increasing, got {orders}")
    rows = []
    for approx in approximants:
        try:
            estimate = approx.amplitude_estimate(target.exponent, match_point)
            result = approx.amplitude()
        except ContinuedRootError as err:
            # The exponent depends only on power and depth, so report it
            # even when the amplitude is not real.
            rows.append(
                ReportRow(
                    order=approx.order,
                    amplitude=None,
                    exponent=finite_order_exponent(approx.power, approx.order),
                    observable=None,
                    percent_error=None,
                    error=str(err),
                )
            )
            continue
        percent = None
        if target.amplitude is not None:
            percent = (estimate - target.amplitude) / target.amplitude * 100.0
        rows.append(
            ReportRow(
                order=approx.order,
                amplitude=result.amplitude,
                exponent=result.exponent,
                observable=observable_prefactor * estimate,
                percent_error=percent,
            )
        )
    return ExtrapolationReport(
        rows=tuple(rows),
        target=target,
        observable_prefactor=observable_prefactor,
        match_point=match_point,
    )
