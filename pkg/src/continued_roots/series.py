"""Truncated formal power series with a fixed order.

Every operation returns a series of the same order as its inputs; there is
no implicit order promotion, so coefficients beyond the truncation are
simply unknown rather than zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from ._backend import kernels


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients c0..cK of a power series truncated at order K."""

    coeffs: tuple[float, ...]

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(
            self, "coeffs", tuple(float(c) for c in self.coeffs)
        )

    @classmethod
    def from_coefficients(cls, coefficients: Sequence[float]) -> "TruncatedSeries":
        """Build a series from any sequence of coefficients c0..cK."""
        return cls(tuple(coefficients))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[float]:
        return iter(self.coeffs)

    def __getitem__(self, n: int) -> float:
        return self.coeffs[n]

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Cauchy product, truncated to the common order.

        Both operands must have the same order; mixing orders would silently
        drop information, so it is an error instead.
        """
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if other.order != self.order:
            raise ValueError(
                f"cannot multiply series of different orders "
                f"({self.order} and {other.order})"
            )
        return TruncatedSeries(
            tuple(kernels.cauchy_product(list(self.coeffs), list(other.coeffs)))
        )

    def power(self, exponent: float) -> "TruncatedSeries":
        """Raise the series to a real power.

        The constant term must be exactly 1, which makes the result
        well-defined termwise for any real exponent.
        """
        if self.coeffs[0] != 1.0:
            raise ValueError(
                f"series power requires constant term 1, got {self.coeffs[0]!r}"
            )
        return TruncatedSeries(
            tuple(kernels.fractional_power(list(self.coeffs), float(exponent)))
        )

    def evaluate(self, x: float) -> float:
        """Value of the truncating polynomial at a point (Horner scheme)."""
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc
