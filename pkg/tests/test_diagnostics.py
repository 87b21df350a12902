"""Boundedness certificates and extrapolation reports."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from continued_roots import (
    ContinuedRootApproximant,
    ConvergenceDiagnostics,
    ExponentTarget,
    RealnessError,
    TruncatedSeries,
    exponent_to_power,
    fit_sequence,
    herschfeld_terms,
    nested_radical_exponent,
    problem,
    sequence_report,
)

contracting_powers = st.one_of(
    st.floats(min_value=0.05, max_value=0.95),
    st.floats(min_value=-0.95, max_value=-0.05),
)


class TestRadicalExponents:
    def test_first_depth_is_zero(self):
        assert nested_radical_exponent(0.5, 1) == 0.0

    def test_half_power_sequence(self):
        # gamma_n * s**n for s = 1/2 runs 0, 1/2, 3/4, 7/8, ...
        s = 0.5
        products = [
            nested_radical_exponent(s, n) * s**n for n in range(1, 5)
        ]
        assert products == pytest.approx([0.0, 0.5, 0.75, 0.875], abs=1e-15)

    @given(
        contracting_powers,
        st.integers(min_value=1, max_value=20),
    )
    def test_product_telescopes(self, s, n):
        product = nested_radical_exponent(s, n) * s**n
        telescoped = (s - s**n) / (1.0 - s)
        assert product == pytest.approx(telescoped, rel=1e-12, abs=1e-12)

    def test_domain(self):
        with pytest.raises(ValueError, match="depth"):
            nested_radical_exponent(0.5, 0)
        with pytest.raises(ValueError, match="undefined"):
            nested_radical_exponent(0.0, 2)
        with pytest.raises(ValueError, match="undefined"):
            nested_radical_exponent(1.0, 2)


class TestHerschfeldTerms:
    def test_string_benchmark_certificate(self):
        # frozen reference: depth-8 fit of the string expansion, interval
        # bound 100; every term sits below the analytic cap 1406.25
        wall = problem("fluid_string")
        series = TruncatedSeries(tuple(wall.coefficients(8)))
        approximants = fit_sequence(
            series, exponent_to_power(wall.target_exponent), [8]
        )
        diag = herschfeld_terms(approximants[0], 100.0)
        assert diag.param_bound == pytest.approx(0.375, rel=1e-13)
        assert diag.bound_limit == pytest.approx(1406.25, rel=1e-12)
        assert diag.bound_terms[0] == pytest.approx(11.2035, abs=1e-4)
        assert diag.bound_terms[-1] == pytest.approx(920.055, abs=1e-3)
        assert len(diag.bound_terms) == 7
        assert diag.power_valid
        assert diag.bounded

    def test_unit_parameters_unit_interval(self):
        approx = ContinuedRootApproximant(0.5, (1.0, 1.0, 1.0, 1.0))
        diag = herschfeld_terms(approx, 1.0)
        assert diag.bound_limit == 1.0
        assert all(t == pytest.approx(1.0, abs=1e-15) for t in diag.bound_terms)

    def test_terms_grow_toward_limit(self):
        approx = ContinuedRootApproximant(2.0 / 3.0, (0.5, 0.5, 0.5, 0.5, 0.5))
        diag = herschfeld_terms(approx, 10.0)
        assert list(diag.bound_terms) == sorted(diag.bound_terms)
        assert diag.bound_terms[-1] < diag.bound_limit

    @given(
        st.floats(min_value=0.05, max_value=0.95),
        st.lists(
            st.floats(min_value=0.1, max_value=3.0), min_size=2, max_size=8
        ),
        st.floats(min_value=1.5, max_value=1e4),
    )
    def test_growing_regime_is_monotone(self, s, params, scale):
        # whenever L * max(A) > 1 and 0 < s < 1, the certificate terms
        # increase with depth and stay below the analytic limit
        variable_bound = scale / max(params)
        approx = ContinuedRootApproximant(s, tuple(params))
        diag = herschfeld_terms(approx, variable_bound)
        terms = list(diag.bound_terms)
        for earlier, later in zip(terms, terms[1:]):
            assert later >= earlier * (1.0 - 1e-12)
        assert diag.bounded

    def test_shrinking_regime_stays_capped(self):
        # L*M < 1 makes the terms decrease toward the limit instead
        approx = ContinuedRootApproximant(0.5, (0.2, 0.2, 0.2, 0.2))
        diag = herschfeld_terms(approx, 1.0)
        assert list(diag.bound_terms) == sorted(diag.bound_terms, reverse=True)
        assert diag.bounded

    def test_exponent_count_matches_depth(self):
        approx = ContinuedRootApproximant(0.5, (1.0, 0.5, 0.25))
        diag = herschfeld_terms(approx, 2.0)
        assert len(diag.radical_exponents) == 2
        assert len(diag.bound_terms) == 2

    def test_depth_one_has_no_terms(self):
        diag = herschfeld_terms(ContinuedRootApproximant(0.5, (1.0,)), 2.0)
        assert diag.bound_terms == ()
        assert diag.bounded

    def test_non_contracting_power_rejected(self):
        with pytest.raises(ValueError, match="1"):
            herschfeld_terms(ContinuedRootApproximant(-1.0, (1.0, 1.0)), 2.0)

    def test_non_positive_param_rejected(self):
        with pytest.raises(RealnessError, match="parameter 2"):
            herschfeld_terms(ContinuedRootApproximant(0.5, (1.0, -1.0)), 2.0)

    def test_variable_bound_domain(self):
        with pytest.raises(ValueError, match="positive"):
            herschfeld_terms(ContinuedRootApproximant(0.5, (1.0,)), 0.0)

    def test_invalid_power_flag_blocks_bounded(self):
        diag = ConvergenceDiagnostics(
            power=1.5,
            variable_bound=1.0,
            param_bound=1.0,
            radical_exponents=(),
            bound_terms=(),
            bound_limit=float("inf"),
            power_valid=False,
        )
        assert not diag.bounded


class TestSequenceReport:
    def fits(self, kmax=5):
        modes = problem("nls_coherent_modes")
        series = TruncatedSeries(tuple(modes.coefficients(kmax)))
        power = exponent_to_power(modes.target_exponent)
        return fit_sequence(series, power, range(2, kmax + 1)), modes

    def test_rows_carry_full_power_law(self):
        fits, modes = self.fits()
        target = ExponentTarget(modes.target_exponent, modes.known_amplitude)
        report = sequence_report(fits, target)
        assert [row.order for row in report.rows] == [2, 3, 4, 5]
        first = report.rows[0]
        assert first.amplitude == pytest.approx(1.549484, abs=1e-5)
        assert first.exponent == pytest.approx(
            (0.4 - 0.4**3) / 0.6, rel=1e-13
        )
        assert first.observable == pytest.approx(first.amplitude, rel=1e-15)
        assert first.percent_error == pytest.approx(3.3, abs=0.05)
        assert not report.any_failed

    def test_percent_error_absent_without_baseline(self):
        fits, modes = self.fits()
        report = sequence_report(fits, ExponentTarget(modes.target_exponent))
        assert all(row.percent_error is None for row in report.rows)
        assert report.known_observable is None

    def test_prefactor_scales_observable(self):
        fits, modes = self.fits()
        target = ExponentTarget(modes.target_exponent, modes.known_amplitude)
        plain = sequence_report(fits, target)
        scaled = sequence_report(fits, target, observable_prefactor=2.0)
        for a, b in zip(plain.rows, scaled.rows):
            assert b.observable == pytest.approx(2.0 * a.observable, rel=1e-15)
            # the error is an amplitude-level comparison, untouched by the
            # prefactor
            assert b.percent_error == pytest.approx(a.percent_error, rel=1e-15)

    def test_match_point_converts_power_law(self):
        fits, modes = self.fits()
        target = ExponentTarget(modes.target_exponent, modes.known_amplitude)
        point = 7.0
        report = sequence_report(fits, target, match_point=point)
        for fit_k, row in zip(fits, report.rows):
            law = fit_k.amplitude()
            expected = law.amplitude * point ** (
                law.exponent - modes.target_exponent
            )
            assert row.observable == pytest.approx(expected, rel=1e-13)

    def test_failed_row_is_marked_not_fatal(self):
        fits, modes = self.fits()
        target = ExponentTarget(modes.target_exponent, modes.known_amplitude)
        broken = ContinuedRootApproximant(fits[0].power, (1.0,) * 6 + (-0.5,))
        report = sequence_report(list(fits) + [broken], target)
        assert report.any_failed
        bad = report.rows[-1]
        assert bad.failed
        assert bad.amplitude is None
        assert bad.observable is None
        assert bad.percent_error is None
        assert bad.exponent is not None
        assert "parameter 7" in bad.error
        for row in report.rows[:-1]:
            assert not row.failed

    def test_orders_must_increase(self):
        fits, modes = self.fits()
        target = ExponentTarget(modes.target_exponent)
        with pytest.raises(ValueError, match="increasing"):
            sequence_report([fits[1], fits[0]], target)

    def test_prefactor_domain(self):
        fits, modes = self.fits()
        target = ExponentTarget(modes.target_exponent)
        with pytest.raises(ValueError, match="positive"):
            sequence_report(fits, target, observable_prefactor=0.0)

    def test_match_point_domain(self):
        fits, modes = self.fits()
        target = ExponentTarget(modes.target_exponent)
        with pytest.raises(ValueError, match="positive"):
            sequence_report(fits, target, match_point=-1.0)

    def test_known_observable(self):
        fits, modes = self.fits()
        target = ExponentTarget(2.0, 0.0625)
        report = sequence_report(fits, target, observable_prefactor=math.pi**2 / 8)
        assert report.known_observable == pytest.approx(
            math.pi**2 / 128, rel=1e-15
        )
