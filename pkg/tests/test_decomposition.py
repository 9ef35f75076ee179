import numpy as np
import pytest

from causalkit import (
    ConstantSeries,
    CoupledDifferenceParams,
    HistogramConfig,
    MeasureSeries,
    MisalignedWindows,
    RollingConfig,
    SurrogateConfig,
    decompose,
    fallacy,
    linear_fraction,
    nested_correlation,
    nonlinear_fraction,
    pearson,
    rolling_apply,
    simulate,
    surrogate_measure,
    transfer_entropy,
)


def ms(values, ends=None):
    values = np.asarray(values, dtype=float)
    if ends is None:
        ends = np.arange(values.size) * 10 + 9
    return MeasureSeries(values, ends)


class TestNestedCorrelation:
    def test_identity(self):
        a = ms(np.random.default_rng(0).standard_normal(30))
        assert nested_correlation(a, a) == 1.0

    def test_negation(self):
        a = ms(np.random.default_rng(1).standard_normal(30))
        b = MeasureSeries(-a.values, a.window_ends)
        assert nested_correlation(a, b) == pytest.approx(-1.0, abs=1e-14)

    def test_misaligned_windows(self):
        a = ms([1.0, 2.0, 3.0])
        b = MeasureSeries([1.0, 2.0, 3.0], [1, 2, 3])
        with pytest.raises(MisalignedWindows):
            nested_correlation(a, b)

    def test_constant_series(self):
        with pytest.raises(ConstantSeries):
            nested_correlation(ms([1.0, 1.0, 1.0]), ms([1.0, 2.0, 3.0]))


class TestFractions:
    def test_identical_gives_full_linear(self):
        a = ms(np.random.default_rng(2).standard_normal(40))
        assert linear_fraction(a, a) == 1.0
        assert nonlinear_fraction(a, a) == 0.0

    def test_affine_transform_gives_full_linear(self):
        a = ms(np.random.default_rng(3).standard_normal(40))
        b = MeasureSeries(2.5 * a.values - 0.3, a.window_ends)
        assert linear_fraction(a, b) == pytest.approx(1.0, abs=1e-12)

    def test_independent_vectors(self):
        rng = np.random.default_rng(4)
        a = ms(rng.standard_normal(500))
        b = MeasureSeries(rng.standard_normal(500), a.window_ends)
        lf = linear_fraction(a, b)
        assert lf < 0.02
        assert nonlinear_fraction(a, b) > 0.98

    def test_fractions_sum_to_one_exactly(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            a = ms(rng.standard_normal(25))
            b = MeasureSeries(rng.standard_normal(25), a.window_ends)
            assert linear_fraction(a, b) + nonlinear_fraction(a, b) == 1.0

    def test_positive_affine_invariance(self):
        rng = np.random.default_rng(6)
        a = ms(rng.standard_normal(60))
        b = MeasureSeries(rng.standard_normal(60), a.window_ends)
        base = linear_fraction(a, b)
        scaled = MeasureSeries(4.0 * a.values + 2.0, a.window_ends)
        assert linear_fraction(scaled, b) == pytest.approx(base, abs=1e-12)


class TestFallacy:
    def test_identity(self):
        a = ms(np.random.default_rng(7).standard_normal(30))
        assert fallacy(a, a) == 1.0

    def test_independent_near_zero(self):
        rng = np.random.default_rng(8)
        a = ms(rng.standard_normal(500))
        b = MeasureSeries(rng.standard_normal(500), a.window_ends)
        assert fallacy(a, b) < 0.02

    def test_symmetric(self):
        rng = np.random.default_rng(9)
        a = ms(rng.standard_normal(50))
        b = MeasureSeries(rng.standard_normal(50), a.window_ends)
        assert fallacy(a, b) == fallacy(b, a)

    def test_always_in_unit_interval(self):
        rng = np.random.default_rng(10)
        for _ in range(20):
            a = ms(rng.standard_normal(20))
            b = MeasureSeries(rng.standard_normal(20), a.window_ends)
            assert 0.0 <= fallacy(a, b) <= 1.0


class TestReport:
    def test_builder_identities(self):
        rng = np.random.default_rng(11)
        psi = ms(rng.standard_normal(40))
        surr = MeasureSeries(psi.values * 0.5 + rng.standard_normal(40) * 0.2, psi.window_ends)
        rho = MeasureSeries(rng.standard_normal(40), psi.window_ends)
        report = decompose("te", ("A", "B"), psi, surr, rho)
        assert report.linear_fraction + report.nonlinear_fraction == 1.0
        assert 0.0 <= report.fallacy <= 1.0
        assert 0.0 <= report.fallacy_linear <= 1.0
        assert report.measure_name == "te"
        assert report.pair == ("A", "B")

    def test_field_validation(self):
        from causalkit import DecompositionReport

        with pytest.raises(ValueError):
            DecompositionReport("te", ("A", "B"), 1.2, -0.2, 0.5, 0.5)


class TestPipeline:
    def test_rolling_te_against_surrogate_te(self):
        # nested correlation of rolling TE and rolling surrogate TE lies in (-1, 1)
        xs, ys = simulate(CoupledDifferenceParams(), 2000)
        cfg = RollingConfig(window_len=500, stride=100)
        bins = HistogramConfig(bins_per_dim=8)
        te = lambda a, b: transfer_entropy(a, b, bins)
        psi = rolling_apply((xs, ys), cfg, te)
        surr = rolling_apply(
            (xs, ys),
            cfg,
            lambda a, b: surrogate_measure(te, a, b, SurrogateConfig(realizations=10, seed=4)),
        )
        value = nested_correlation(psi, surr)
        assert -1.0 < value < 1.0
        report = decompose(
            "te",
            ("x", "y"),
            psi,
            surr,
            rolling_apply((xs, ys), cfg, pearson),
        )
        assert 0.0 <= report.fallacy <= 1.0
