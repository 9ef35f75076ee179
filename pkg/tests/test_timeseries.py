import math

import numpy as np
import pytest

from causalkit import (
    LengthMismatch,
    MeasureSeries,
    NonPositivePrice,
    RollingConfig,
    TimeSeries,
    TooShort,
    WindowTooLarge,
    log_returns,
    pearson,
    rolling_apply,
    rolling_windows,
    window_count,
)


class TestTimeSeries:
    def test_rejects_nan(self):
        with pytest.raises(ValueError, match="finite"):
            TimeSeries([1.0, np.nan, 2.0])

    def test_rejects_inf(self):
        with pytest.raises(ValueError, match="finite"):
            TimeSeries([1.0, np.inf])

    def test_rejects_empty(self):
        with pytest.raises(TooShort):
            TimeSeries([])

    def test_values_read_only(self):
        ts = TimeSeries([1.0, 2.0, 3.0])
        with pytest.raises(ValueError):
            ts.values[0] = 9.0

    def test_copies_writeable_input(self):
        arr = np.array([1.0, 2.0, 3.0])
        ts = TimeSeries(arr)
        arr[0] = 99.0
        assert ts.values[0] == 1.0

    def test_label_carried(self):
        assert TimeSeries([1.0, 2.0], label="px").label == "px"


class TestLogReturns:
    def test_constant_price_zero_return(self):
        out = log_returns(TimeSeries([1.0, 1.0, 1.0]))
        assert np.array_equal(out.values, [0.0, 0.0])

    def test_exponential_prices_unit_returns(self):
        out = log_returns(TimeSeries([1.0, math.e, math.e**2]))
        np.testing.assert_allclose(out.values, [1.0, 1.0], atol=1e-15)

    def test_direct_formula(self):
        # independent evaluation of log(p[t+1]) - log(p[t])
        out = log_returns(TimeSeries([100.0, 101.0, 99.5]))
        expected = [math.log(101.0) - math.log(100.0), math.log(99.5) - math.log(101.0)]
        np.testing.assert_allclose(out.values, expected, rtol=1e-15)

    def test_length_shrinks_by_one(self):
        rng = np.random.default_rng(0)
        prices = TimeSeries(np.exp(rng.standard_normal(57).cumsum() / 10))
        assert len(log_returns(prices)) == 56

    def test_non_positive_price(self):
        with pytest.raises(NonPositivePrice, match="index 1"):
            log_returns(TimeSeries([1.0, 0.0, 2.0]))
        with pytest.raises(NonPositivePrice):
            log_returns(TimeSeries([1.0, -3.0]))

    def test_too_short(self):
        with pytest.raises(TooShort):
            log_returns(TimeSeries([1.0]))

    def test_roundtrip_recovers_prices(self):
        rng = np.random.default_rng(3)
        prices = np.exp(rng.standard_normal(300).cumsum() / 20) * 50.0
        returns = log_returns(TimeSeries(prices))
        rebuilt = prices[0] * np.exp(np.cumsum(returns.values))
        np.testing.assert_allclose(rebuilt, prices[1:], rtol=1e-12)


class TestRollingWindows:
    def test_degenerate_single_window(self):
        series = TimeSeries(np.arange(10.0))
        wins = rolling_windows(series, RollingConfig(window_len=10, stride=1))
        assert len(wins) == 1
        assert np.array_equal(wins[0].values, series.values)

    def test_two_windows_enumerated(self):
        series = TimeSeries(np.arange(1.0, 13.0))
        wins = rolling_windows(series, RollingConfig(window_len=10, stride=2))
        assert len(wins) == 2
        assert np.array_equal(wins[0].values, np.arange(1.0, 11.0))
        assert np.array_equal(wins[1].values, np.arange(3.0, 13.0))

    def test_windows_are_views(self):
        series = TimeSeries(np.arange(20.0))
        wins = rolling_windows(series, RollingConfig(window_len=5, stride=5))
        assert wins[0].values.base is series.values

    def test_window_too_large(self):
        with pytest.raises(WindowTooLarge):
            rolling_windows(TimeSeries(np.arange(5.0)), RollingConfig(window_len=6))

    def test_count_matches_floor_formula(self):
        # property: window count equals floor((len - T_w) / stride) + 1
        rng = np.random.default_rng(11)
        for _ in range(1000):
            n = int(rng.integers(2, 2000))
            w = int(rng.integers(1, n + 1))
            s = int(rng.integers(1, 50))
            cfg = RollingConfig(window_len=w, stride=s)
            assert window_count(n, cfg) == (n - w) // s + 1
            assert len(rolling_windows(TimeSeries(np.zeros(n) + 1.0), cfg)) == window_count(n, cfg)

    def test_reported_12784_case(self):
        # 12784 returns at T_w=1000, stride=20: the formula gives 590
        assert window_count(12784, RollingConfig(1000, 20)) == 590

    def test_bad_config(self):
        with pytest.raises(ValueError):
            RollingConfig(window_len=0)
        with pytest.raises(ValueError):
            RollingConfig(window_len=10, stride=0)


class TestMeasureSeries:
    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            MeasureSeries([1.0, 2.0], [1])

    def test_window_ends_strictly_increasing(self):
        with pytest.raises(ValueError):
            MeasureSeries([1.0, 2.0], [5, 5])


class TestRollingApply:
    def test_constant_measure(self):
        x = TimeSeries(np.arange(30.0))
        out = rolling_apply((x, x), RollingConfig(10, 5), lambda a, b: 1.0)
        assert np.array_equal(out.values, np.ones(5))
        assert np.array_equal(out.window_ends, [9, 14, 19, 24, 29])

    def test_pearson_identical_series(self):
        rng = np.random.default_rng(1)
        x = TimeSeries(rng.standard_normal(100))
        out = rolling_apply((x, x), RollingConfig(20, 10), pearson)
        np.testing.assert_allclose(out.values, 1.0, atol=1e-12)

    def test_matches_materialized_windows(self):
        # oracle: applying the measure over explicitly materialized windows
        rng = np.random.default_rng(2)
        x = TimeSeries(rng.standard_normal(200))
        y = TimeSeries(rng.standard_normal(200))
        cfg = RollingConfig(50, 7)
        out = rolling_apply((x, y), cfg, pearson)
        expected = [
            pearson(wx, wy)
            for wx, wy in zip(rolling_windows(x, cfg), rolling_windows(y, cfg))
        ]
        np.testing.assert_array_equal(out.values, expected)

    def test_unequal_lengths_rejected(self):
        with pytest.raises(LengthMismatch):
            rolling_apply(
                (TimeSeries(np.zeros(10) + 1), TimeSeries(np.zeros(11) + 1)),
                RollingConfig(5),
                lambda a, b: 0.0,
            )

    def test_measure_error_annotated_with_window(self):
        x = TimeSeries(np.concatenate([np.arange(10.0), np.zeros(10)]))
        with pytest.raises(Exception, match="window 1"):
            rolling_apply((x, x), RollingConfig(10, 10), pearson)
