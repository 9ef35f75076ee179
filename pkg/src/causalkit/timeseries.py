"""Core containers and preprocessing: returns, rolling windows, rolling measures.

A :class:`TimeSeries` is an immutable 1-D array of finite reals.  Rolling
evaluation of a bivariate measure turns a pair of series into a
:class:`MeasureSeries`: one value per overlapping window, each tagged with the
0-based index of the last sample the window covers.  Window positions follow
the usual sliding scheme: window ``w`` (0-based) covers samples
``[w * stride, w * stride + window_len - 1]`` and the number of windows is
``floor((len - window_len) / stride) + 1``.

All containers are immutable after construction and safe to share across
threads.  ``rolling_apply`` evaluates windows sequentially and emits results
in window order, so results are deterministic for any deterministic measure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import (
    CausalKitError,
    LengthMismatch,
    NonPositivePrice,
    TooShort,
    WindowTooLarge,
)


def _freeze_1d(values, name: str = "values") -> np.ndarray:
    """Return a read-only float64 1-D array, copying only when needed."""
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise TooShort(f"{name} must contain at least one sample")
    if not np.all(np.isfinite(arr)):
        bad = int(np.flatnonzero(~np.isfinite(arr))[0])
        raise ValueError(f"{name} must be finite; sample {bad} is {arr[bad]}")
    if arr.flags.writeable:
        # Copy writeable input so later caller mutation cannot leak in.
        # Read-only slices of our own arrays pass through without copying,
        # which keeps rolling windows true views.
        arr = arr.copy()
        arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class TimeSeries:
    """An ordered sequence of finite real samples.

    Args:
        values: 1-D array-like of finite reals (no NaN or infinity).
        label: optional identifier carried through transformations.
    """

    values: np.ndarray
    label: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "values", _freeze_1d(self.values))

    def __len__(self) -> int:
        return self.values.size


@dataclass(frozen=True)
class RollingConfig:
    """Sliding-window layout: ``window_len`` samples per window, ``stride`` apart."""

    window_len: int
    stride: int = 1

    def __post_init__(self):
        if int(self.window_len) != self.window_len or self.window_len < 1:
            raise ValueError(f"window_len must be a positive integer, got {self.window_len}")
        if int(self.stride) != self.stride or self.stride < 1:
            raise ValueError(f"stride must be a positive integer, got {self.stride}")


@dataclass(frozen=True)
class MeasureSeries:
    """A measure evaluated per rolling window.

    ``values[i]`` is the measure on window ``i``; ``window_ends[i]`` is the
    0-based index of that window's last sample in the source series.
    """

    values: np.ndarray
    window_ends: np.ndarray

    def __post_init__(self):
        vals = _freeze_1d(self.values, "values")
        ends = np.asarray(self.window_ends)
        if ends.ndim != 1 or ends.size != vals.size:
            raise ValueError("values and window_ends must have equal length")
        ends = ends.astype(np.int64)
        if ends.size > 1 and not np.all(np.diff(ends) > 0):
            raise ValueError("window_ends must be strictly increasing")
        if ends.flags.writeable:
            ends = ends.copy()
            ends.flags.writeable = False
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "window_ends", ends)

    def __len__(self) -> int:
        return self.values.size


def log_returns(prices: TimeSeries) -> TimeSeries:
    """Convert a price series to one-step logarithmic returns.

    ``out[t] = log(prices[t+1]) - log(prices[t])``, so the output is one
    sample shorter than the input.

    Raises:
        TooShort: fewer than 2 prices.
        NonPositivePrice: any price is zero or negative.
    """
    if len(prices) < 2:
        raise TooShort(f"need at least 2 prices, got {len(prices)}")
    v = prices.values
    if np.any(v <= 0.0):
        bad = int(np.flatnonzero(v <= 0.0)[0])
        raise NonPositivePrice(f"price at index {bad} is {v[bad]}; prices must be > 0")
    return TimeSeries(np.diff(np.log(v)), label=prices.label)


def window_count(length: int, cfg: RollingConfig) -> int:
    """Number of rolling windows: ``floor((length - window_len) / stride) + 1``."""
    if cfg.window_len > length:
        raise WindowTooLarge(
            f"window_len {cfg.window_len} exceeds series length {length}"
        )
    return (length - cfg.window_len) // cfg.stride + 1


def rolling_windows(series: TimeSeries, cfg: RollingConfig) -> list[TimeSeries]:
    """Materialize the overlapping windows of ``series`` as zero-copy views."""
    n_windows = window_count(len(series), cfg)
    out = []
    for w in range(n_windows):
        start = w * cfg.stride
        out.append(TimeSeries(series.values[start : start + cfg.window_len], label=series.label))
    return out


def rolling_apply(
    pair: tuple[TimeSeries, TimeSeries],
    cfg: RollingConfig,
    measure: Callable[[TimeSeries, TimeSeries], float],
) -> MeasureSeries:
    """Evaluate a bivariate measure on every rolling window of a series pair.

    Measure errors propagate with the failing window index and sample range
    prepended to the message.

    Args:
        pair: two series of equal length.
        cfg: window layout shared by both series.
        measure: callable mapping two equal-length series to a real number.

    Returns:
        MeasureSeries with one value per window, in window order.
    """
    x, y = pair
    if len(x) != len(y):
        raise LengthMismatch(f"series lengths differ: {len(x)} vs {len(y)}")
    n_windows = window_count(len(x), cfg)
    values = np.empty(n_windows)
    ends = np.empty(n_windows, dtype=np.int64)
    for w in range(n_windows):
        start = w * cfg.stride
        stop = start + cfg.window_len
        wx = TimeSeries(x.values[start:stop], label=x.label)
        wy = TimeSeries(y.values[start:stop], label=y.label)
        try:
            values[w] = float(measure(wx, wy))
        except CausalKitError as exc:
            raise type(exc)(f"window {w} (samples {start}..{stop - 1}): {exc}") from exc
        ends[w] = stop - 1
    return MeasureSeries(values, ends)
