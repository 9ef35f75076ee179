"""Phase-randomized surrogates that keep the power spectrum, drop nonlinearity.

A surrogate replaces a series with one that has the identical amplitude
spectrum but randomized Fourier phases, which preserves all linear
(second-order) structure while destroying higher-order dependence.  The DC
coefficient stays untouched and, for even lengths, so does the Nyquist
coefficient, which keeps the inverse transform exactly real and pins the
sample mean.

Two phase operations are provided:

* :func:`apply_phases` *sets* the free coefficients' phases to given values
  (identity when handed the series' own phases).
* :func:`surrogate_pair` *rotates* both series' free coefficients by the same
  phase vector, leaving every cross-spectral phase difference - and hence the
  Pearson correlation of the pair - untouched.

Randomness comes from numpy's seedable, platform-independent PCG64 generator;
:func:`surrogate_measure` pre-draws its phase stream realization-major (then
frequency index) so results depend only on ``(seed, realizations)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import CausalKitError, LengthMismatch, TooShort
from .timeseries import TimeSeries

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class SurrogateConfig:
    """Number of surrogate realizations and the generator seed."""

    realizations: int = 50
    seed: int = 0

    def __post_init__(self):
        if int(self.realizations) != self.realizations or self.realizations < 1:
            raise ValueError(f"realizations must be a positive integer, got {self.realizations}")
        if int(self.seed) != self.seed or not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")


@dataclass(frozen=True)
class PhaseVector:
    """Phases in [0, 2*pi), one per freely randomizable Fourier coefficient."""

    phases: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.phases, dtype=float)
        if arr.ndim != 1:
            raise ValueError(f"phases must be one-dimensional, got shape {arr.shape}")
        if arr.size and (arr.min() < 0.0 or arr.max() >= TWO_PI):
            raise ValueError("phases must lie in [0, 2*pi)")
        if arr.flags.writeable:
            arr = arr.copy()
            arr.flags.writeable = False
        object.__setattr__(self, "phases", arr)

    def __len__(self) -> int:
        return self.phases.size


def free_phase_count(n: int) -> int:
    """Freely randomizable coefficients for length ``n``: excludes DC and Nyquist."""
    if n < 2:
        raise TooShort(f"series length must be >= 2, got {n}")
    return n // 2 - 1 if n % 2 == 0 else (n - 1) // 2


def draw_phases(n: int, rng: np.random.Generator) -> PhaseVector:
    """Draw i.i.d. uniform [0, 2*pi) phases for a series of length ``n``.

    Advances ``rng`` deterministically; a fixed seed reproduces the vector.
    """
    return PhaseVector(rng.uniform(0.0, TWO_PI, free_phase_count(n)))


def _check_phases(series: TimeSeries, phases: PhaseVector) -> int:
    m = free_phase_count(len(series))
    if len(phases) != m:
        raise LengthMismatch(
            f"series of length {len(series)} has {m} free phases, got {len(phases)}"
        )
    return m


def apply_phases(series: TimeSeries, phases: PhaseVector) -> TimeSeries:
    """Rebuild the series with its free coefficients' phases set to ``phases``.

    Amplitudes are preserved exactly; DC and (for even lengths) Nyquist stay
    as in the input, so the output is real with the original mean.
    """
    m = _check_phases(series, phases)
    spectrum = np.fft.rfft(series.values)
    spectrum[1 : m + 1] = np.abs(spectrum[1 : m + 1]) * np.exp(1j * phases.phases)
    return TimeSeries(np.fft.irfft(spectrum, n=len(series)), label=series.label)


def surrogate_pair(
    x: TimeSeries, y: TimeSeries, phases: PhaseVector
) -> tuple[TimeSeries, TimeSeries]:
    """Apply one shared phase rotation to both series of a pair.

    Rotating both spectra by the same phases preserves every pairwise phase
    difference, so the Pearson correlation of the pair survives to floating
    point accuracy while each series' own nonlinear structure is destroyed.
    """
    if len(x) != len(y):
        raise LengthMismatch(f"series lengths differ: {len(x)} vs {len(y)}")
    m = _check_phases(x, phases)
    rotation = np.exp(1j * phases.phases)
    out = []
    for series in (x, y):
        spectrum = np.fft.rfft(series.values)
        spectrum[1 : m + 1] *= rotation
        out.append(TimeSeries(np.fft.irfft(spectrum, n=len(series)), label=series.label))
    return out[0], out[1]


def surrogate_measure(
    measure: Callable[[TimeSeries, TimeSeries], float],
    x: TimeSeries,
    y: TimeSeries,
    cfg: SurrogateConfig = SurrogateConfig(),
) -> float:
    """Average a bivariate measure over shared-phase surrogates of a pair.

    Draws ``cfg.realizations`` independent phase vectors from
    ``PCG64(cfg.seed)`` (realization-major order), applies each to both
    series, and returns the mean measure value.  Measure errors propagate
    with the realization index prepended.
    """
    if len(x) != len(y):
        raise LengthMismatch(f"series lengths differ: {len(x)} vs {len(y)}")
    rng = np.random.default_rng(cfg.seed)
    m = free_phase_count(len(x))
    stream = rng.uniform(0.0, TWO_PI, size=(cfg.realizations, m))
    total = 0.0
    for k in range(cfg.realizations):
        sx, sy = surrogate_pair(x, y, PhaseVector(stream[k]))
        try:
            total += float(measure(sx, sy))
        except CausalKitError as exc:
            raise type(exc)(f"surrogate realization {k}: {exc}") from exc
    return total / cfg.realizations
