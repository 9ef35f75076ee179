"""Nested measures over rolling measure vectors.

Once a measure is evaluated per rolling window it becomes a vector, and
vectors of different measures on the same window grid can be correlated with
each other.  Squaring the correlation between a measure and its surrogate
counterpart splits the measure's variability into a linear fraction
(explained by the surrogate, which carries only linear structure) and its
complement, the nonlinear fraction.  Correlating a causality measure with the
rolling Pearson correlation quantifies how much of the causality a plain
correlation would capture - the correlation-causality fallacy.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import MisalignedWindows
from .measures import _pearson_arrays
from .timeseries import MeasureSeries

__all__ = [
    "DecompositionReport",
    "nested_correlation",
    "linear_fraction",
    "nonlinear_fraction",
    "fallacy",
    "decompose",
]


@dataclass(frozen=True)
class DecompositionReport:
    """Linear/nonlinear split and fallacy values for one measure on one pair.

    ``linear_fraction + nonlinear_fraction == 1`` exactly; all four
    quantities lie in [0, 1].
    """

    measure_name: str
    pair: tuple[str, str]
    linear_fraction: float
    nonlinear_fraction: float
    fallacy: float
    fallacy_linear: float

    def __post_init__(self):
        for name in ("linear_fraction", "nonlinear_fraction", "fallacy", "fallacy_linear"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {v}")
        if self.linear_fraction + self.nonlinear_fraction != 1.0:
            raise ValueError("linear_fraction and nonlinear_fraction must sum to 1")


def _check_aligned(a: MeasureSeries, b: MeasureSeries):
    if len(a) != len(b) or not np.array_equal(a.window_ends, b.window_ends):
        raise MisalignedWindows(
            "measure series were computed on different window grids"
        )


def nested_correlation(a: MeasureSeries, b: MeasureSeries) -> float:
    """Pearson correlation between two aligned measure vectors.

    Raises:
        MisalignedWindows: the window grids differ.
        ConstantSeries: either vector has zero variance.
    """
    _check_aligned(a, b)
    return _pearson_arrays(a.values, b.values)


def linear_fraction(psi: MeasureSeries, psi_surrogate: MeasureSeries) -> float:
    """Share of the measure's variability explained by its surrogate: rho^2."""
    return nested_correlation(psi, psi_surrogate) ** 2


def nonlinear_fraction(psi: MeasureSeries, psi_surrogate: MeasureSeries) -> float:
    """Complement of :func:`linear_fraction`: ``1 - rho^2``."""
    return 1.0 - linear_fraction(psi, psi_surrogate)


def fallacy(psi: MeasureSeries, rho: MeasureSeries) -> float:
    """How much of a causality vector a correlation vector explains: rho^2."""
    return nested_correlation(psi, rho) ** 2


def decompose(
    measure_name: str,
    pair: tuple[str, str],
    psi: MeasureSeries,
    psi_surrogate: MeasureSeries,
    rho: MeasureSeries,
) -> DecompositionReport:
    """Build the full report for one measure vector, its surrogate, and the
    rolling correlation on the same window grid."""
    lf = linear_fraction(psi, psi_surrogate)
    return DecompositionReport(
        measure_name=measure_name,
        pair=pair,
        linear_fraction=lf,
        nonlinear_fraction=1.0 - lf,
        fallacy=fallacy(psi, rho),
        fallacy_linear=fallacy(psi_surrogate, rho),
    )
