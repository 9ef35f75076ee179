"""Uniform dispatch over the co-dependence measure family.

Five measure kinds are understood everywhere a selector is accepted:
``correlation`` (Pearson, undirected), ``te`` (normalized transfer entropy),
``ccm`` (convergent cross mapping), and the surrogate-averaged variants
``surrogate-te`` and ``surrogate-ccm``.

``pearson`` is accepted as an alias for ``correlation``.  Directed kinds
evaluate from the first argument to the second: ``evaluate(kind, a, b)`` is
the a -> b value.

Surrogate kinds need one seed per evaluation.  The engine derives it from its
base seed and the caller-supplied stream coordinates through numpy's
``SeedSequence``, so results are reproducible and independent of evaluation
order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .measures import (
    EmbeddingConfig,
    HistogramConfig,
    ccm,
    default_ccm_config,
    pearson,
    select_kappa,
    select_tau,
    transfer_entropy,
)
from .surrogates import SurrogateConfig, surrogate_measure
from .timeseries import TimeSeries

KINDS = ("correlation", "te", "ccm", "surrogate-te", "surrogate-ccm")
_ALIASES = {"pearson": "correlation", "surrogate-pearson": "surrogate-correlation"}
_DIRECTED_BASES = ("te", "ccm")


def normalize_kind(name: str) -> str:
    """Canonical measure kind for a selector string."""
    kind = _ALIASES.get(name.strip().lower(), name.strip().lower())
    if kind == "surrogate-correlation" or kind in KINDS:
        return kind
    raise ValueError(f"unknown measure kind {name!r}; expected one of {', '.join(KINDS)}")


def split_kind(kind: str) -> tuple[str, bool]:
    """Return (base measure, is_surrogate)."""
    kind = normalize_kind(kind)
    if kind.startswith("surrogate-"):
        return kind[len("surrogate-") :], True
    return kind, False


def is_directed(kind: str) -> bool:
    return split_kind(kind)[0] in _DIRECTED_BASES


def derive_seed(seed: int, stream: tuple[int, ...]) -> int:
    """Deterministic per-evaluation seed from a base seed and stream coordinates."""
    ss = np.random.SeedSequence([int(seed), *[int(v) for v in stream]])
    return int(ss.generate_state(1, np.uint64)[0])


def auto_embedding(
    series: TimeSeries,
    histogram: HistogramConfig = HistogramConfig(),
    max_lag: int = 10,
    max_dim: int = 8,
    fnn_tolerance: float = 10.0,
) -> EmbeddingConfig:
    """Select delay and dimension from the data.

    Delay is the first local minimum of the lagged mutual information;
    dimension is the smallest with under 1% false nearest neighbors.
    """
    tau = select_tau(series, max_lag, histogram)
    kappa = select_kappa(series, tau, max_dim, fnn_tolerance)
    return EmbeddingConfig(kappa=kappa, tau=tau)


@dataclass(frozen=True)
class MeasureEngine:
    """Evaluates any measure kind on a pair of equal-length series.

    ``embedding`` must be set before cross-mapping kinds are evaluated
    (see :func:`auto_embedding`); the library schedule is rebuilt per series
    length with :func:`causalkit.measures.default_ccm_config`.
    """

    histogram: HistogramConfig = HistogramConfig()
    embedding: EmbeddingConfig | None = None
    convergence_threshold: float = 0.05
    tail_count: int = 3
    ccm_window_count: int = 5
    neighbor_count: int | None = None
    realizations: int = 50
    seed: int = 0

    def evaluate(
        self, kind: str, a: TimeSeries, b: TimeSeries, stream: tuple[int, ...] = ()
    ) -> float:
        """Measure value for ``kind`` in direction a -> b.

        ``stream`` identifies this evaluation within the surrogate phase
        stream; plain kinds ignore it.
        """
        base, surrogate = split_kind(kind)
        if surrogate:
            cfg = SurrogateConfig(
                realizations=self.realizations, seed=derive_seed(self.seed, stream)
            )
            return surrogate_measure(lambda sx, sy: self._plain(base, sx, sy), a, b, cfg)
        return self._plain(base, a, b)

    def _plain(self, base: str, a: TimeSeries, b: TimeSeries) -> float:
        if base == "correlation":
            return pearson(a, b)
        if base == "te":
            return transfer_entropy(a, b, self.histogram)
        if base == "ccm":
            if self.embedding is None:
                raise ValueError("cross-mapping kinds need an embedding; see auto_embedding()")
            cfg = default_ccm_config(
                len(b),
                self.embedding,
                convergence_threshold=self.convergence_threshold,
                tail_count=self.tail_count,
                window_count=self.ccm_window_count,
                neighbor_count=self.neighbor_count,
            )
            return ccm(a, b, cfg)
        raise ValueError(f"unknown base measure {base!r}")
