"""Co-dependence measures: correlation, transfer entropy, cross mapping.

Three bivariate measures on equal-length series:

* :func:`pearson` - the product-moment correlation, symmetric, in [-1, 1].
* :func:`transfer_entropy` - directional information flow X -> Y estimated
  from histogram entropies of one-step-aligned tuples, normalized by
  ``sqrt(H(Y_{t+1}, Y_t) * H(X_{t+1}, X_t))``.
* :func:`ccm` - convergent cross mapping: the putative effect series is
  delay-embedded and its neighborhoods are used to cross-predict the putative
  cause; skill that converges as the library grows indicates causation.

Plus the supporting machinery: histogram entropy, lagged mutual information,
delay selection (first MI minimum), embedding-dimension selection (false
nearest neighbors), and delay embedding into a :class:`ShadowManifold`.

Histogram conventions: each variable is discretized once per evaluation into
``bins_per_dim`` equal-width bins spanning that variable's own min/max (or a
fixed global range), and every entropy term reuses those per-variable bin
assignments.  Entropies are in nats.  All operations are pure and
deterministic; nearest-neighbor ties break toward the lower time index.
"""

from __future__ import annotations

import threading
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import cdist
from scipy.stats import spearmanr

from .errors import (
    ConstantSeries,
    DegenerateDenominator,
    DegeneratePrediction,
    LengthMismatch,
    OutOfRange,
    TooShort,
    TooShortForEmbedding,
)
from .timeseries import TimeSeries

__all__ = [
    "HistogramConfig",
    "EmbeddingConfig",
    "CcmConfig",
    "ShadowManifold",
    "pearson",
    "entropy",
    "transfer_entropy",
    "mutual_information",
    "first_local_minimum",
    "select_tau",
    "select_kappa",
    "embed",
    "cross_map_skill",
    "ccm",
    "correlation_distance",
    "default_library_lengths",
    "default_ccm_config",
    "te_range_diagnostic",
]


# --------------------------------------------------------------------------
# configuration types
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class HistogramConfig:
    """Equal-width histogram layout for entropy estimation.

    ``range_policy="window"`` bins each variable over its own min/max within
    the data at hand; ``"global"`` uses ``global_range`` for every variable
    (values outside are clipped into the edge bins).
    """

    bins_per_dim: int = 8
    range_policy: str = "window"
    global_range: tuple[float, float] | None = None

    def __post_init__(self):
        if int(self.bins_per_dim) != self.bins_per_dim or self.bins_per_dim < 2:
            raise ValueError(f"bins_per_dim must be an integer >= 2, got {self.bins_per_dim}")
        if self.range_policy not in ("window", "global"):
            raise ValueError(f"range_policy must be 'window' or 'global', got {self.range_policy!r}")
        if self.range_policy == "global":
            if self.global_range is None:
                raise ValueError("range_policy='global' requires global_range")
            lo, hi = self.global_range
            if not hi > lo:
                raise ValueError(f"global_range must satisfy lo < hi, got {self.global_range}")


@dataclass(frozen=True)
class EmbeddingConfig:
    """Delay-embedding layout: dimension ``kappa``, delay ``tau`` (samples)."""

    kappa: int
    tau: int = 1

    def __post_init__(self):
        if int(self.kappa) != self.kappa or self.kappa < 1:
            raise ValueError(f"kappa must be a positive integer, got {self.kappa}")
        if int(self.tau) != self.tau or self.tau < 1:
            raise ValueError(f"tau must be a positive integer, got {self.tau}")


@dataclass(frozen=True)
class CcmConfig:
    """Cross-mapping schedule and convergence rule.

    Skill is computed at each library length; :func:`converged` then inspects
    the standard deviations over ``window_count`` nested tail-anchored
    windows of the skill vector against ``convergence_threshold``.  On
    convergence the measure is the mean of the last ``tail_count`` skills;
    otherwise it is exactly 0.

    ``neighbor_count`` defaults to ``kappa + 1`` (the simplex of the
    embedding dimension).
    """

    embedding: EmbeddingConfig
    library_lengths: tuple[int, ...]
    convergence_threshold: float = 0.05
    tail_count: int = 3
    neighbor_count: int | None = None
    window_count: int = 5

    def __post_init__(self):
        libs = tuple(int(v) for v in self.library_lengths)
        if len(libs) == 0:
            raise ValueError("library_lengths must not be empty")
        if libs[0] < 1 or any(b <= a for a, b in zip(libs, libs[1:])):
            raise ValueError(f"library_lengths must be strictly increasing positives, got {libs}")
        object.__setattr__(self, "library_lengths", libs)
        if not self.convergence_threshold > 0:
            raise ValueError("convergence_threshold must be positive")
        if int(self.tail_count) != self.tail_count or self.tail_count < 1:
            raise ValueError(f"tail_count must be a positive integer, got {self.tail_count}")
        if self.tail_count > len(libs):
            raise ValueError(
                f"tail_count {self.tail_count} exceeds the {len(libs)} library lengths"
            )
        if int(self.window_count) != self.window_count or self.window_count < 2:
            raise ValueError(f"window_count must be an integer >= 2, got {self.window_count}")
        if self.neighbor_count is not None:
            if int(self.neighbor_count) != self.neighbor_count or self.neighbor_count < 1:
                raise ValueError(f"neighbor_count must be a positive integer, got {self.neighbor_count}")
            if self.neighbor_count >= libs[0]:
                raise ValueError(
                    f"neighbor_count {self.neighbor_count} must be < smallest library {libs[0]}"
                )

    @property
    def neighbors(self) -> int:
        if self.neighbor_count is not None:
            return self.neighbor_count
        return self.embedding.kappa + 1


@dataclass(frozen=True)
class ShadowManifold:
    """Delay-coordinate reconstruction of a series.

    ``points[i] = (x[j], x[j - tau], ..., x[j - (kappa - 1) * tau])`` with
    ``j = time_index[i]`` referring back to the source sample.
    """

    points: np.ndarray
    time_index: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        idx = np.asarray(self.time_index, dtype=np.int64)
        if pts.ndim != 2:
            raise ValueError(f"points must be 2-D, got shape {pts.shape}")
        if idx.shape != (pts.shape[0],):
            raise ValueError("time_index must have one entry per point")
        if pts.flags.writeable:
            pts = pts.copy()
            pts.flags.writeable = False
        if idx.flags.writeable:
            idx = idx.copy()
            idx.flags.writeable = False
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "time_index", idx)

    def __len__(self) -> int:
        return self.points.shape[0]


# --------------------------------------------------------------------------
# correlation
# --------------------------------------------------------------------------

def _pearson_arrays(x: np.ndarray, y: np.ndarray) -> float:
    xd = x - x.mean()
    yd = y - y.mean()
    sx = float(np.dot(xd, xd))
    sy = float(np.dot(yd, yd))
    if sx == 0.0 or sy == 0.0:
        raise ConstantSeries("correlation is undefined for a zero-variance series")
    r = float(np.dot(xd, yd)) / np.sqrt(sx * sy)
    return min(1.0, max(-1.0, r))


def pearson(x: TimeSeries, y: TimeSeries) -> float:
    """Pearson product-moment correlation of two equal-length series.

    Raises:
        LengthMismatch: lengths differ.
        TooShort: fewer than 2 samples.
        ConstantSeries: either series has zero variance.
    """
    if len(x) != len(y):
        raise LengthMismatch(f"series lengths differ: {len(x)} vs {len(y)}")
    if len(x) < 2:
        raise TooShort("correlation needs at least 2 samples")
    return _pearson_arrays(x.values, y.values)


def correlation_distance(rho: float) -> float:
    """Map a correlation in [-1, 1] to the distance ``sqrt(2 * (1 - rho))``."""
    if not -1.0 <= rho <= 1.0:
        raise OutOfRange(f"rho must lie in [-1, 1], got {rho}")
    return float(np.sqrt(2.0 * (1.0 - rho)))


# --------------------------------------------------------------------------
# histogram entropies
# --------------------------------------------------------------------------

def _bin_indices(values: np.ndarray, cfg: HistogramConfig) -> np.ndarray:
    """Assign each value to a bin in [0, bins_per_dim)."""
    if cfg.range_policy == "global":
        lo, hi = cfg.global_range
    else:
        lo = float(values.min())
        hi = float(values.max())
    if hi <= lo:
        return np.zeros(values.size, dtype=np.int64)
    idx = np.floor((values - lo) / (hi - lo) * cfg.bins_per_dim).astype(np.int64)
    return np.clip(idx, 0, cfg.bins_per_dim - 1)


def _entropy_from_codes(codes: np.ndarray) -> float:
    _, counts = np.unique(codes, return_counts=True)
    p = counts / codes.size
    return max(float(-(p * np.log(p)).sum()), 0.0)


def entropy(samples, cfg: HistogramConfig = HistogramConfig()) -> float:
    """Histogram entropy (nats) of d-dimensional samples.

    ``samples`` is an (n, d) array (or 1-D for d = 1).  Each dimension is
    binned independently per the config; empty cells contribute nothing.
    """
    arr = np.asarray(samples, dtype=float)
    if arr.ndim == 1:
        arr = arr[:, None]
    if arr.ndim != 2 or arr.shape[0] < 1:
        raise ValueError(f"samples must be a non-empty (n, d) array, got shape {arr.shape}")
    codes = np.zeros(arr.shape[0], dtype=np.int64)
    for j in range(arr.shape[1]):
        codes = codes * cfg.bins_per_dim + _bin_indices(arr[:, j], cfg)
    return _entropy_from_codes(codes)


class _RangeDiagnostic:
    """Thread-safe counter of normalized-TE values falling outside [0, 1]."""

    def __init__(self):
        self._lock = threading.Lock()
        self._count = 0

    @property
    def count(self) -> int:
        return self._count

    def record(self):
        with self._lock:
            self._count += 1

    def reset(self):
        with self._lock:
            self._count = 0


#: Counts how often the normalized transfer entropy left [0, 1]; the value is
#: reported verbatim either way.
te_range_diagnostic = _RangeDiagnostic()


def transfer_entropy(x: TimeSeries, y: TimeSeries, cfg: HistogramConfig = HistogramConfig()) -> float:
    """Normalized transfer entropy in direction X -> Y.

    Numerator ``H(Y+, Y) + H(Y, X) - H(Y+, Y, X) - H(Y)`` over one-step
    aligned tuples ``(y[t+1], y[t], x[t])``, divided by
    ``sqrt(H(Y+, Y) * H(X+, X))``.  Values outside [0, 1] are reported as
    computed and counted in :data:`te_range_diagnostic`.

    Raises:
        LengthMismatch: lengths differ.
        TooShort: fewer than 3 samples.
        DegenerateDenominator: either series is effectively constant.
    """
    if len(x) != len(y):
        raise LengthMismatch(f"series lengths differ: {len(x)} vs {len(y)}")
    if len(x) < 3:
        raise TooShort("transfer entropy needs at least 3 samples")
    b = cfg.bins_per_dim
    ix = _bin_indices(x.values, cfg)
    iy = _bin_indices(y.values, cfg)
    yf, yp, xp, xf = iy[1:], iy[:-1], ix[:-1], ix[1:]
    h_yf_yp = _entropy_from_codes(yf * b + yp)
    h_yp_xp = _entropy_from_codes(yp * b + xp)
    h_yf_yp_xp = _entropy_from_codes((yf * b + yp) * b + xp)
    h_yp = _entropy_from_codes(yp)
    h_xf_xp = _entropy_from_codes(xf * b + xp)
    if h_yf_yp == 0.0 or h_xf_xp == 0.0:
        raise DegenerateDenominator(
            "normalization denominator vanishes (constant series)"
        )
    te = (h_yf_yp + h_yp_xp - h_yf_yp_xp - h_yp) / np.sqrt(h_yf_yp * h_xf_xp)
    if not 0.0 <= te <= 1.0:
        te_range_diagnostic.record()
    return float(te)


def mutual_information(x: TimeSeries, lag: int, cfg: HistogramConfig = HistogramConfig()) -> float:
    """Mutual information (nats) between ``x[t]`` and ``x[t - lag]``."""
    if int(lag) != lag or lag < 1:
        raise ValueError(f"lag must be a positive integer, got {lag}")
    if lag >= len(x):
        raise TooShort(f"lag {lag} must be smaller than the series length {len(x)}")
    ix = _bin_indices(x.values, cfg)
    a, b = ix[lag:], ix[:-lag]
    mi = (
        _entropy_from_codes(a)
        + _entropy_from_codes(b)
        - _entropy_from_codes(a * cfg.bins_per_dim + b)
    )
    return max(float(mi), 0.0)


def first_local_minimum(values) -> int | None:
    """0-based index of the first strict interior local minimum, or None."""
    for i in range(1, len(values) - 1):
        if values[i - 1] > values[i] < values[i + 1]:
            return i
    return None


def select_tau(x: TimeSeries, max_lag: int, cfg: HistogramConfig = HistogramConfig()) -> int:
    """Smallest lag at which the lagged mutual information has a local minimum.

    Scans lags 1..max_lag and returns the first interior lag with
    ``MI(lag-1) > MI(lag) < MI(lag+1)``.  Without such a minimum, returns 1
    and emits a ``UserWarning``.
    """
    if int(max_lag) != max_lag or max_lag < 2:
        raise ValueError(f"max_lag must be an integer >= 2, got {max_lag}")
    mi = [mutual_information(x, lag, cfg) for lag in range(1, max_lag + 1)]
    dip = first_local_minimum(mi)
    if dip is not None:
        return dip + 1
    warnings.warn(
        f"no local minimum of mutual information up to lag {max_lag}; falling back to tau=1",
        stacklevel=2,
    )
    return 1


def select_kappa(
    x: TimeSeries,
    tau: int,
    max_dim: int,
    fnn_tolerance: float = 10.0,
) -> int:
    """Smallest embedding dimension with under 1% false nearest neighbors.

    For each candidate dimension d, embeds at d and flags a point's nearest
    neighbor as false when adding the (d+1)-th delay coordinate either
    stretches their distance by more than ``fnn_tolerance`` times, or moves
    them apart by more than twice the series' standard deviation (the
    attractor-size guard, without which sparse high-dimensional noise would
    sail under the ratio test).  Returns d once the flagged fraction drops
    below 1%; otherwise returns ``max_dim`` and emits a ``UserWarning``.
    """
    if int(max_dim) != max_dim or max_dim < 2:
        raise ValueError(f"max_dim must be an integer >= 2, got {max_dim}")
    if not fnn_tolerance > 0:
        raise ValueError("fnn_tolerance must be positive")
    v = x.values
    spread = float(v.std())
    # distance floor so exact re-visits (periodic orbits) do not turn the
    # ratio into quotient-of-rounding-noise
    floor = max(1e-12 * spread, 1e-300)
    for dim in range(1, max_dim + 1):
        # Dimension d+1 prepends the next future value x[t + tau] (the d+1
        # point at time t + tau); restrict to points where both the d-dim
        # coordinates and that extension exist.
        first = (dim - 1) * tau
        if len(v) - tau - first < dim + 3:
            break
        idx = np.arange(first, len(v) - tau)
        pts = np.column_stack([v[idx - j * tau] for j in range(dim)])
        extra = v[idx + tau]
        dists = cdist(pts, pts)
        np.fill_diagonal(dists, np.inf)
        nn = np.argmin(dists, axis=1)  # ties resolve to the lower index
        base = dists[np.arange(len(idx)), nn]
        gap = np.abs(extra - extra[nn])
        stretched = gap / np.maximum(base, floor) > fnn_tolerance
        lonely = np.sqrt(base**2 + gap**2) > 2.0 * spread
        fraction = float(np.mean(stretched | lonely))
        if fraction < 0.01:
            return dim
    warnings.warn(
        f"false-nearest-neighbor fraction stayed >= 1% up to dimension {max_dim}; capping",
        stacklevel=2,
    )
    return max_dim


# --------------------------------------------------------------------------
# embedding and cross mapping
# --------------------------------------------------------------------------

def embed(x: TimeSeries, cfg: EmbeddingConfig) -> ShadowManifold:
    """Delay-embed a series into lagged-coordinate points.

    Point count is ``len(x) - (kappa - 1) * tau``.  Cross mapping needs at
    least ``kappa + 2`` points (simplex neighborhoods); that is enforced at
    the cross-mapping call sites, so small manifolds can still be built and
    inspected.
    """
    count = len(x) - (cfg.kappa - 1) * cfg.tau
    if count < 1:
        raise TooShortForEmbedding(
            f"{len(x)} samples give no embedded points for kappa={cfg.kappa}, tau={cfg.tau}"
        )
    idx = np.arange((cfg.kappa - 1) * cfg.tau, len(x))
    points = np.column_stack([x.values[idx - j * cfg.tau] for j in range(cfg.kappa)])
    return ShadowManifold(points, idx)


def _simplex_weights(dists: np.ndarray) -> np.ndarray:
    """Exponential simplex weights per row; zero-distance neighbors split all mass."""
    dmin = dists[:, :1]
    with np.errstate(over="ignore"):
        w = np.exp(-dists / np.where(dmin > 0.0, dmin, 1.0))
    zero_rows = dmin[:, 0] == 0.0
    if np.any(zero_rows):
        w[zero_rows] = (dists[zero_rows] == 0.0).astype(float)
    return w / w.sum(axis=1, keepdims=True)


def _skills_for_libraries(
    points: np.ndarray,
    time_index: np.ndarray,
    target: np.ndarray,
    library_lengths: tuple[int, ...],
    k: int,
    chunk: int = 1024,
) -> np.ndarray:
    """Cross-map skill for each library length, sharing one distance pass.

    For every manifold point, the k nearest library points (excluding the
    point itself) predict the contemporaneous target value as an
    exponentially distance-weighted average; skill is the Pearson correlation
    of predictions against actual target values.  Ties in neighbor selection
    break toward the lower time index.
    """
    n = points.shape[0]
    max_lib = max(library_lengths)
    preds = {lib: np.empty(n) for lib in library_lengths}
    library = points[:max_lib]
    for start in range(0, n, chunk):
        stop = min(start + chunk, n)
        dists = cdist(points[start:stop], library)
        rows = np.arange(start, stop)
        in_lib = rows < max_lib
        if np.any(in_lib):
            dists[np.flatnonzero(in_lib), rows[in_lib]] = np.inf
        for lib in library_lengths:
            sub = dists[:, :lib]
            n_cand = min(2 * k, lib)
            if n_cand < sub.shape[1]:
                cand = np.argpartition(sub, n_cand - 1, axis=1)[:, :n_cand]
            else:
                cand = np.broadcast_to(np.arange(lib), (sub.shape[0], lib)).copy()
            cd = np.take_along_axis(sub, cand, axis=1)
            # order candidates by index first, then stable-sort by distance:
            # equal distances resolve to the lower time index.
            by_index = np.argsort(cand, axis=1)
            cand = np.take_along_axis(cand, by_index, axis=1)
            cd = np.take_along_axis(cd, by_index, axis=1)
            by_dist = np.argsort(cd, axis=1, kind="stable")[:, :k]
            sel = np.take_along_axis(cand, by_dist, axis=1)
            sel_d = np.take_along_axis(cd, by_dist, axis=1)
            w = _simplex_weights(sel_d)
            preds[lib][start:stop] = (w * target[time_index[sel]]).sum(axis=1)
    actual = target[time_index]
    skills = np.empty(len(library_lengths))
    for i, lib in enumerate(library_lengths):
        p = preds[lib]
        if np.ptp(p) == 0.0:
            raise DegeneratePrediction(
                f"cross-map predictions are constant at library length {lib}"
            )
        skills[i] = _pearson_arrays(p, actual)
    return skills


def cross_map_skill(
    source: ShadowManifold,
    target: TimeSeries,
    library_len: int,
    neighbor_count: int,
) -> float:
    """Skill of cross-predicting ``target`` from one library of ``source``.

    ``source`` is the manifold of the putative effect; ``target`` is the
    putative cause.  High skill indicates cause -> effect causality.
    """
    if library_len < 1 or library_len > len(source):
        raise ValueError(
            f"library_len must lie in [1, {len(source)}], got {library_len}"
        )
    if not 0 < neighbor_count < library_len:
        raise ValueError(
            f"neighbor_count must satisfy 0 < k < library_len, got {neighbor_count}"
        )
    if int(source.time_index.max()) >= len(target):
        raise LengthMismatch(
            "target is shorter than the manifold's time span"
        )
    return float(
        _skills_for_libraries(
            source.points, source.time_index, target.values, (int(library_len),), int(neighbor_count)
        )[0]
    )


def _suffix_stds(skills: np.ndarray, window_count: int) -> np.ndarray:
    """Population stds over nested tail-anchored windows, narrowest first.

    Window i covers the last ``round(i * n / window_count)`` skills (at least
    2), so the final entry is the std of the whole vector.
    """
    n = skills.size
    sizes = sorted({max(2, round(i * n / window_count)) for i in range(1, window_count + 1)})
    return np.array([skills[n - size :].std() for size in sizes])


def converged(
    skills: np.ndarray,
    threshold: float,
    window_count: int = 5,
    tail_count: int = 3,
) -> bool:
    """Convergence rule for a skill-versus-library-size vector.

    Standard deviations are taken over ``window_count`` nested windows
    anchored at the vector's tail (narrowest to full vector).  The vector
    counts as converged when any of three patterns holds:

    * flat: every window std is below ``threshold / 10`` - the skill never
      moved at the resolution of interest, i.e. it converged before the
      smallest library;
    * ceiling: the mean of the last ``tail_count`` skills is at least 0.8
      and the narrowest window's std is below ``threshold`` - skill this
      close to the correlation ceiling with a quiet tail cannot still be
      growing materially;
    * grown: the full vector's std is at least ``threshold`` (the skill
      moved by more than noise can account for), the narrowest window is no
      more variable than the whole, and the skills rise monotonically with
      library size (Spearman rank correlation >= 0.5).

    Independent series produce flat low-level skill vectors that fail all
    three patterns, which is what maps them to the exact-zero branch.
    """
    skills = np.asarray(skills, dtype=float)
    stds = _suffix_stds(skills, window_count)
    if np.all(stds < threshold / 10.0):
        return True
    if skills[-tail_count:].mean() >= 0.8 and stds[0] < threshold:
        return True
    if stds[-1] >= threshold and stds[0] <= stds[-1]:
        rho = spearmanr(np.arange(skills.size), skills).statistic
        return bool(np.isfinite(rho) and rho >= 0.5)
    return False


def ccm(cause: TimeSeries, effect: TimeSeries, cfg: CcmConfig) -> float:
    """Convergent cross mapping estimate of cause -> effect causality.

    Embeds the *effect* series (its manifold carries the cause's signature),
    cross-predicts the cause at each configured library length, and applies
    the convergence rule of :class:`CcmConfig`.  Returns the mean of the last
    ``tail_count`` skills on convergence, exactly 0 otherwise.
    """
    if len(cause) != len(effect):
        raise LengthMismatch(f"series lengths differ: {len(cause)} vs {len(effect)}")
    manifold = embed(effect, cfg.embedding)
    if len(manifold) < cfg.embedding.kappa + 2:
        raise TooShortForEmbedding(
            f"{len(manifold)} embedded points are too few for cross mapping "
            f"(need >= {cfg.embedding.kappa + 2})"
        )
    if cfg.library_lengths[-1] > len(manifold):
        raise ValueError(
            f"largest library length {cfg.library_lengths[-1]} exceeds the "
            f"{len(manifold)} available embedded points"
        )
    k = cfg.neighbors
    if k >= cfg.library_lengths[0]:
        raise ValueError(
            f"neighbor count {k} must be smaller than the smallest library "
            f"{cfg.library_lengths[0]}"
        )
    skills = _skills_for_libraries(
        manifold.points, manifold.time_index, cause.values, cfg.library_lengths, k
    )
    if converged(skills, cfg.convergence_threshold, cfg.window_count, cfg.tail_count):
        return float(skills[-cfg.tail_count :].mean())
    return 0.0


def default_library_lengths(
    available: int, embedding: EmbeddingConfig, count: int = 10
) -> tuple[int, ...]:
    """Geometric library schedule from ``max(50, 5*kappa*tau)`` to ``available``."""
    start = max(50, 5 * embedding.kappa * embedding.tau)
    if available <= start:
        raise TooShortForEmbedding(
            f"{available} embedded points cannot support a library schedule "
            f"starting at {start}"
        )
    libs = np.unique(np.round(np.geomspace(start, available, count)).astype(int))
    return tuple(int(v) for v in libs)


def default_ccm_config(series_len: int, embedding: EmbeddingConfig, **overrides) -> CcmConfig:
    """CcmConfig with the default library schedule for a given series length."""
    available = series_len - (embedding.kappa - 1) * embedding.tau
    libs = default_library_lengths(available, embedding)
    return CcmConfig(embedding=embedding, library_lengths=libs, **overrides)
