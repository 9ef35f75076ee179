"""Pair trading and portfolio construction on top of co-dependence measures.

The pair-trading strategy watches a rolling co-dependence series between two
assets.  At each evaluation point the short-window estimate is turned into a
z-score against the accumulated history of the long-window estimate; crossing
``+z_threshold`` opens short-A/long-B, crossing ``-z_threshold`` opens
long-A/short-B, and positions unwind once ``|z|`` reverts below ``z_exit``.
Strategy returns are ``position * (return_a - return_b)`` per step, with no
transaction costs.

Portfolio construction substitutes any co-dependence matrix into the
portfolio-variance double sum ``sum_ij w_i w_j sigma_i sigma_j theta_ij``; a
non-correlation measure is signed by the correlation
(``theta_ij = psi_ij * sgn(rho_ij)``), symmetrized, unit-diagonal forced, and
eigenvalue-clipped to positive semidefinite before optimization.  The
minimum-risk and maximum-Sharpe programs run on the long-only simplex
(weights sum to 1, each >= 0) via scipy's SLSQP from an equal-weight start
with ftol 1e-12, which is deterministic and keeps symmetric problems at
symmetric solutions.

Backtests are causal by construction: every decision at step t uses samples
up to t only, and takes effect from step t+1.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import IntEnum
from typing import Sequence

import numpy as np
from scipy.optimize import minimize

from .codependence import MeasureEngine, auto_embedding, is_directed, normalize_kind, split_kind
from .errors import (
    CausalKitError,
    ConstantHistory,
    ConstantSeries,
    DegenerateDenominator,
    DegeneratePrediction,
    InfeasibleTarget,
    LengthMismatch,
    NegativeVariance,
    NoExcessReturn,
)
from .measures import EmbeddingConfig, HistogramConfig
from .timeseries import RollingConfig, TimeSeries, log_returns, window_count

__all__ = [
    "Position",
    "PairTradingConfig",
    "CoDependenceMatrix",
    "PortfolioWeights",
    "RiskReport",
    "BacktestResult",
    "zscore",
    "pair_trading_backtest",
    "codependence_matrix",
    "portfolio_variance",
    "min_risk_weights",
    "max_sharpe_weights",
    "historical_var",
    "rebalance_backtest",
]

_PSD_FLOOR = 1e-8


class Position(IntEnum):
    """Pair-trading position state."""

    LONG_A_SHORT_B = 1
    FLAT = 0
    SHORT_A_LONG_B = -1


@dataclass(frozen=True)
class PairTradingConfig:
    """Pair-trading parameters.

    ``hist_window`` and ``short_window`` are sample counts for the historical
    and current co-dependence estimates; the current estimate's z-score is
    taken against the mean and standard deviation of all historical estimates
    accumulated so far.  ``codependence`` selects the measure; directed
    measures are evaluated from asset A to asset B.
    """

    hist_window: int
    short_window: int
    z_threshold: float = 1.5
    z_exit: float = 0.5
    codependence: str = "correlation"
    histogram: HistogramConfig = HistogramConfig()
    embedding: EmbeddingConfig | None = None
    realizations: int = 50
    seed: int = 0

    def __post_init__(self):
        if int(self.hist_window) != self.hist_window or self.hist_window < 2:
            raise ValueError(f"hist_window must be an integer >= 2, got {self.hist_window}")
        if int(self.short_window) != self.short_window or self.short_window < 2:
            raise ValueError(f"short_window must be an integer >= 2, got {self.short_window}")
        if not self.short_window < self.hist_window:
            raise ValueError("short_window must be smaller than hist_window")
        if not self.z_threshold > 0:
            raise ValueError("z_threshold must be positive")
        if not 0 < self.z_exit < self.z_threshold:
            raise ValueError("z_exit must lie in (0, z_threshold)")
        object.__setattr__(self, "codependence", normalize_kind(self.codependence))


@dataclass(frozen=True)
class CoDependenceMatrix:
    """Pairwise measure values over an asset universe at one estimation window.

    ``values[i, j]`` is the measure from asset i to asset j (symmetric for
    correlation).  ``sign_source`` carries the plain correlation matrix used
    to sign non-correlation measures in the variance substitution.
    """

    assets: tuple[str, ...]
    values: np.ndarray
    kind: str = "correlation"
    sign_source: np.ndarray | None = None

    def __post_init__(self):
        assets = tuple(str(a) for a in self.assets)
        vals = np.asarray(self.values, dtype=float)
        n = len(assets)
        if vals.shape != (n, n):
            raise ValueError(f"values must be {n}x{n} to match assets, got {vals.shape}")
        kind = normalize_kind(self.kind)
        if kind == "correlation" and not np.allclose(np.diag(vals), 1.0, atol=1e-8):
            raise ValueError("correlation matrices must have a unit diagonal")
        sign = self.sign_source
        if sign is not None:
            sign = np.asarray(sign, dtype=float)
            if sign.shape != (n, n):
                raise ValueError(f"sign_source must be {n}x{n}, got {sign.shape}")
            if sign.flags.writeable:
                sign = sign.copy()
                sign.flags.writeable = False
        if vals.flags.writeable:
            vals = vals.copy()
            vals.flags.writeable = False
        object.__setattr__(self, "assets", assets)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "sign_source", sign)

    @property
    def size(self) -> int:
        return len(self.assets)

    def substituted(self) -> np.ndarray:
        """Signed, symmetrized, unit-diagonal matrix for the variance formula.

        Correlation passes through unchanged (then symmetrized for safety);
        other kinds are multiplied elementwise by the sign of the correlation.
        """
        if self.kind == "correlation":
            theta = self.values.copy()
        else:
            if self.sign_source is None:
                raise CausalKitError(
                    f"kind {self.kind!r} needs sign_source to sign the substitution"
                )
            theta = self.values * np.sign(self.sign_source)
        theta = (theta + theta.T) / 2.0
        np.fill_diagonal(theta, 1.0)
        return theta

    def psd_repaired(self) -> np.ndarray:
        """Substituted matrix with eigenvalues clipped up to a small floor.

        Directional measures need not produce a positive semidefinite form;
        optimization requires one, so negative eigenvalues are raised to 1e-8.
        """
        theta = self.substituted()
        eigenvalues, eigenvectors = np.linalg.eigh(theta)
        clipped = np.maximum(eigenvalues, _PSD_FLOOR)
        repaired = (eigenvectors * clipped) @ eigenvectors.T
        return (repaired + repaired.T) / 2.0


@dataclass(frozen=True)
class PortfolioWeights:
    """Long-only weights on the simplex: sum to 1 within 1e-8, each >= 0."""

    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if w.ndim != 1 or w.size == 0:
            raise ValueError("weights must be a non-empty vector")
        if abs(float(w.sum()) - 1.0) > 1e-8:
            raise ValueError(f"weights must sum to 1 within 1e-8, got {w.sum()}")
        if w.min() < -1e-12:
            raise ValueError(f"weights must be nonnegative, got minimum {w.min()}")
        w = np.clip(w, 0.0, None)
        w.flags.writeable = False
        object.__setattr__(self, "weights", w)

    def __len__(self) -> int:
        return self.weights.size


@dataclass(frozen=True)
class RiskReport:
    """Summary risk statistics of a strategy run.

    ``var_alpha`` is the empirical loss quantile at level ``alpha`` reported
    as a positive loss; ``sharpe`` is per-step mean excess return over
    per-step standard deviation.
    """

    var_alpha: float
    alpha: float
    stdev: float
    sharpe: float
    final_value: float


@dataclass(frozen=True)
class BacktestResult:
    """Positions/weights, per-step returns, and risk summary of a backtest.

    Pair-trading runs populate ``positions``, ``zscores``, ``codependence``
    and ``signal_indices`` (all indexed on the return timeline); portfolio
    runs populate ``weights``, ``rebalance_indices`` and ``value_path`` (the
    value path is on the price timeline, starting at 1).
    """

    step_returns: np.ndarray
    cumulative: np.ndarray
    risk: RiskReport
    positions: np.ndarray | None = None
    zscores: np.ndarray | None = None
    codependence: np.ndarray | None = None
    signal_indices: np.ndarray | None = None
    weights: np.ndarray | None = None
    rebalance_indices: np.ndarray | None = None
    value_path: np.ndarray | None = None


# --------------------------------------------------------------------------
# signals
# --------------------------------------------------------------------------

def zscore(current: float, hist_values: Sequence[float]) -> float:
    """Standard score of ``current`` against a history (sample std, ddof=1).

    Raises:
        ConstantHistory: the history has zero standard deviation.
    """
    arr = np.asarray(hist_values, dtype=float)
    if arr.ndim != 1 or arr.size < 2:
        raise ValueError("history must contain at least 2 values")
    sd = float(arr.std(ddof=1))
    if sd == 0.0:
        raise ConstantHistory("history has zero standard deviation")
    return (float(current) - float(arr.mean())) / sd


def _risk_report(step_returns: np.ndarray, alpha: float, risk_free: float, final_value: float) -> RiskReport:
    r = np.asarray(step_returns, dtype=float)
    if r.size == 0:
        r = np.zeros(1)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        var = historical_var(TimeSeries(r), alpha)
    sd = float(r.std(ddof=1)) if r.size > 1 else 0.0
    sharpe = float((r.mean() - risk_free) / sd) if sd > 0.0 else 0.0
    return RiskReport(var_alpha=var, alpha=alpha, stdev=sd, sharpe=sharpe, final_value=final_value)


def pair_trading_backtest(
    prices_a: TimeSeries,
    prices_b: TimeSeries,
    cfg: PairTradingConfig,
    rolling: RollingConfig,
    alpha: float = 0.01,
) -> BacktestResult:
    """Run the co-dependence mean-reversion strategy on two price series.

    Prices are converted to log returns; the rolling grid is laid over the
    return series with ``rolling.window_len`` and ``rolling.stride`` (the
    window must cover ``cfg.hist_window``).  At each grid point ``e`` the
    measure is evaluated over the trailing ``hist_window`` and
    ``short_window`` return samples; the z-score compares the short estimate
    with the mean and standard deviation of all historical estimates up to
    and including ``e``.  A degenerate (constant) history yields z = 0, i.e.
    no deviation.  Positions take effect from step ``e + 1`` and are held
    until the next grid point; the final position is held to the end.
    """
    if len(prices_a) != len(prices_b):
        raise LengthMismatch(f"price series lengths differ: {len(prices_a)} vs {len(prices_b)}")
    if rolling.window_len < cfg.hist_window:
        raise ValueError(
            f"rolling window {rolling.window_len} must cover hist_window {cfg.hist_window}"
        )
    ra = log_returns(prices_a)
    rb = log_returns(prices_b)
    n = len(ra)
    n_windows = window_count(n, rolling)

    embedding = cfg.embedding
    base, _ = split_kind(cfg.codependence)
    if base == "ccm" and embedding is None:
        embedding = auto_embedding(rb, cfg.histogram)
    engine = MeasureEngine(
        histogram=cfg.histogram,
        embedding=embedding,
        realizations=cfg.realizations,
        seed=cfg.seed,
    )

    grid_ends = np.array(
        [w * rolling.stride + rolling.window_len - 1 for w in range(n_windows)], dtype=np.int64
    )
    zs = np.full(n_windows, np.nan)
    short_values = np.full(n_windows, np.nan)
    positions = np.zeros(n, dtype=np.int64)
    hist_values: list[float] = []
    pos = 0
    for w, e in enumerate(grid_ends):
        ha = TimeSeries(ra.values[e - cfg.hist_window + 1 : e + 1])
        hb = TimeSeries(rb.values[e - cfg.hist_window + 1 : e + 1])
        sa = TimeSeries(ra.values[e - cfg.short_window + 1 : e + 1])
        sb = TimeSeries(rb.values[e - cfg.short_window + 1 : e + 1])
        try:
            hist_values.append(engine.evaluate(cfg.codependence, ha, hb, stream=(0, w)))
            short = engine.evaluate(cfg.codependence, sa, sb, stream=(1, w))
        except CausalKitError as exc:
            raise type(exc)(f"grid point {w} (sample {e}): {exc}") from exc
        short_values[w] = short
        if len(hist_values) >= 2:
            try:
                z = zscore(short, hist_values)
            except ConstantHistory:
                z = 0.0
            zs[w] = z
            if pos == Position.FLAT:
                if z > cfg.z_threshold:
                    pos = Position.SHORT_A_LONG_B
                elif z < -cfg.z_threshold:
                    pos = Position.LONG_A_SHORT_B
            elif abs(z) < cfg.z_exit:
                pos = Position.FLAT
        nxt = grid_ends[w + 1] if w + 1 < n_windows else n - 1
        positions[e + 1 : nxt + 1] = int(pos)

    step_returns = positions * (ra.values - rb.values)
    cumulative = np.cumsum(step_returns)
    active = step_returns[grid_ends[0] + 1 :]
    risk = _risk_report(active, alpha, 0.0, float(cumulative[-1]))
    return BacktestResult(
        step_returns=step_returns,
        cumulative=cumulative,
        risk=risk,
        positions=positions,
        zscores=zs,
        codependence=short_values,
        signal_indices=grid_ends,
    )


# --------------------------------------------------------------------------
# portfolio construction
# --------------------------------------------------------------------------

def codependence_matrix(
    series: Sequence[TimeSeries],
    kind: str,
    engine: MeasureEngine,
    stream: tuple[int, ...] = (),
) -> CoDependenceMatrix:
    """Pairwise measure matrix over a list of equal-length series.

    Directed kinds fill both orders and their own diagonal (the measure's
    self-value); correlation fills the upper triangle and mirrors it with a
    unit diagonal.  A pair whose measure is degenerate on this window
    (constant series, vanishing denominator, constant cross-map prediction)
    contributes 0: no measurable co-dependence.  Non-correlation kinds also
    compute the plain correlation matrix as the sign source.

    Cross-mapping kinds use one embedding for the whole universe: the
    engine's, or one auto-selected from the first series.
    """
    kind = normalize_kind(kind)
    m = len(series)
    if m == 0:
        raise ValueError("need at least one series")
    lengths = {len(s) for s in series}
    if len(lengths) != 1:
        raise LengthMismatch(f"series lengths differ: {sorted(lengths)}")
    labels = tuple(s.label if s.label is not None else f"asset{i}" for i, s in enumerate(series))

    base, _ = split_kind(kind)
    if base == "ccm" and engine.embedding is None:
        engine = MeasureEngine(
            histogram=engine.histogram,
            embedding=auto_embedding(series[0], engine.histogram),
            convergence_threshold=engine.convergence_threshold,
            tail_count=engine.tail_count,
            ccm_window_count=engine.ccm_window_count,
            neighbor_count=engine.neighbor_count,
            realizations=engine.realizations,
            seed=engine.seed,
        )

    degenerate = (ConstantSeries, DegenerateDenominator, DegeneratePrediction)

    def safe_eval(k, a, b, coords):
        try:
            return engine.evaluate(k, a, b, stream=coords)
        except degenerate:
            return 0.0

    values = np.zeros((m, m))
    if kind == "correlation":
        np.fill_diagonal(values, 1.0)
        for i in range(m):
            for j in range(i + 1, m):
                values[i, j] = values[j, i] = safe_eval(kind, series[i], series[j], (*stream, i, j))
        return CoDependenceMatrix(labels, values, kind=kind)

    sign = np.zeros((m, m))
    np.fill_diagonal(sign, 1.0)
    for i in range(m):
        for j in range(i + 1, m):
            sign[i, j] = sign[j, i] = safe_eval("correlation", series[i], series[j], ())
    for i in range(m):
        for j in range(m):
            values[i, j] = safe_eval(kind, series[i], series[j], (*stream, i, j))
    return CoDependenceMatrix(labels, values, kind=kind, sign_source=sign)


def portfolio_variance(
    weights: PortfolioWeights, vols: Sequence[float], codep: CoDependenceMatrix
) -> float:
    """Portfolio variance ``sum_ij w_i w_j sigma_i sigma_j theta_ij``.

    ``theta`` is the signed, symmetrized substitution of the co-dependence
    matrix (without eigenvalue repair).  Raises ``NegativeVariance`` when the
    substituted matrix is indefinite enough to drive the form negative.
    """
    w = weights.weights
    s = np.asarray(vols, dtype=float)
    if s.shape != w.shape or codep.size != w.size:
        raise ValueError("weights, vols, and matrix dimensions must agree")
    if np.any(s < 0.0):
        raise ValueError("volatilities must be nonnegative")
    theta = codep.substituted()
    var = float(np.einsum("i,j,i,j,ij->", w, w, s, s, theta))
    if var < 0.0:
        raise NegativeVariance(
            f"substituted matrix is not positive semidefinite: variance {var}"
        )
    return var


def _covariance(vols: Sequence[float], codep: CoDependenceMatrix) -> np.ndarray:
    s = np.asarray(vols, dtype=float)
    if s.ndim != 1 or s.size != codep.size:
        raise ValueError("vols must match the matrix dimension")
    if np.any(s < 0.0):
        raise ValueError("volatilities must be nonnegative")
    return codep.psd_repaired() * np.outer(s, s)


def _solve_slsqp(objective, jac, n, constraints):
    x0 = np.full(n, 1.0 / n)
    res = minimize(
        objective,
        x0,
        jac=jac,
        method="SLSQP",
        bounds=[(0.0, 1.0)] * n,
        constraints=constraints,
        options={"maxiter": 1000, "ftol": 1e-12},
    )
    if not res.success:
        raise CausalKitError(f"optimizer did not converge: {res.message}")
    w = np.clip(res.x, 0.0, None)
    return PortfolioWeights(w / w.sum())


def min_risk_weights(
    mean_returns: Sequence[float],
    vols: Sequence[float],
    codep: CoDependenceMatrix,
    target_return: float | None = None,
) -> PortfolioWeights:
    """Minimum-variance weights on the long-only simplex.

    With ``target_return`` given, adds the constraint ``mu @ w == target``;
    the target must lie within the attainable [min(mu), max(mu)] range.
    """
    mu = np.asarray(mean_returns, dtype=float)
    if mu.size < 2:
        raise ValueError("need at least 2 assets to optimize")
    sigma = _covariance(vols, codep)
    if mu.size != sigma.shape[0]:
        raise ValueError("mean_returns must match the matrix dimension")
    constraints = [{"type": "eq", "fun": lambda w: w.sum() - 1.0, "jac": lambda w: np.ones_like(w)}]
    if target_return is not None:
        lo, hi = float(mu.min()), float(mu.max())
        if not lo - 1e-12 <= target_return <= hi + 1e-12:
            raise InfeasibleTarget(
                f"target return {target_return} outside attainable [{lo}, {hi}]"
            )
        constraints.append(
            {"type": "eq", "fun": lambda w: mu @ w - target_return, "jac": lambda w: mu}
        )
    return _solve_slsqp(
        lambda w: w @ sigma @ w,
        lambda w: 2.0 * sigma @ w,
        mu.size,
        constraints,
    )


def max_sharpe_weights(
    mean_returns: Sequence[float],
    vols: Sequence[float],
    codep: CoDependenceMatrix,
    risk_free: float = 0.0,
) -> PortfolioWeights:
    """Maximum-Sharpe weights on the long-only simplex.

    Maximizes ``(mu @ w - risk_free) / sqrt(w Sigma w)``.  Requires at least
    one asset with mean return above ``risk_free``.
    """
    mu = np.asarray(mean_returns, dtype=float)
    if mu.size < 1:
        raise ValueError("need at least one asset")
    if float(mu.max()) <= risk_free:
        raise NoExcessReturn(
            f"no asset return exceeds the risk-free rate {risk_free}"
        )
    if mu.size == 1:
        return PortfolioWeights(np.ones(1))
    sigma = _covariance(vols, codep)
    if mu.size != sigma.shape[0]:
        raise ValueError("mean_returns must match the matrix dimension")

    def neg_sharpe(w):
        vol = np.sqrt(max(float(w @ sigma @ w), 1e-24))
        return -(float(mu @ w) - risk_free) / vol

    constraints = [{"type": "eq", "fun": lambda w: w.sum() - 1.0, "jac": lambda w: np.ones_like(w)}]
    return _solve_slsqp(neg_sharpe, None, mu.size, constraints)


def historical_var(returns: TimeSeries, alpha: float = 0.01) -> float:
    """Empirical value-at-risk: the lower ``alpha`` quantile as a positive loss.

    The quantile interpolates order statistics at position ``n * alpha``
    (inverse-ECDF with interpolation), so whenever ``n * alpha`` is an
    integer the result is exactly that order statistic.  Warns when the
    sample is smaller than ``1 / alpha``.
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    n = len(returns)
    if n < 1.0 / alpha:
        warnings.warn(
            f"{n} samples are few for the {alpha:.2%} quantile; estimate is coarse",
            stacklevel=2,
        )
    q = np.quantile(returns.values, alpha, method="interpolated_inverted_cdf")
    return float(-q)


def rebalance_backtest(
    prices: Sequence[TimeSeries],
    objective: str,
    codep_kind: str,
    rolling: RollingConfig,
    rebalance_stride: int | None = None,
    *,
    alpha: float = 0.01,
    risk_free: float = 0.0,
    target_return: float | None = None,
    histogram: HistogramConfig = HistogramConfig(),
    embedding: EmbeddingConfig | None = None,
    realizations: int = 50,
    seed: int = 0,
) -> BacktestResult:
    """Periodically re-optimized long-only portfolio over aligned price series.

    At each rebalance point (every ``rebalance_stride`` samples, defaulting
    to ``rolling.stride``) the trailing ``rolling.window_len`` log returns
    give per-asset means and volatilities plus the selected co-dependence
    matrix; the chosen program (``min_risk`` or ``max_sharpe``) produces
    weights that take effect from the next step and are held until the next
    rebalance.  The value path compounds the weighted simple returns from a
    starting value of 1.

    Optimizer and measure errors propagate with the rebalance index.
    """
    if objective not in ("min_risk", "max_sharpe"):
        raise ValueError(f"objective must be 'min_risk' or 'max_sharpe', got {objective!r}")
    codep_kind = normalize_kind(codep_kind)
    m = len(prices)
    if m == 0:
        raise ValueError("need at least one price series")
    lengths = {len(p) for p in prices}
    if len(lengths) != 1:
        raise LengthMismatch(f"price series lengths differ: {sorted(lengths)}")

    returns = [log_returns(p) for p in prices]
    n = len(returns[0])
    r_log = np.column_stack([r.values for r in returns])
    price_mat = np.column_stack([p.values for p in prices])
    r_simple = price_mat[1:] / price_mat[:-1] - 1.0

    stride = rolling.stride if rebalance_stride is None else int(rebalance_stride)
    if stride < 1:
        raise ValueError(f"rebalance stride must be positive, got {stride}")
    grid = RollingConfig(window_len=rolling.window_len, stride=stride)
    n_rebalances = window_count(n, grid)
    grid_ends = np.array(
        [w * stride + rolling.window_len - 1 for w in range(n_rebalances)], dtype=np.int64
    )

    engine = MeasureEngine(
        histogram=histogram, embedding=embedding, realizations=realizations, seed=seed
    )
    weight_history = np.empty((n_rebalances, m))
    for w, e in enumerate(grid_ends):
        window = r_log[e - rolling.window_len + 1 : e + 1]
        if m == 1:
            weight_history[w] = 1.0
            continue
        series = [
            TimeSeries(window[:, j], label=prices[j].label or f"asset{j}") for j in range(m)
        ]
        mu = window.mean(axis=0)
        sig = window.std(axis=0, ddof=1)
        try:
            codep = codependence_matrix(series, codep_kind, engine, stream=(w,))
            if objective == "min_risk":
                weights = min_risk_weights(mu, sig, codep, target_return)
            else:
                weights = max_sharpe_weights(mu, sig, codep, risk_free)
        except CausalKitError as exc:
            raise type(exc)(f"rebalance {w} (sample {e}): {exc}") from exc
        weight_history[w] = weights.weights

    value = np.ones(n + 1)
    step_returns = np.zeros(n)
    current: np.ndarray | None = None
    grid_lookup = {int(e): w for w, e in enumerate(grid_ends)}
    for t in range(n):
        if current is not None:
            step_returns[t] = float(current @ r_simple[t])
            value[t + 1] = value[t] * (1.0 + step_returns[t])
        else:
            value[t + 1] = value[t]
        w = grid_lookup.get(t)
        if w is not None:
            current = weight_history[w]

    active = step_returns[grid_ends[0] + 1 :]
    risk = _risk_report(active, alpha, risk_free, float(value[-1]))
    return BacktestResult(
        step_returns=step_returns,
        cumulative=value - 1.0,
        risk=risk,
        weights=weight_history,
        rebalance_indices=grid_ends,
        value_path=value,
    )
