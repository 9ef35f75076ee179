"""causalkit: linear and nonlinear co-dependence of time series.

Measures pairwise co-dependence with Pearson correlation, normalized transfer
entropy, and convergent cross mapping; separates each measure's linear and
nonlinear content with shared-phase Fourier surrogates; and feeds the results
into pair trading and long-only portfolio optimization.
"""

from .codependence import KINDS, MeasureEngine, auto_embedding, is_directed, normalize_kind
from .decomposition import (
    DecompositionReport,
    decompose,
    fallacy,
    linear_fraction,
    nested_correlation,
    nonlinear_fraction,
)
from .errors import (
    CausalKitError,
    ConstantHistory,
    ConstantSeries,
    DegenerateDenominator,
    DegeneratePrediction,
    Diverged,
    EmptyInput,
    InfeasibleTarget,
    LengthMismatch,
    MisalignedWindows,
    NegativeVariance,
    NoExcessReturn,
    NonPositivePrice,
    OutOfRange,
    ParseError,
    TooShort,
    TooShortForEmbedding,
    WindowTooLarge,
)
from .finance import (
    BacktestResult,
    CoDependenceMatrix,
    PairTradingConfig,
    PortfolioWeights,
    Position,
    RiskReport,
    codependence_matrix,
    historical_var,
    max_sharpe_weights,
    min_risk_weights,
    pair_trading_backtest,
    portfolio_variance,
    rebalance_backtest,
    zscore,
)
from .measures import (
    CcmConfig,
    EmbeddingConfig,
    HistogramConfig,
    ShadowManifold,
    ccm,
    correlation_distance,
    cross_map_skill,
    default_ccm_config,
    default_library_lengths,
    embed,
    entropy,
    mutual_information,
    pearson,
    select_kappa,
    select_tau,
    transfer_entropy,
)
from .surrogates import (
    PhaseVector,
    SurrogateConfig,
    apply_phases,
    draw_phases,
    free_phase_count,
    surrogate_measure,
    surrogate_pair,
)
from .synthetic import CoupledDifferenceParams, simulate
from .timeseries import (
    MeasureSeries,
    RollingConfig,
    TimeSeries,
    log_returns,
    rolling_apply,
    rolling_windows,
    window_count,
)

__version__ = "0.1.0"
