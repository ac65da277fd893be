"""Trend-pattern irreversibility and block-entropy inefficiency of time series."""

from trendirr._core import (  # noqa: F401
    DivergenceUndefined,
    EmpiricalDistribution,
    InefficiencyResult,
    InsufficientData,
    InvalidInput,
    IrreversibilityResult,
    SurrogateEnsembleResult,
    TrendDurations,
    WindowResult,
    __version__,
    binarize,
    block_entropy,
    empirical_distribution,
    extract_trend_durations,
    gen_ar2,
    gen_nar2,
    gen_random_walk,
    inefficiency_index,
    ingest_csv,
    kl_divergence,
    log_returns,
    pearson_correlation,
    rw_entropy_production,
    rw_kl_down_up,
    rw_kl_up_down,
    run_windows,
    shuffle_surrogate,
    significance_test,
    trend_irreversibility,
)
