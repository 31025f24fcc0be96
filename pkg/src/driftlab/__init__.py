"""Drift-analysis laboratory for the (1+1) evolutionary algorithm on
linear pseudo-Boolean functions.

The package bundles an exact/Monte-Carlo drift calculator, certificate
checkers for candidate universal drift functions, runtime-bound
calculators and a reproducible simulator, all reachable through the
``driftlab`` command line tool.
"""

__version__ = "0.1.0"

from .linear_models import (
    BitString,
    Kind,
    LinearFunction,
    MutationParams,
    Ordering,
    compare,
    make_binval,
    make_generic,
    make_onemax,
)
from .drift_engine import (
    DriftFunction,
    DriftReport,
    Method,
    PointDistribution,
    Setting,
    Transform,
    Witness,
    counterexample_search,
    drift_binval_unit,
    drift_distribution,
    drift_enum,
    drift_mc,
    drift_onemax_unit,
    log_lower_terms,
)
from .ea_sim import (
    BitZeroEstimates,
    RunResult,
    RunStats,
    batch_runs,
    batch_runtime,
    bit_zero_probabilities,
    default_cap,
    run,
    summarize_runs,
)
from .certificates import (
    Certificate,
    ScanResult,
    certify,
    certify_additive,
    certify_distribution,
    certify_multiplicative,
    distribution_lower_recursion,
    multiplicative_limit_margin,
    multiplicative_lower_profile,
    s_threshold,
    scan_threshold,
)
from .runtime_bounds import (
    BoundPrediction,
    additive_time_bound,
    multiplicative_time_bound,
    onemax_drift_lower,
)

__all__ = [
    "BitString",
    "BitZeroEstimates",
    "BoundPrediction",
    "Certificate",
    "DriftFunction",
    "DriftReport",
    "Kind",
    "LinearFunction",
    "Method",
    "MutationParams",
    "Ordering",
    "PointDistribution",
    "RunResult",
    "RunStats",
    "ScanResult",
    "Setting",
    "Transform",
    "Witness",
    "additive_time_bound",
    "batch_runs",
    "batch_runtime",
    "bit_zero_probabilities",
    "certify",
    "certify_additive",
    "certify_distribution",
    "certify_multiplicative",
    "compare",
    "counterexample_search",
    "default_cap",
    "distribution_lower_recursion",
    "drift_binval_unit",
    "drift_distribution",
    "drift_enum",
    "drift_mc",
    "drift_onemax_unit",
    "log_lower_terms",
    "make_binval",
    "make_generic",
    "make_onemax",
    "multiplicative_limit_margin",
    "multiplicative_lower_profile",
    "multiplicative_time_bound",
    "onemax_drift_lower",
    "run",
    "s_threshold",
    "scan_threshold",
    "summarize_runs",
    "__version__",
]
