"""Sieve counting for Goldbach representations and twin primes.

Separates what is exactly true (inclusion-exclusion identities, sieve-count
laws) from what is only asymptotic or conjectural (main-term ratios,
exceptional-set bound curves), and checks both empirically at desk scale.
"""

__version__ = "0.1.0"

from .exceptional_scan import (
    ExceptionalReport,
    IntervalExperiment,
    ScanConfig,
    bound_curve,
    interval_experiment,
    scan_exceptional,
    scan_goldbach_exceptional,
    scan_twin_exceptional,
)
from .pair_counts import (
    DifferenceDecomposition,
    PairCountRecord,
    alpha_beta,
    count_goldbach,
    count_twin,
    difference_decomposition,
    moebius_survivors,
    moebius_survivors_batch,
    pair_count_record,
    union_count,
)
from .sieve_core import (
    InsufficientBaseError,
    LimitExceededError,
    OutOfRangeError,
    PrimeTable,
    Segment,
    build_prime_table,
    legendre_count,
    legendre_count_batch,
    prime_pi,
    prime_pi_residue,
    segmented_primes,
)
from .sieve_function import (
    IncrementSet,
    PigeonholeResult,
    SieveInstance,
    increment_bound,
    pigeonhole_interval,
    run_axiom_suite,
    sieve_count,
)
from .singular_series import (
    MainTermRecord,
    SeriesValue,
    integrate_inv_log_squared,
    main_term,
    singular_series_C,
    twin_constant,
)

__all__ = [name for name in dir() if not name.startswith("_")]
