"""Variable neighborhood descent for single machine total weighted tardiness.

Seven permutation move operators, three neighborhood selection strategies
(random, fixed order, adaptive), exact oracles for small instances, and an
experiment harness that accounts for every objective evaluation.
"""

from .core import (
    EvalCounter,
    Evaluation,
    Instance,
    RunTrace,
    Sequence,
    evaluate,
    is_permutation,
    objective_value,
)
from .engine import (
    DescentResult,
    DescentRule,
    InitialOrder,
    RunResult,
    Strategy,
    StrategyConfig,
    Termination,
    descend,
    run,
    run_vnd_adaptive,
    run_vnd_fixed,
    run_vnd_random,
)
from .harness import (
    CrossoverReport,
    ExperimentOutput,
    ExperimentSpec,
    crossover_report,
    run_experiment,
)
from .neighborhoods import (
    CANONICAL_ORDER,
    InvalidMoveError,
    Move,
    Neighborhood,
    SizeCounts,
    apply_move,
    enumerate_moves,
    neighborhood_size,
    neighborhood_size_counts,
)
from .oracle import brute_force_optimum, certify_local_optimum
from .orlib import (
    BenchmarkFormatError,
    BenchmarkSet,
    generate_benchmark_set,
    generate_instance,
    load_best_known,
    parse_orlib,
    serialize_orlib,
)

__version__ = "0.1.0"

__all__ = [
    "BenchmarkFormatError",
    "BenchmarkSet",
    "CANONICAL_ORDER",
    "CrossoverReport",
    "DescentResult",
    "DescentRule",
    "EvalCounter",
    "Evaluation",
    "ExperimentOutput",
    "ExperimentSpec",
    "InitialOrder",
    "Instance",
    "InvalidMoveError",
    "Move",
    "Neighborhood",
    "RunResult",
    "RunTrace",
    "Sequence",
    "SizeCounts",
    "Strategy",
    "StrategyConfig",
    "Termination",
    "apply_move",
    "brute_force_optimum",
    "certify_local_optimum",
    "crossover_report",
    "descend",
    "enumerate_moves",
    "evaluate",
    "generate_benchmark_set",
    "generate_instance",
    "is_permutation",
    "load_best_known",
    "neighborhood_size",
    "neighborhood_size_counts",
    "objective_value",
    "parse_orlib",
    "run",
    "run_experiment",
    "run_vnd_adaptive",
    "run_vnd_fixed",
    "run_vnd_random",
    "serialize_orlib",
]
