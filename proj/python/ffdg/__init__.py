"""Character sums, Fourier averages and distance-graph embedding counts
over F_q^d for odd prime powers q."""

from ._core import (
    CharSumRecord,
    DistanceGapRecord,
    DistanceGraph,
    EmbeddingCount,
    FiniteField,
    FunctionTable,
    PointSet,
    SphereIndex,
    TheoremCheckRecord,
    VectorSpace,
    asymptotic_check,
    count_backtracking,
    count_bruteforce,
    distance_bilinear,
    distance_theorem_gap,
    fourier_transform,
    fullspace_triangle_count,
    gauss_sum,
    genuine_check,
    inverse_transform,
    kloosterman_sum,
    load_graph_source,
    quadratic_phase_mean,
    random_set,
    random_table,
    run_experiment,
    salie_sum,
)

__all__ = [
    "CharSumRecord",
    "DistanceGapRecord",
    "DistanceGraph",
    "EmbeddingCount",
    "FiniteField",
    "FunctionTable",
    "PointSet",
    "SphereIndex",
    "TheoremCheckRecord",
    "VectorSpace",
    "asymptotic_check",
    "count_backtracking",
    "count_bruteforce",
    "distance_bilinear",
    "distance_theorem_gap",
    "fourier_transform",
    "fullspace_triangle_count",
    "gauss_sum",
    "genuine_check",
    "inverse_transform",
    "kloosterman_sum",
    "load_graph_source",
    "quadratic_phase_mean",
    "random_set",
    "random_table",
    "run_experiment",
    "salie_sum",
]

__version__ = "0.1.0"
