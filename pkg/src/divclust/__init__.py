"""Divisive hierarchical clustering toolkit.

Builds complete binary dendrograms top-down with exchangeable splitting
procedures (exhaustive two-seeds search under eight quality criteria,
splinter-group peeling, principal-axis splitting), plus an average-link
agglomerative baseline. Hierarchies are scored against the observed
dissimilarities with rank-based statistics, and a seeded random-matrix
benchmark compares the whole roster reproducibly.
"""

from .benchmark import (
    DEFAULT_ALGORITHMS,
    AlgorithmSummary,
    ExperimentConfig,
    ResultTable,
    cells_csv,
    generate_dataset,
    run_experiment,
    summarize,
    summary_csv,
)
from .core import (
    Bipartition,
    ClusterStats,
    DissimilarityMatrix,
    cluster_stats,
    condensed_size,
    euclidean_from_data,
    object_set,
    pair_index,
    read_data_csv,
    read_distance_csv,
    validate_matrix,
)
from .criteria import Criterion, parse_criterion, score_bipartition, silhouette_of_object
from .errors import (
    AllCellsMissingError,
    AsymmetricMatrixError,
    ClusterTooSmallError,
    DegenerateGKError,
    DivclustError,
    EmptySideError,
    InvalidConfigError,
    MatrixTooSmallError,
    NegativeEntryError,
    NoPositiveEigenvalueError,
    NonFiniteEntryError,
    NonZeroDiagonalError,
    NotSquareError,
    ObjectNotInBipartitionError,
    OverlappingSetsError,
    SizeMismatchError,
    ZeroVarianceError,
)
from .evaluation import ConcordanceCounts, concordance, cpcc, goodman_kruskal, kendall_tau
from .hierarchy import (
    AVERAGE_AGGLOMERATIVE,
    Dendrogram,
    DendrogramNode,
    agglomerative_average_link,
    build_hierarchy,
    cophenetic,
    divisive_hierarchy,
    to_newick,
    tree_from_json,
    tree_to_json,
)
from .splitters import (
    PcoaAxis,
    Splitter,
    macnaughton_smith_split,
    parse_splitter,
    pcoa_first_axis,
    pddp_split,
    split_cluster,
    two_seeds_split,
)
from .svg import dendrogram_svg

__version__ = "0.1.0"

__all__ = [
    "AVERAGE_AGGLOMERATIVE",
    "AlgorithmSummary",
    "AllCellsMissingError",
    "AsymmetricMatrixError",
    "Bipartition",
    "ClusterStats",
    "ClusterTooSmallError",
    "ConcordanceCounts",
    "Criterion",
    "DEFAULT_ALGORITHMS",
    "DegenerateGKError",
    "Dendrogram",
    "DendrogramNode",
    "DissimilarityMatrix",
    "DivclustError",
    "EmptySideError",
    "ExperimentConfig",
    "InvalidConfigError",
    "MatrixTooSmallError",
    "NegativeEntryError",
    "NoPositiveEigenvalueError",
    "NonFiniteEntryError",
    "NonZeroDiagonalError",
    "NotSquareError",
    "ObjectNotInBipartitionError",
    "OverlappingSetsError",
    "PcoaAxis",
    "ResultTable",
    "SizeMismatchError",
    "Splitter",
    "ZeroVarianceError",
    "agglomerative_average_link",
    "build_hierarchy",
    "cells_csv",
    "cluster_stats",
    "concordance",
    "condensed_size",
    "cophenetic",
    "cpcc",
    "dendrogram_svg",
    "divisive_hierarchy",
    "euclidean_from_data",
    "generate_dataset",
    "goodman_kruskal",
    "kendall_tau",
    "macnaughton_smith_split",
    "object_set",
    "pair_index",
    "parse_criterion",
    "parse_splitter",
    "pcoa_first_axis",
    "pddp_split",
    "read_data_csv",
    "read_distance_csv",
    "run_experiment",
    "score_bipartition",
    "silhouette_of_object",
    "split_cluster",
    "summarize",
    "summary_csv",
    "to_newick",
    "tree_from_json",
    "tree_to_json",
    "two_seeds_split",
    "validate_matrix",
]
