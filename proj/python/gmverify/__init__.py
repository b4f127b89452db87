"""Spectral verification toolkit for small graphs.

Laplacian spectrum majorization checks, split-graph eigenvalue bounds, and
invariant-subspace homotopy traces, backed by a C++ core.
"""

from ._core import (  # noqa: F401
    ConjectureReport,
    Graph,
    HypothesisError,
    InputError,
    KeyLemmaBranch,
    KeyLemmaReport,
    MajorizationReport,
    NumericError,
    SplitClosureReport,
    SplitPartition,
    TracePoint,
    check_complement_duality,
    check_degree_threshold_lemma,
    check_double_majorization,
    check_fan,
    check_grone_bound,
    check_grone_merris,
    check_prefix_duality,
    check_split_bounds,
    check_split_closure,
    complete_split,
    complete_split_spectrum,
    conjugate_sequence,
    eigh,
    grone_merris_margins,
    key_lemma_check,
    labeled_graph_count,
    laplacian,
    majorizes,
    make_split_partition,
    quadratic_form,
    spectrum,
    split_closure,
    split_partition,
    track,
    tracking_partition,
    validate_split_partition,
)

__version__ = "0.1.0"
