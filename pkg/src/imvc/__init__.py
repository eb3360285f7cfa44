"""Incomplete multi-view clustering via graph-regularized sparse matrix
factorization, plus the evaluation pipeline around it."""

__version__ = "0.1.0"

from .dataset import (
    IndicatorMatrix,
    MaskSpec,
    MultiViewDataset,
    ViewMatrix,
    apply_mask,
    apply_paired_sample_mask,
    apply_random_missing_mask,
    build_indicator,
    build_indicators,
    load_dataset,
    normalize_views,
    save_dataset,
)
from .graph import (
    FusedGraph,
    SimilarityGraph,
    auto_sigma,
    build_fused_graphs,
    dump_graph,
    fuse_graph,
    gaussian_knn_graph,
    identity_fused_graph,
)
from .solver import (
    SolverConfig,
    SolverState,
    fit,
    initialize,
    load_state,
    objective,
    save_state,
    update_basis,
    update_codes,
    update_consensus,
    update_weights,
    view_costs,
    write_trace,
)
from .metrics import (
    ClusteringResult,
    accuracy,
    evaluate_clustering,
    kmeans,
    nmi,
    purity,
)
from .harness import (
    ExperimentConfig,
    RunRecord,
    emit_convergence_trace,
    run_ablation,
    run_experiment,
    run_sweep,
    write_results,
    write_traces,
)

__all__ = [
    "IndicatorMatrix",
    "MaskSpec",
    "MultiViewDataset",
    "ViewMatrix",
    "apply_mask",
    "apply_paired_sample_mask",
    "apply_random_missing_mask",
    "build_indicator",
    "build_indicators",
    "load_dataset",
    "normalize_views",
    "save_dataset",
    "FusedGraph",
    "SimilarityGraph",
    "auto_sigma",
    "build_fused_graphs",
    "dump_graph",
    "fuse_graph",
    "gaussian_knn_graph",
    "identity_fused_graph",
    "SolverConfig",
    "SolverState",
    "fit",
    "initialize",
    "load_state",
    "objective",
    "save_state",
    "update_basis",
    "update_codes",
    "update_consensus",
    "update_weights",
    "view_costs",
    "write_trace",
    "ClusteringResult",
    "accuracy",
    "evaluate_clustering",
    "kmeans",
    "nmi",
    "purity",
    "ExperimentConfig",
    "RunRecord",
    "emit_convergence_trace",
    "run_ablation",
    "run_experiment",
    "run_sweep",
    "write_results",
    "write_traces",
]
