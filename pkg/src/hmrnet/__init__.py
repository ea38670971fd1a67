"""Exemplar-centred community detection in two-layer heterogeneous networks."""

from .ap import APConfig, ap_run, objective_value
from .biclique import Biclique, BicliqueOverflowError, enumerate_maximal_bicliques
from .estimators import APCommunities, MPCommunities
from .graph import (
    DeltaConstraintError,
    GraphStructureError,
    HMRNet,
    HeteroLinkSet,
    HomogeneousLayer,
    build_hetero,
    build_layer,
    partition_from_labeling,
)
from .metrics import accuracy, align_labels, conductance, cut_ratio, evaluate, modularity, nmi, tpr, vi
from .mp import MPConfig, MPDiagnostics, joint_objective, mp_run
from .netfile import ParseError, parse_network, parse_network_file, write_network_file
from .pipeline import RunConfig, run_detect
from .similarity import set_preferences, shortest_path_similarity
from .synthgen import (
    generate_planted_bicliques,
    generate_planted_layer,
    generate_synthetic_I,
    generate_synthetic_II,
    inter_pair_probability,
)

__version__ = "0.1.0"

__all__ = [
    "APCommunities",
    "APConfig",
    "Biclique",
    "BicliqueOverflowError",
    "DeltaConstraintError",
    "GraphStructureError",
    "HMRNet",
    "HeteroLinkSet",
    "HomogeneousLayer",
    "MPCommunities",
    "MPConfig",
    "MPDiagnostics",
    "ParseError",
    "RunConfig",
    "accuracy",
    "align_labels",
    "ap_run",
    "build_hetero",
    "build_layer",
    "conductance",
    "cut_ratio",
    "enumerate_maximal_bicliques",
    "evaluate",
    "generate_planted_bicliques",
    "generate_planted_layer",
    "generate_synthetic_I",
    "generate_synthetic_II",
    "inter_pair_probability",
    "joint_objective",
    "modularity",
    "mp_run",
    "nmi",
    "objective_value",
    "parse_network",
    "parse_network_file",
    "partition_from_labeling",
    "run_detect",
    "set_preferences",
    "shortest_path_similarity",
    "tpr",
    "vi",
    "write_network_file",
]
