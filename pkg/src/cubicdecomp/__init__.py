"""Split a traceable cubic graph into a spanning tree plus a matching and at most two cycles."""

from .decomposer import (
    Case2Refused,
    MaximalityViolation,
    NotTraceable,
    ProofGap,
    apply_lemma1,
    case1,
    case2,
    decompose,
    hamiltonian_fallback,
)
from .graph import (
    CubicGraph,
    ValidationError,
    from_edge_list,
    parse_graph6,
    petersen,
    write_graph6,
)
from .hampath import HamPath, PathKind, chord_indices, enumerate_ham_paths
from .model import Decomposition, PartitionPlan, TraceLog
from .oracle import brute_force_decompose, count_spanning_trees
from .verifier import verify_decomposition, verify_plan

__all__ = [
    "Case2Refused", "CubicGraph", "Decomposition", "HamPath", "MaximalityViolation",
    "NotTraceable", "PartitionPlan", "PathKind", "ProofGap", "TraceLog",
    "ValidationError", "apply_lemma1", "brute_force_decompose", "case1", "case2",
    "chord_indices", "count_spanning_trees", "decompose", "enumerate_ham_paths",
    "from_edge_list", "hamiltonian_fallback", "parse_graph6", "petersen",
    "verify_decomposition", "verify_plan", "write_graph6",
]
