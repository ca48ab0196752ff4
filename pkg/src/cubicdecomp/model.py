"""Plain data carried between the decomposer, oracle, verifier and batch runner."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Optional, Tuple

from .graph import EdgeSet, edge


# Leaves of the case tree.  Every TraceLog.branch is exactly one of these.
CASE1_SUB1 = "Case1.Sub1"
CASE1_SUB2A = "Case1.Sub2.a"
CASE1_SUB2B = "Case1.Sub2.b"
CASE1_SUB2C_MONO = "Case1.Sub2.c.monotone"
CASE1_SUB2C_I = "Case1.Sub2.c.i"
CASE1_SUB2C_II = "Case1.Sub2.c.ii"
CASE1_SUB2C_III = "Case1.Sub2.c.iii"
CASE2_SUB1 = "Case2.Sub1"
CASE2_SUB2A = "Case2.Sub2.a"
CASE2_SUB2B_CYCLES = "Case2.Sub2.b.cycles"
CASE2_SUB2B_MONO = "Case2.Sub2.b.monotone"
CASE2_SUB2C = "Case2.Sub2.c"
CASE2_SUB3_CYCLES = "Case2.Sub3.cycles"
CASE2_SUB3_K = "Case2.Sub3.k"
FALLBACK_ROTATION = "HamiltonianFallback.Rotation"
FALLBACK_K4 = "HamiltonianFallback.K4"
FALLBACK_ORACLE = "HamiltonianFallback.Oracle"
ORACLE_ONLY = "Oracle"

CASE_LEAVES = (
    CASE1_SUB1, CASE1_SUB2A, CASE1_SUB2B, CASE1_SUB2C_MONO, CASE1_SUB2C_I,
    CASE1_SUB2C_II, CASE1_SUB2C_III, CASE2_SUB1, CASE2_SUB2A, CASE2_SUB2B_CYCLES,
    CASE2_SUB2B_MONO, CASE2_SUB2C, CASE2_SUB3_CYCLES, CASE2_SUB3_K,
)
FALLBACK_LEAVES = (FALLBACK_ROTATION, FALLBACK_K4, FALLBACK_ORACLE)
ALL_LEAVES = CASE_LEAVES + FALLBACK_LEAVES + (ORACLE_ONLY,)


def is_case_leaf(branch: Optional[str]) -> bool:
    return branch in CASE_LEAVES


@dataclass(frozen=True)
class PartitionPlan:
    """A tree on part of V(G) plus vertex-disjoint cycles covering the rest.

    ``cycles`` holds each cycle as its cyclic vertex order.
    """

    tree_vertices: FrozenSet[int]
    tree_edges: EdgeSet
    cycles: Tuple[Tuple[int, ...], ...]

    def cycle_edge_sets(self) -> Tuple[EdgeSet, ...]:
        return tuple(
            frozenset(edge(a, b) for a, b in zip(c, c[1:] + c[:1])) for c in self.cycles
        )


@dataclass(frozen=True)
class Decomposition:
    tree: EdgeSet
    matching: EdgeSet
    cycles: Tuple[EdgeSet, ...]

    def part_sizes(self) -> dict:
        return {
            "tree": len(self.tree),
            "matching": len(self.matching),
            "cycles": sorted(len(c) for c in self.cycles),
        }

    def to_json_dict(self) -> dict:
        return {
            "tree": [list(e) for e in sorted(self.tree)],
            "matching": [list(e) for e in sorted(self.matching)],
            "cycles": sorted([list(e) for e in sorted(c)] for c in self.cycles),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Decomposition":
        def es(pairs) -> EdgeSet:
            return frozenset(edge(int(a), int(b)) for a, b in pairs)

        return cls(
            tree=es(data.get("tree", [])),
            matching=es(data.get("matching", [])),
            cycles=tuple(es(c) for c in data.get("cycles", [])),
        )


@dataclass
class TraceLog:
    branch: str
    path: Optional[Tuple[int, ...]] = None
    chords: Optional[dict] = None
    witnesses: Dict[str, Any] = field(default_factory=dict)
    proof_gaps: list = field(default_factory=list)

    @property
    def leaves(self) -> Tuple[str, ...]:
        """The branch plus any case leaf that built the plan behind it."""
        inner = self.witnesses.get("inner_branch")
        return (self.branch, inner) if inner else (self.branch,)

    def to_json_dict(self) -> dict:
        out = {
            "branch": self.branch,
            "path": list(self.path) if self.path is not None else None,
            "witnesses": _jsonable(self.witnesses),
        }
        if self.chords is not None:
            out["chords"] = self.chords
        if self.proof_gaps:
            out["proof_gaps"] = _jsonable(self.proof_gaps)
        return out


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(v) for v in x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def decomposition_json(n: int, d: Decomposition, trace: Optional[TraceLog] = None) -> str:
    doc = {"n": n, **d.to_json_dict()}
    if trace is not None:
        doc["trace"] = trace.to_json_dict()
    return json.dumps(doc, sort_keys=True)
