"""Independent checks for partition plans and decompositions.

Only graph primitives are used here; nothing is imported from the
construction modules.  Checks are collected rather than fail-fast so that a
report carries every violation, each with a concrete witness.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Iterable, List, Sequence, Tuple

from .graph import CubicGraph, edge


@dataclass
class VerifyReport:
    violations: List[Tuple[str, Any]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, check: str, witness: Any) -> None:
        self.violations.append((check, witness))

    def checks(self) -> List[str]:
        return [name for name, _ in self.violations]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [{"check": c, "witness": _plain(w)} for c, w in self.violations],
        }

    def __bool__(self) -> bool:
        return self.ok


def _plain(x):
    if isinstance(x, (set, frozenset)):
        return sorted(_plain(y) for y in x)
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    return x


def _components(vertices: Iterable[int], edges: Iterable[Tuple[int, int]]):
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    cyclic = []
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            cyclic.append((u, v))
        else:
            parent[ru] = rv
    groups = {}
    for v in parent:
        groups.setdefault(find(v), []).append(v)
    return list(groups.values()), cyclic


def _check_cycle(report, name, edges, g: CubicGraph):
    """Edge set must be a single connected 2-regular subgraph of g."""
    edges = [tuple(e) for e in edges]
    if not edges:
        report.add(f"{name}.empty", [])
        return
    for e in edges:
        if not g.has_edge(*e):
            report.add(f"{name}.not_graph_edge", list(e))
    deg = Counter(x for e in edges for x in e)
    for v, d in sorted(deg.items()):
        if d != 2:
            report.add(f"{name}.not_2_regular", v)
    comps, _ = _components(deg, edges)
    if len(comps) != 1:
        report.add(f"{name}.disconnected", sorted(min(c) for c in comps))


def verify_decomposition(g: CubicGraph, d) -> VerifyReport:
    """Check that ``d`` splits E(g) into a spanning tree, a matching and cycles."""
    report = VerifyReport()
    tree = [edge(*e) for e in d.tree]
    matching = [edge(*e) for e in d.matching]
    cycles = [[edge(*e) for e in c] for c in d.cycles]

    owners = Counter(tree + matching + [e for c in cycles for e in c])
    for e, k in sorted(owners.items()):
        if k > 1:
            report.add("partition.overlap", list(e))
        if not g.has_edge(*e):
            report.add("partition.foreign_edge", list(e))
    for e in g.edges:
        if e not in owners:
            report.add("partition.missing_edge", list(e))

    if len(tree) != g.n - 1:
        report.add("tree.edge_count", len(tree))
    touched = {x for e in tree for x in e}
    for v in g.vertices:
        if v not in touched:
            report.add("tree.not_spanning", v)
            break
    comps, cyclic = _components(g.vertices, tree)
    if len(comps) != 1:
        report.add("tree.disconnected", sorted(min(c) for c in comps))
    for e in cyclic:
        report.add("tree.cycle", list(e))

    seen = {}
    for e in matching:
        for x in e:
            if x in seen and seen[x] != e:
                report.add("matching.incident", x)
            seen[x] = e

    for k, c in enumerate(cycles):
        _check_cycle(report, f"cycle[{k}]", c, g)
    return report


def verify_plan(g: CubicGraph, plan) -> VerifyReport:
    """Check the preconditions of the tree-plus-cycles reduction."""
    report = VerifyReport()
    tree_vs = set(plan.tree_vertices)
    cycle_vs: List[Sequence[int]] = [list(c) for c in plan.cycles]

    # vertex partition
    count = Counter(list(tree_vs) + [v for c in cycle_vs for v in c])
    for v in sorted(count):
        if not 0 <= v < g.n:
            report.add("partition.bad_vertex", v)
        elif count[v] > 1:
            report.add("partition.overlap", v)
    for v in g.vertices:
        if v not in count:
            report.add("partition.missing_vertex", v)
    if not cycle_vs:
        report.add("cycles.none", [])

    # tree
    tree_edges = [edge(*e) for e in plan.tree_edges]
    for e in tree_edges:
        if not g.has_edge(*e):
            report.add("tree.not_graph_edge", list(e))
        elif not (e[0] in tree_vs and e[1] in tree_vs):
            report.add("tree.edge_outside", list(e))
    if not tree_vs:
        report.add("tree.empty", [])
    else:
        inside = [e for e in tree_edges if e[0] in tree_vs and e[1] in tree_vs]
        comps, cyclic = _components(tree_vs, inside)
        if len(comps) != 1:
            report.add("tree.disconnected", sorted(min(c) for c in comps))
        for e in cyclic:
            report.add("tree.cycle", list(e))

    # cycles: closed walks of graph edges, chordless, pairwise unlinked
    on_cycle = {}
    for k, c in enumerate(cycle_vs):
        if len(c) < 3 or len(set(c)) != len(c):
            report.add(f"cycle[{k}].malformed", list(c))
            continue
        ring = [edge(a, b) for a, b in zip(c, c[1:] + c[:1])]
        for e in ring:
            if not g.has_edge(*e):
                report.add(f"cycle[{k}].not_graph_edge", list(e))
        for a in range(len(c)):
            for b in range(a + 2, len(c)):
                if (a, b) != (0, len(c) - 1) and g.has_edge(c[a], c[b]):
                    report.add(f"cycle[{k}].chord", [c[a], c[b]])
        for v in c:
            on_cycle[v] = k
    for u, v in g.edges:
        if u in on_cycle and v in on_cycle and on_cycle[u] != on_cycle[v]:
            report.add("cycles.linked", [u, v])

    # pendant condition
    if tree_vs:
        deg = Counter(x for e in tree_edges for x in e)
        for v in sorted(tree_vs):
            if deg[v] <= 1 and not any(w in on_cycle for w in g.neighbors(v)):
                report.add("tree.pendant_not_on_cycle", v)
    return report


def report_json(report: VerifyReport) -> str:
    return json.dumps(report.to_json(), sort_keys=True)
