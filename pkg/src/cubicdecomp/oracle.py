"""Brute-force decomposition search by spanning-tree enumeration."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, List, Optional

from .graph import CubicGraph, Edge, edge
from .model import Decomposition


class BudgetExhausted(RuntimeError):
    def __init__(self, examined: int):
        super().__init__(f"tree budget exhausted after {examined} trees")
        self.examined = examined


@dataclass(frozen=True)
class OracleResult:
    found: Optional[Decomposition]
    trees_examined: int
    exhausted: bool

    def to_json_dict(self) -> dict:
        return {
            "found": self.found.to_json_dict() if self.found else None,
            "trees_examined": self.trees_examined,
            "exhausted": self.exhausted,
        }


def count_spanning_trees(g: CubicGraph) -> int:
    """Exact spanning-tree count by deletion-contraction on the multigraph."""
    start = Counter(g.edges)
    memo = {}

    def connected(mult: Counter, verts: frozenset) -> bool:
        adj = {v: [] for v in verts}
        for u, v in mult:
            adj[u].append(v)
            adj[v].append(u)
        root = next(iter(verts))
        seen = {root}
        stack = [root]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(verts)

    def tau(mult: Counter, verts: frozenset) -> int:
        if len(verts) == 1:
            return 1
        key = (frozenset(mult.items()), verts)
        if key in memo:
            return memo[key]
        if not connected(mult, verts):
            memo[key] = 0
            return 0
        e = min(mult)
        m = mult[e]
        deleted = Counter(mult)
        del deleted[e]
        keep, gone = e
        contracted = Counter()
        for (a, b), k in mult.items():
            if (a, b) == e:
                continue
            a = keep if a == gone else a
            b = keep if b == gone else b
            contracted[edge(a, b)] += k
        result = tau(deleted, verts) + m * tau(contracted, verts - {gone})
        memo[key] = result
        return result

    return tau(start, frozenset(g.vertices))


def _tree_search(g: CubicGraph, prune_residue: bool) -> Iterator[List[Edge]]:
    """Yield spanning trees as edge lists, deciding edges in canonical order.

    Each edge is either taken (when it joins two components of the partial
    forest) or left out (when the graph minus all left-out edges stays
    connected).  Both choices always lead to at least one tree, so every
    leaf is a spanning tree and each tree is reached once.
    """
    n, edges = g.n, g.edges
    m = len(edges)
    comp = list(range(n))
    chosen: List[Edge] = []
    dropped = [False] * m
    resdeg = [0] * n
    incident = [[] for _ in range(n)]
    for k, (u, v) in enumerate(edges):
        incident[u].append((k, v))
        incident[v].append((k, u))

    def still_connected() -> bool:
        seen = [False] * n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            x = stack.pop()
            for k, w in incident[x]:
                if not dropped[k] and not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == n

    def rec(k: int):
        if len(chosen) == n - 1:
            if prune_residue:
                extra = Counter(x for e in edges[k:] for x in e)
                if any(resdeg[x] + extra[x] > 2 for x in extra):
                    return
            yield list(chosen)
            return
        u, v = edges[k]
        cu, cv = comp[u], comp[v]
        if cu != cv:
            saved = comp[:]
            for x in range(n):
                if comp[x] == cv:
                    comp[x] = cu
            chosen.append(edges[k])
            yield from rec(k + 1)
            chosen.pop()
            comp[:] = saved
        if prune_residue and (resdeg[u] == 2 or resdeg[v] == 2):
            return
        dropped[k] = True
        if cu == cv or still_connected():
            resdeg[u] += 1
            resdeg[v] += 1
            yield from rec(k + 1)
            resdeg[u] -= 1
            resdeg[v] -= 1
        dropped[k] = False

    yield from rec(0)


def iter_spanning_trees(g: CubicGraph) -> Iterator[List[Edge]]:
    return _tree_search(g, prune_residue=False)


def split_residue(g: CubicGraph, tree_edges) -> Optional[Decomposition]:
    """Split E(g) minus the tree into a matching and cycles, if possible."""
    tree = frozenset(tree_edges)
    residue = [e for e in g.edges if e not in tree]
    deg = Counter(x for e in residue for x in e)
    if any(d > 2 for d in deg.values()):
        return None
    adj = {v: [] for v in deg}
    for u, v in residue:
        adj[u].append(v)
        adj[v].append(u)
    matching, cycles = [], []
    seen = set()
    for start in sorted(deg):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comp_edges = [e for e in residue if e[0] in comp]
        if len(comp_edges) == 1:
            matching.append(comp_edges[0])
        elif len(comp_edges) == len(comp):
            cycles.append(frozenset(comp_edges))
        else:
            return None
    return Decomposition(tree, frozenset(matching), tuple(cycles))


def brute_force_decompose(g: CubicGraph, budget: Optional[int] = None) -> OracleResult:
    """First decomposition over spanning trees in canonical enumeration order."""
    examined = 0
    for tree in _tree_search(g, prune_residue=True):
        examined += 1
        d = split_residue(g, tree)
        if d is not None:
            return OracleResult(d, examined, exhausted=False)
        if budget is not None and examined >= budget:
            raise BudgetExhausted(examined)
    return OracleResult(None, examined, exhausted=True)
