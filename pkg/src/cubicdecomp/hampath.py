"""Hamiltonian path enumeration and the chord structure of a path.

Positions handed out by :func:`chord_indices` are 1-based, so position
``k`` of a path refers to ``path.order[k - 1]``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Tuple

from .graph import CubicGraph


class CaseViolation(RuntimeError):
    """A path was routed to a case whose premise it does not satisfy."""


@dataclass(frozen=True)
class HamPath:
    order: Tuple[int, ...]

    @property
    def pos(self) -> dict:
        """Vertex -> 1-based position."""
        return {v: k + 1 for k, v in enumerate(self.order)}

    def v(self, k: int) -> int:
        return self.order[k - 1]

    def reversed(self) -> "HamPath":
        return HamPath(self.order[::-1])

    @property
    def n(self) -> int:
        return len(self.order)

    def is_valid_for(self, g: CubicGraph) -> bool:
        return (
            sorted(self.order) == list(range(g.n))
            and all(g.has_edge(a, b) for a, b in zip(self.order, self.order[1:]))
        )


class PathKind(enum.Enum):
    HAMILTONIAN_ENDPOINTS = "HamiltonianEndpoints"
    OVERLAPPING = "Overlapping"
    DISJOINT = "Disjoint"


@dataclass(frozen=True)
class PathClass:
    kind: PathKind
    jp: Optional[int] = None
    j: Optional[int] = None
    i: Optional[int] = None
    ip: Optional[int] = None

    @property
    def gap(self) -> int:
        return self.ip - self.jp

    def as_dict(self) -> dict:
        return {"kind": self.kind.value, "jp": self.jp, "j": self.j, "i": self.i, "ip": self.ip}


def enumerate_ham_paths(g: CubicGraph, cap: Optional[int] = None) -> Iterator[HamPath]:
    """Yield every Hamiltonian path of ``g`` once, first endpoint < last.

    Plain backtracking from each start vertex in increasing order, with
    neighbors tried in increasing order.  A partial path is abandoned when
    the unvisited vertices are not all reachable from its head through
    unvisited vertices, or when more than two unvisited vertices have at
    most one unvisited neighbor.
    """
    n = g.n
    adj = g.adjacency
    emitted = 0
    visited = [False] * n
    order: list = []

    def hopeless(head: int) -> bool:
        left = n - len(order)
        if left == 0:
            return False
        low = 0
        for u in range(n):
            if not visited[u]:
                d = sum(1 for w in adj[u] if not visited[w])
                if d <= 1:
                    low += 1
                    if low > 2:
                        return True
        seen = set()
        stack = [w for w in adj[head] if not visited[w]]
        seen.update(stack)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not visited[w] and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) != left

    def extend(head: int) -> Iterator[Tuple[int, ...]]:
        if len(order) == n:
            if order[0] < order[-1]:
                yield tuple(order)
            return
        if hopeless(head):
            return
        for w in adj[head]:
            if not visited[w]:
                visited[w] = True
                order.append(w)
                yield from extend(w)
                order.pop()
                visited[w] = False

    for start in range(n):
        visited[start] = True
        order.append(start)
        for found in extend(start):
            yield HamPath(found)
            emitted += 1
            if cap is not None and emitted >= cap:
                return
        order.pop()
        visited[start] = False


def chord_indices(g: CubicGraph, p: HamPath) -> PathClass:
    """Classify ``p`` by the non-path neighbors of its two endpoints."""
    order = p.order
    n = len(order)
    first, last = order[0], order[-1]
    if g.has_edge(first, last):
        return PathClass(PathKind.HAMILTONIAN_ENDPOINTS)
    pos = p.pos
    jp, j = sorted(pos[w] for w in g.neighbors(first) if w != order[1])
    i, ip = sorted(pos[w] for w in g.neighbors(last) if w != order[-2])
    kind = PathKind.OVERLAPPING if i < j else PathKind.DISJOINT
    assert i != j and j < n and i > 1
    return PathClass(kind, jp, j, i, ip)


def _max_gap_key(item):
    path, pc = item
    return (-pc.gap, path.order)


def rank_disjoint(candidates: Iterable[Tuple[HamPath, PathClass]]):
    """Disjoint orientations sorted best-first: largest gap, then lexicographic order."""
    return sorted(candidates, key=_max_gap_key)


def select_max_gap_path(g: CubicGraph, paths: Sequence[HamPath]) -> HamPath:
    """The orientation maximizing ``ip - jp`` over all given paths.

    Every orientation of every path must classify as Disjoint.
    """
    cands = []
    for p in paths:
        for q in (p, p.reversed()):
            pc = chord_indices(g, q)
            if pc.kind is not PathKind.DISJOINT:
                raise CaseViolation(f"path {q.order} classifies as {pc.kind.value}")
            cands.append((q, pc))
    if not cands:
        raise CaseViolation("no Hamiltonian paths given")
    return rank_disjoint(cands)[0][0]
