"""Cycles closed off a path segment by one extra edge.

A segment is a sequence of vertices ``w0..wl`` that are consecutive on some
host path.  A cycle is *formed by* the segment when it consists of a
contiguous stretch ``w[x..y]`` plus the single edge ``w[x] w[y]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, List, Sequence, Tuple

from .graph import CubicGraph, Edge, edge


class NoFormedCycle(LookupError):
    pass


class MissingConnector(LookupError):
    """A leftover run has no edge leaving the forbidden vertex set."""

    def __init__(self, run):
        super().__init__(f"no connector leaves run {list(run)}")
        self.run = tuple(run)


@dataclass(frozen=True)
class FormedCycle:
    vertices: Tuple[int, ...]  # in segment order; closing edge joins the ends
    start: int  # segment index of vertices[0]
    closing_edge: Edge
    chordless: bool

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> frozenset:
        vs = self.vertices
        return frozenset(edge(a, b) for a, b in zip(vs, vs[1:] + vs[:1]))


@dataclass(frozen=True)
class MonotonePath:
    indices: Tuple[int, ...]

    def vertices(self, seg: Sequence[int]) -> Tuple[int, ...]:
        return tuple(seg[k] for k in self.indices)


@dataclass(frozen=True)
class LeftoverSegments:
    segments: Tuple[Tuple[int, ...], ...]
    connectors: Tuple[Edge, ...]


def _closing_pairs(g: CubicGraph, seg: Sequence[int]) -> List[Tuple[int, int]]:
    where = {v: k for k, v in enumerate(seg)}
    pairs = []
    for x, v in enumerate(seg):
        for w in g.neighbors(v):
            y = where.get(w)
            if y is not None and y >= x + 2:
                pairs.append((x, y))
    return pairs


def cycles_formed_by(g: CubicGraph, seg: Sequence[int]) -> List[FormedCycle]:
    """All cycles formed by ``seg``, shortest first, then lexicographic."""
    seg = tuple(seg)
    pairs = _closing_pairs(g, seg)
    out = []
    for x, y in pairs:
        nested = any(x <= a and b <= y and (a, b) != (x, y) for a, b in pairs)
        out.append(FormedCycle(seg[x:y + 1], x, edge(seg[x], seg[y]), not nested))
    out.sort(key=lambda c: (len(c), c.vertices))
    return out


def chordless_cycle_formed_by(g: CubicGraph, seg: Sequence[int]) -> FormedCycle:
    cycles = cycles_formed_by(g, seg)
    if not cycles:
        raise NoFormedCycle(f"segment {list(seg)} forms no cycle")
    best = cycles[0]
    # a chord of a shortest formed cycle would close a shorter one
    if not best.chordless:
        raise AssertionError(f"shortest formed cycle {best.vertices} has a chord")
    return best


def has_formed_cycle(g: CubicGraph, seg: Sequence[int]) -> bool:
    return bool(_closing_pairs(g, seg))


def shortest_monotone_path(g: CubicGraph, seg: Sequence[int]) -> MonotonePath:
    """Fewest-hop index-increasing walk from ``seg[0]`` to ``seg[-1]``.

    Among equally short walks the lexicographically smallest index
    sequence wins.
    """
    seg = tuple(seg)
    last = len(seg) - 1
    if last < 1:
        raise ValueError("segment needs at least two vertices")
    where = {v: k for k, v in enumerate(seg)}
    forward = [
        sorted(where[w] for w in g.neighbors(v) if where.get(w, -1) > k)
        for k, v in enumerate(seg)
    ]
    dist = [None] * (last + 1)
    dist[last] = 0
    for k in range(last - 1, -1, -1):
        reach = [dist[y] for y in forward[k] if dist[y] is not None]
        dist[k] = 1 + min(reach) if reach else None
    path = [0]
    while path[-1] != last:
        k = path[-1]
        path.append(next(y for y in forward[k] if dist[y] == dist[k] - 1))
    return MonotonePath(tuple(path))


def leftover_segments(
    seg: Sequence[int],
    m: MonotonePath,
    g: CubicGraph,
    forbidden: AbstractSet[int],
) -> LeftoverSegments:
    """Maximal runs of ``seg`` skipped by ``m``, each with a connector edge.

    The connector of a run is the least canonical edge with exactly one end
    in the run and the other end outside ``forbidden``.
    """
    on_path = set(m.indices)
    runs = []
    current: list = []
    for k, v in enumerate(seg):
        if k in on_path:
            if current:
                runs.append(tuple(current))
                current = []
        else:
            current.append(v)
    if current:
        runs.append(tuple(current))
    connectors = []
    for run in runs:
        members = set(run)
        options = sorted(
            edge(x, w)
            for x in run
            for w in g.neighbors(x)
            if w not in forbidden and w not in members
        )
        if not options:
            raise MissingConnector(run)
        connectors.append(options[0])
    return LeftoverSegments(tuple(runs), tuple(connectors))


def independent_chordless(g: CubicGraph, cycle: Sequence[int]) -> bool:
    """Quadratic scan: no edge joins two non-consecutive cycle vertices."""
    k = len(cycle)
    for a in range(k):
        for b in range(a + 2, k):
            if a == 0 and b == k - 1:
                continue
            if g.has_edge(cycle[a], cycle[b]):
                return False
    return True
