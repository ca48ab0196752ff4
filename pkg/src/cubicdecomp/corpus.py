"""Cubic graph corpora: exhaustive small-order census and seeded random graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from .graph import CubicGraph, NotConnected, ValidationError, from_edge_list, read_graph6_lines

# Connected cubic graphs up to isomorphism, n = 4, 6, 8, 10, 12.
CENSUS_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}
MAX_EXHAUSTIVE_N = 12


class OrderTooLarge(ValueError):
    pass


class CensusMismatch(AssertionError):
    pass


class RejectionBudgetExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class CorpusSpec:
    kind: str  # "census-file" | "exhaustive" | "random"
    n: Optional[int] = None
    count: int = 1
    seed: int = 0
    path: Optional[str] = None

    def __post_init__(self):
        if self.kind not in ("census-file", "exhaustive", "random"):
            raise ValueError(f"unknown corpus kind {self.kind!r}")
        if self.kind == "census-file":
            if not self.path:
                raise ValueError("census-file corpus needs a path")
            return
        if self.n is None or self.n % 2 or not 4 <= self.n <= 62:
            raise ValueError(f"n must be even in [4, 62], got {self.n}")
        if self.count < 1:
            raise ValueError("count must be >= 1")

    def describe(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if v is not None}


# canonical form ----------------------------------------------------------------


def _refine(adj, col: List[int]) -> List[int]:
    ncol = len(set(col))
    while True:
        sig = []
        for v, (a, b, c) in enumerate(adj):
            x, y, z = col[a], col[b], col[c]
            if x > y:
                x, y = y, x
            if y > z:
                y, z = z, y
                if x > y:
                    x, y = y, x
            sig.append((col[v], x, y, z))
        ranks = {s: r for r, s in enumerate(sorted(set(sig)))}
        if len(ranks) == ncol:
            return [ranks[s] for s in sig]
        ncol = len(ranks)
        col = [ranks[s] for s in sig]


def canonical_form(g: CubicGraph) -> Tuple[Tuple[int, int], ...]:
    """Lexicographically least relabeled edge list over all refinement leaves.

    Color refinement, then individualization of each vertex of the smallest
    non-singleton cell, recursively.  At the top level, vertices already
    known to share an orbit (from automorphisms exposed by equal leaves)
    are skipped.
    """
    adj = g.adjacency
    best = None
    best_labels = None
    orbit = list(range(g.n))

    def find(x):
        while orbit[x] != x:
            orbit[x] = orbit[orbit[x]]
            x = orbit[x]
        return x

    def search(col, top):
        nonlocal best, best_labels
        col = _refine(adj, col)
        cells = {}
        for v, c in enumerate(col):
            cells.setdefault(c, []).append(v)
        if len(cells) == len(col):
            key = tuple(sorted(
                (min(col[u], col[v]), max(col[u], col[v])) for u, v in g.edges
            ))
            if best is None or key < best:
                best, best_labels = key, col
            elif key == best:
                # both labelings give the same graph: x -> y with equal labels
                inverse = {c: y for y, c in enumerate(best_labels)}
                for x, c in enumerate(col):
                    rx, ry = find(x), find(inverse[c])
                    if rx != ry:
                        orbit[rx] = ry
            return
        target = min((len(m), c) for c, m in cells.items() if len(m) > 1)[1]
        tried = []
        for v in cells[target]:
            if top and any(find(v) == find(u) for u in tried):
                continue
            tried.append(v)
            split = [2 * c + (1 if c == target and x != v else 0) for x, c in enumerate(col)]
            search(split, False)

    search([0] * g.n, True)
    return best


def relabel_canonical(g: CubicGraph) -> CubicGraph:
    return from_edge_list(g.n, canonical_form(g))


# exhaustive generation -----------------------------------------------------------


def _labeled_candidates(n: int) -> Iterator[List[Tuple[int, int]]]:
    """Connected cubic graphs labeled in breadth-first discovery order.

    Vertices are completed in increasing order; a vertex's missing
    neighbors are chosen among later, already discovered vertices or are
    fresh vertices taking the next unused labels.
    """
    adj = [set() for _ in range(n)]
    edges: List[Tuple[int, int]] = []

    def rec(u: int, nxt: int):
        if u == n:
            yield list(edges)
            return
        if u >= nxt:
            return
        need = 3 - len(adj[u])
        pool = [w for w in range(u + 1, nxt) if len(adj[w]) < 3 and w not in adj[u]]
        for k_new in range(need, -1, -1):
            k_old = need - k_new
            if nxt + k_new > n:
                continue
            for olds in _combos(pool, k_old):
                news = list(range(nxt, nxt + k_new))
                for w in olds + news:
                    adj[u].add(w)
                    adj[w].add(u)
                    edges.append((u, w))
                yield from rec(u + 1, nxt + k_new)
                for w in olds + news:
                    adj[u].discard(w)
                    adj[w].discard(u)
                    edges.pop()

    adj0 = 3
    for w in range(1, 1 + adj0):
        adj[0].add(w)
        adj[w].add(0)
        edges.append((0, w))
    yield from rec(1, 4)


def _combos(pool: Sequence[int], k: int):
    if k == 0:
        yield []
        return
    for idx in range(len(pool) - k + 1):
        for rest in _combos(pool[idx + 1:], k - 1):
            yield [pool[idx]] + rest


def generate_exhaustive(n: int, check_census: bool = True) -> List[CubicGraph]:
    """All connected cubic graphs of order ``n``, one per isomorphism class.

    Graphs come back in canonical labeling, sorted by canonical edge list.
    """
    if n % 2 or n < 4:
        raise ValueError(f"n must be even and >= 4, got {n}")
    if n > MAX_EXHAUSTIVE_N:
        raise OrderTooLarge(f"exhaustive generation is limited to n <= {MAX_EXHAUSTIVE_N}")
    seen = {}
    for edges in _labeled_candidates(n):
        g = from_edge_list(n, edges)
        key = canonical_form(g)
        if key not in seen:
            seen[key] = g
    out = [from_edge_list(n, key) for key in sorted(seen)]
    if check_census and n in CENSUS_COUNTS and len(out) != CENSUS_COUNTS[n]:
        raise CensusMismatch(f"n={n}: generated {len(out)}, published {CENSUS_COUNTS[n]}")
    return out


# random generation -----------------------------------------------------------------


def generate_random(
    n: int,
    seed: Optional[int] = None,
    *,
    rng: Optional[random.Random] = None,
    max_tries: int = 10_000,
) -> CubicGraph:
    """Configuration-model cubic graph; loops, multi-edges and disconnected
    results are rejected and redrawn."""
    if n % 2 or n < 4:
        raise ValueError(f"n must be even and >= 4, got {n}")
    rng = rng if rng is not None else random.Random(seed)
    points = [v for v in range(n) for _ in range(3)]
    for _ in range(max_tries):
        rng.shuffle(points)
        pairs = list(zip(points[0::2], points[1::2]))
        if any(u == v for u, v in pairs):
            continue
        if len({(min(p), max(p)) for p in pairs}) != len(pairs):
            continue
        try:
            return from_edge_list(n, pairs)
        except NotConnected:
            continue
    raise RejectionBudgetExhausted(f"no simple connected pairing after {max_tries} draws")


def random_graphs(n: int, count: int, seed: int) -> List[CubicGraph]:
    rng = random.Random(seed)
    return [generate_random(n, rng=rng) for _ in range(count)]


def load_corpus(spec: CorpusSpec):
    """Yield ``(label, graph_or_exception)`` pairs; labels are graph6 lines."""
    from .graph import write_graph6

    if spec.kind == "exhaustive":
        for g in generate_exhaustive(spec.n):
            yield write_graph6(g), g
    elif spec.kind == "random":
        for g in random_graphs(spec.n, spec.count, spec.seed):
            yield write_graph6(g), g
    else:
        with open(spec.path, encoding="ascii", errors="replace") as fh:
            yield from read_graph6_lines(fh)


__all__ = [
    "CENSUS_COUNTS", "CorpusSpec", "OrderTooLarge", "CensusMismatch",
    "RejectionBudgetExhausted", "ValidationError", "canonical_form",
    "relabel_canonical", "generate_exhaustive", "generate_random",
    "random_graphs", "load_corpus",
]
