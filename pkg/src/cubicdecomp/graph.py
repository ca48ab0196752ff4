"""Validated cubic graphs, graph6 and edge-list I/O."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Sequence, Tuple

Edge = Tuple[int, int]
EdgeSet = FrozenSet[Edge]

GRAPH6_HEADER = ">>graph6<<"


class ValidationError(ValueError):
    """Base class for rejected graph inputs."""


class NotCubic(ValidationError):
    pass


class NotSimple(ValidationError):
    pass


class NotConnected(ValidationError):
    pass


class BadVertexId(ValidationError):
    pass


class MalformedGraph6(ValidationError):
    pass


def edge(u: int, v: int) -> Edge:
    """Canonical (u < v) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class CubicGraph:
    """A simple connected 3-regular graph on vertices ``0..n-1``.

    Instances are only produced by :func:`from_edge_list` (or the parsers
    built on it), so every method may assume the graph is valid.
    """

    n: int
    adjacency: Tuple[Tuple[int, int, int], ...]
    edges: Tuple[Edge, ...]
    _edge_set: EdgeSet = field(repr=False, compare=False, default=frozenset())

    def neighbors(self, v: int) -> Tuple[int, int, int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self._edge_set

    @property
    def edge_set(self) -> EdgeSet:
        return self._edge_set

    @property
    def vertices(self) -> range:
        return range(self.n)

    def __len__(self) -> int:
        return self.n


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> CubicGraph:
    """Validate ``pairs`` as the edge list of a connected cubic graph.

    Errors are reported for the first violation in a fixed scan order:
    vertex ids, then loops and parallel edges in input order, then
    degrees by vertex id, then connectivity.
    """
    if n < 4 or n % 2:
        raise NotCubic(f"a cubic graph needs an even order >= 4, got n={n}")
    pairs = [tuple(p) for p in pairs]
    for p in pairs:
        if len(p) != 2:
            raise ValidationError(f"edge {p!r} is not a pair")
        for x in p:
            if not isinstance(x, int) or not 0 <= x < n:
                raise BadVertexId(f"vertex {x!r} outside [0, {n})")
    seen = set()
    for u, v in pairs:
        if u == v:
            raise NotSimple(f"loop at vertex {u}")
        e = edge(u, v)
        if e in seen:
            raise NotSimple(f"parallel edge {e}")
        seen.add(e)
    adj = [[] for _ in range(n)]
    for u, v in seen:
        adj[u].append(v)
        adj[v].append(u)
    for v in range(n):
        if len(adj[v]) != 3:
            raise NotCubic(f"vertex {v} has degree {len(adj[v])}")
    reached = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in reached:
                reached.add(w)
                queue.append(w)
    if len(reached) != n:
        missing = min(set(range(n)) - reached)
        raise NotConnected(f"vertex {missing} unreachable from vertex 0")
    edges = tuple(sorted(seen))
    return CubicGraph(
        n=n,
        adjacency=tuple(tuple(sorted(a)) for a in adj),
        edges=edges,
        _edge_set=frozenset(edges),
    )


def induced_edge_set(g: CubicGraph, s: Iterable[int]) -> EdgeSet:
    """Edges of ``g`` with both endpoints in ``s``."""
    s = set(s)
    for v in s:
        if not isinstance(v, int) or not 0 <= v < g.n:
            raise BadVertexId(f"vertex {v!r} outside [0, {g.n})")
    return frozenset(e for e in g.edges if e[0] in s and e[1] in s)


# graph6 ---------------------------------------------------------------------


def _g6_bit_order(n: int):
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(line: str | bytes) -> CubicGraph:
    if isinstance(line, bytes):
        line = line.decode("ascii")
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise MalformedGraph6("empty graph6 record")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise MalformedGraph6(f"byte outside graph6 range in {s!r}")
    n = codes[0]
    if n == 63:
        raise MalformedGraph6("graph6 orders above 62 are not supported")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = codes[1:]
    if len(payload) != need:
        raise MalformedGraph6(
            f"expected {need} payload bytes for n={n}, got {len(payload)}"
        )
    pairs = []
    for k, (i, j) in enumerate(_g6_bit_order(n)):
        if (payload[k // 6] >> (5 - k % 6)) & 1:
            pairs.append((i, j))
    return from_edge_list(n, pairs)


def write_graph6(g: CubicGraph) -> str:
    n = g.n
    if n > 62:
        raise ValueError("graph6 output is limited to n <= 62")
    bits = [1 if g.has_edge(i, j) else 0 for i, j in _g6_bit_order(n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]):
    """Yield ``(line, graph_or_exception)`` for each non-blank record."""
    for raw in lines:
        s = raw.strip()
        if not s or s == GRAPH6_HEADER:
            continue
        try:
            yield s, parse_graph6(s)
        except ValidationError as exc:
            yield s, exc


# plain edge-list text -------------------------------------------------------


def parse_edge_list_text(text: str) -> CubicGraph:
    """Parse ``"n m"`` followed by ``m`` lines of 0-based ``"u v"`` pairs."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows or len(rows[0]) != 2:
        raise ValidationError("edge-list header must be 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        pairs = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except (ValueError, IndexError) as exc:
        raise ValidationError(f"bad edge-list text: {exc}") from None
    if len(pairs) != m or any(len(r) != 2 for r in rows[1:]):
        raise ValidationError(f"header announces {m} edges, found {len(pairs)}")
    return from_edge_list(n, pairs)


def write_edge_list_text(g: CubicGraph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


# named graphs used across tests, demos and docs -------------------------------


def k4() -> CubicGraph:
    return from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def k33() -> CubicGraph:
    return from_edge_list(6, [(a, b) for a in range(3) for b in range(3, 6)])


def prism3() -> CubicGraph:
    return from_edge_list(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    )


def petersen() -> CubicGraph:
    outer = [(k, (k + 1) % 5) for k in range(5)]
    inner = [(5 + k, 5 + (k + 2) % 5) for k in range(5)]
    spokes = [(k, k + 5) for k in range(5)]
    return from_edge_list(10, outer + inner + spokes)
