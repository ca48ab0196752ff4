"""Spanning tree + matching + cycles decompositions of traceable cubic graphs.

Every construction here ends in a :class:`PartitionPlan`: a tree on part of
the vertex set and at most two vertex-disjoint chordless cycles on the rest,
with no edges between cycles and every tree leaf next to a cycle.
:func:`apply_lemma1` turns such a plan into the decomposition.

A Hamiltonian path ``v1..vn`` with non-adjacent ends has chord positions
``jp < j`` (the non-path neighbors of ``v1``) and ``i < ip`` (those of
``vn``).  Paths with ``i < j`` are handled by :func:`case1`, the rest by
:func:`case2` on a path maximizing ``ip - jp``.  Hamiltonian graphs with no
usable path go through :func:`hamiltonian_fallback`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from . import model as M
from .cycles import (
    MissingConnector,
    NoFormedCycle,
    chordless_cycle_formed_by,
    cycles_formed_by,
    has_formed_cycle,
    leftover_segments,
    shortest_monotone_path,
)
from .graph import CubicGraph, edge
from .hampath import HamPath, PathClass, PathKind, chord_indices, enumerate_ham_paths, rank_disjoint
from .model import Decomposition, PartitionPlan, TraceLog
from .oracle import brute_force_decompose
from .verifier import verify_decomposition, verify_plan

log = logging.getLogger(__name__)

DEFAULT_MAX_N_CASE2 = 24
DEFAULT_PATH_CAP = 200_000


class PlanInvalid(ValueError):
    def __init__(self, report):
        super().__init__(f"plan rejected: {report.checks()}")
        self.report = report


class ProofGap(RuntimeError):
    """A construction dictated by the case analysis failed its own checks."""

    def __init__(self, branch: str, detail: str, path=None, violations=None):
        super().__init__(f"{branch}: {detail}")
        self.branch = branch
        self.detail = detail
        self.path = tuple(path) if path is not None else None
        self.violations = violations or []

    def as_record(self) -> dict:
        return {
            "branch": self.branch,
            "detail": self.detail,
            "path": list(self.path) if self.path else None,
            "violations": [[c, w] for c, w in self.violations],
        }


class MaximalityViolation(ProofGap):
    pass


class NotTraceable(ValueError):
    pass


class OracleExhausted(RuntimeError):
    """No decomposition exists for some spanning tree order: a counterexample."""


class Case2Refused(RuntimeError):
    pass


class HamiltonianCycleFound(Exception):
    """Raised inside a case construction that runs into a Hamiltonian cycle."""

    def __init__(self, cycle: Sequence[int], origin: str):
        super().__init__(origin)
        self.cycle = tuple(cycle)
        self.origin = origin


@dataclass
class PlanResult:
    plan: PartitionPlan
    branch: str
    witnesses: dict = field(default_factory=dict)


# tree + cycles -> decomposition ----------------------------------------------


def apply_lemma1(g: CubicGraph, plan: PartitionPlan) -> Decomposition:
    """Grow the plan's tree by every tree-cycle edge; the leftovers form a matching."""
    report = verify_plan(g, plan)
    if not report.ok:
        raise PlanInvalid(report)
    cycle_sets = plan.cycle_edge_sets()
    on_cycle = {v for c in plan.cycles for v in c}
    links = frozenset(e for e in g.edges if (e[0] in on_cycle) != (e[1] in on_cycle))
    tree = frozenset(plan.tree_edges) | links
    used = tree.union(*cycle_sets)
    matching = frozenset(e for e in g.edges if e not in used)
    return Decomposition(tree, matching, cycle_sets)


def _ring(vertices: Sequence[int]):
    return [edge(a, b) for a, b in zip(vertices, vertices[1:])]


def _plan(g: CubicGraph, cycles, pool, extras=()) -> PartitionPlan:
    """Tree = pool edges avoiding every cycle vertex, plus ``extras``."""
    cycles = [tuple(c) for c in cycles]
    gone = {v for c in cycles for v in c}
    tree = {e for e in pool if e[0] not in gone and e[1] not in gone}
    tree.update(edge(*e) for e in extras)
    return PartitionPlan(
        tree_vertices=frozenset(v for v in g.vertices if v not in gone),
        tree_edges=frozenset(tree),
        cycles=tuple(cycles),
    )


def _chordless(g, seg, branch, what):
    try:
        return chordless_cycle_formed_by(g, seg).vertices
    except NoFormedCycle:
        raise ProofGap(branch, f"no cycle formed by {what}") from None


# Case 1: i < j ----------------------------------------------------------------


def _closest_link(g: CubicGraph, p: Sequence[int], q: Sequence[int]):
    """Edge ab, a inside p, b inside q, minimizing the distances from p[0]."""
    dp = {v: k for k, v in enumerate(p[1:-1], 1)}
    dq = {v: k for k, v in enumerate(q[1:-1], 1)}
    best = None
    for a, ka in dp.items():
        for b in g.neighbors(a):
            if b in dq:
                key = (ka + dq[b], ka, dq[b])
                if best is None or key < best[0]:
                    best = (key, a, b)
    if best is None:
        return None
    return best[1], best[2], best[0][1], best[0][2]


def case1(g: CubicGraph, path: HamPath, pc: PathClass) -> PlanResult:
    if pc.kind is not PathKind.OVERLAPPING:
        raise ValueError("case1 needs an overlapping path (i < j)")
    v, n = path.v, path.n
    i, j = pc.i, pc.j
    p1 = [v(j)] + [v(k) for k in range(1, i + 1)]
    p2 = [v(k) for k in range(j, i - 1, -1)]
    p3 = [v(k) for k in range(j, n + 1)] + [v(i)]
    if len(p2) == 2:
        raise HamiltonianCycleFound(p1 + p3[1:-1][::-1], "Case1.P2_order_2")
    frame = [p1, p2, p3]
    pool = set()
    for p in frame:
        pool.update(_ring(p))
    wit = {"i": i, "j": j}

    inner = [set(p[1:-1]) for p in frame]
    pairs = [(0, 1), (0, 2), (1, 2)]
    linked = [
        (r, s) for r, s in pairs
        if any(w in inner[s] for x in inner[r] for w in g.neighbors(x))
    ]
    if not linked:
        branch = M.CASE1_SUB1
        c1 = _chordless(g, p1, branch, "P1")
        c2 = _chordless(g, p2, branch, "P2")
        return PlanResult(_plan(g, [c1, c2], pool), branch, wit)

    r, s = linked[0]
    t = 3 - r - s
    wit["relabel"] = [r + 1, s + 1, t + 1]
    return _case1_linked(g, frame[r], frame[s], frame[t], pool, wit)


def _case1_linked(g, p1, p2, p3, pool, wit) -> PlanResult:
    a, b, da, db = _closest_link(g, p1, p2)
    seg_a, seg_b = p1[:da + 1], p2[:db + 1]
    form_a, form_b = has_formed_cycle(g, seg_a), has_formed_cycle(g, seg_b)
    wit.update(a=a, b=b)

    if not form_a and not form_b:
        cyc = seg_a + seg_b[1:][::-1]
        return PlanResult(_plan(g, [cyc], pool), M.CASE1_SUB2A, wit)
    if form_a and form_b:
        branch = M.CASE1_SUB2B
        c1 = _chordless(g, seg_a, branch, "segment v_j..a")
        c2 = _chordless(g, seg_b, branch, "segment v_j..b")
        return PlanResult(_plan(g, [c1, c2], pool), branch, wit)

    if form_b:
        p1, p2, seg_a, seg_b, a, b = p2, p1, seg_b, seg_a, b, a
        wit.update(swapped=True, a=a, b=b)
    on_p1 = set(p1)
    isolated = [
        c for c in cycles_formed_by(g, seg_a)
        if c.chordless and all(w in on_p1 for x in c.vertices for w in g.neighbors(x))
    ]
    if not isolated:
        branch = M.CASE1_SUB2C_MONO
        mono = shortest_monotone_path(g, seg_a)
        cyc = list(mono.vertices(seg_a)) + seg_b[1:][::-1]
        try:
            left = leftover_segments(seg_a, mono, g, on_p1)
        except MissingConnector as exc:
            raise ProofGap(branch, str(exc)) from None
        wit.update(monotone=list(mono.indices), connectors=[list(e) for e in left.connectors])
        return PlanResult(_plan(g, [cyc], pool, left.connectors), branch, wit)

    c1 = isolated[0].vertices
    wit["isolated_cycle"] = list(c1)
    for label, p in (("P2", p2), ("P3", p3)):
        if has_formed_cycle(g, p):
            c2 = chordless_cycle_formed_by(g, p).vertices
            wit["second_cycle_on"] = label
            return PlanResult(_plan(g, [c1, c2], pool), M.CASE1_SUB2C_I, wit)
    link = _closest_link(g, p2, p3)
    if link is not None:
        a2, b2, da2, db2 = link
        wit.update(a2=a2, b2=b2)
        cyc = p2[:da2 + 1] + p3[1:db2 + 1][::-1]
        return PlanResult(_plan(g, [cyc], pool), M.CASE1_SUB2C_II, wit)
    cyc = p2 + p3[1:-1][::-1]
    return PlanResult(_plan(g, [cyc], pool), M.CASE1_SUB2C_III, wit)


# Case 2: j < i on every Hamiltonian path ----------------------------------------


class _View:
    """A Hamiltonian path with 1-based positions, possibly read backwards."""

    def __init__(self, g: CubicGraph, order: Sequence[int], pc: PathClass, mirrored=False):
        self.g = g
        self.order = tuple(order)
        self.n = len(order)
        self.pos = {x: k + 1 for k, x in enumerate(order)}
        self.jp, self.j, self.i, self.ip = pc.jp, pc.j, pc.i, pc.ip
        self.pc = pc
        self.mirrored = mirrored

    def v(self, k: int) -> int:
        return self.order[k - 1]

    def seg(self, a: int, b: int) -> List[int]:
        step = 1 if b >= a else -1
        return [self.order[k - 1] for k in range(a, b + step, step)]

    def third(self, k: int) -> int:
        """Position of the non-path neighbor of the interior vertex at ``k``."""
        x = self.v(k)
        (w,) = [w for w in self.g.neighbors(x) if w not in (self.v(k - 1), self.v(k + 1))]
        return self.pos[w]

    def path_edges(self):
        return set(_ring(self.order))

    def flip(self, k: int) -> int:
        return self.n + 1 - k

    def mirror(self) -> "_View":
        f = self.flip
        pc = PathClass(self.pc.kind, f(self.ip), f(self.i), f(self.j), f(self.jp))
        return _View(self.g, self.order[::-1], pc, not self.mirrored)

    def long_chords(self):
        """Edges v_s v_t with s < j and t > i, as (s, t)."""
        out = []
        for s in range(2, self.j):
            t = self.third(s)
            if t > self.i:
                out.append((s, t))
        return out


def case2(g: CubicGraph, path: HamPath, pc: PathClass) -> PlanResult:
    if pc.kind is not PathKind.DISJOINT:
        raise ValueError("case2 needs a disjoint path (j < i)")
    view = _View(g, path.order, pc)
    jp, ip = view.jp, view.ip
    long = view.long_chords()
    spanning = [(s, t) for s, t in long if s < jp and t > ip]
    wit = {"long_chords": [list(c) for c in long]}

    if not spanning:
        branch = M.CASE2_SUB1
        c1 = _chordless(g, view.seg(1, jp), branch, "v1..v_jp")
        c2 = _chordless(g, view.seg(ip, view.n), branch, "v_ip..vn")
        pool = view.path_edges() | {edge(view.v(ip), view.v(view.n)), edge(view.v(jp), view.v(1))}
        return PlanResult(_plan(g, [c1, c2], pool), branch, wit)

    if len(long) >= 2:
        best = None
        for x in range(len(long)):
            for y in range(x + 1, len(long)):
                (gg, ff), (hh, ee) = long[x], long[y]  # gg < hh
                key = (abs(gg - hh) + abs(ee - ff), gg, hh, ee, ff)
                if best is None or key < best:
                    best = key
        _, gg, hh, ee, ff = best
        wit.update(g=gg, h=hh, e=ee, f=ff)
        return _case2_pair(view, gg, hh, ee, ff, wit)

    (s, t), = long
    wit.update(s=s, t=t)
    return _case2_single(view, s, t, wit)


def _main_pool(view: _View):
    return view.path_edges() | {
        edge(view.v(1), view.v(view.j)),
        edge(view.v(view.i), view.v(view.n)),
    }


def _case2_pair(view: _View, gg, hh, ee, ff, wit) -> PlanResult:
    g = view.g
    left, right = view.seg(gg, hh), view.seg(ee, ff)
    form_l, form_r = has_formed_cycle(g, left), has_formed_cycle(g, right)
    if not form_l and not form_r:
        return PlanResult(_plan(g, [left + right], _main_pool(view)), M.CASE2_SUB2A, wit)
    if form_l and form_r:
        branch = M.CASE2_SUB2C
        c1 = _chordless(g, left, branch, "v_g..v_h")
        c2 = _chordless(g, right, branch, "v_e..v_f")
        return PlanResult(_plan(g, [c1, c2], _main_pool(view)), branch, wit)
    if form_l:
        f = view.flip
        view = view.mirror()
        gg, hh, ee, ff = f(ff), f(ee), f(hh), f(gg)
        wit["mirrored"] = True
    return _case2_one_sided(view, gg, hh, ee, ff, wit)


def _case2_one_sided(view: _View, gg, hh, ee, ff, wit) -> PlanResult:
    """The segment v_e..v_f forms cycles, v_g..v_h does not."""
    g = view.g
    left, right = view.seg(gg, hh), view.seg(ee, ff)
    head = set(view.seg(1, view.j))
    free = [
        c for c in cycles_formed_by(g, right)
        if c.chordless and not any(w in head for x in c.vertices for w in g.neighbors(x))
    ]
    if free:
        branch = M.CASE2_SUB2B_CYCLES
        c1 = free[0].vertices
        c2 = _chordless(g, view.seg(1, view.j), branch, "v1..v_j")
        return PlanResult(_plan(g, [c1, c2], _main_pool(view)), branch, wit)
    branch = M.CASE2_SUB2B_MONO
    mono = shortest_monotone_path(g, right)
    cyc = list(mono.vertices(right)) + left
    try:
        rest = leftover_segments(right, mono, g, set(right))
    except MissingConnector as exc:
        raise ProofGap(branch, str(exc)) from None
    wit.update(monotone=list(mono.indices), connectors=[list(e) for e in rest.connectors])
    return PlanResult(_plan(g, [cyc], _main_pool(view), rest.connectors), branch, wit)


def _case2_single(view: _View, s, t, wit) -> PlanResult:
    g = view.g
    n, jp, j, i, ip = view.n, view.jp, view.j, view.i, view.ip
    f = view.flip
    if has_formed_cycle(g, view.seg(s + 1, j)) or has_formed_cycle(g, view.seg(i, t - 1)):
        if not has_formed_cycle(g, view.seg(s + 1, j)):
            view = view.mirror()
            s, t = f(t), f(s)
            wit["mirrored"] = True
        branch = M.CASE2_SUB3_CYCLES
        c1 = _chordless(g, view.seg(s + 1, view.j), branch, "v_{s+1}..v_j")
        c2 = _chordless(g, view.seg(view.i, n), branch, "v_i..v_n")
        return PlanResult(_plan(g, [c1, c2], _main_pool(view)), branch, wit)

    if s == jp - 1 and t == ip + 1:
        cyc = view.seg(1, s) + view.seg(t, n) + view.seg(ip, jp)
        raise HamiltonianCycleFound(cyc, "Case2.Sub3.hamiltonian")
    if s == jp - 1:
        view = view.mirror()
        s, t = f(t), f(s)
        wit["mirrored"] = True
    branch = M.CASE2_SUB3_K
    jp, j, i, ip = view.jp, view.j, view.i, view.ip
    k = view.third(jp - 1)
    wit["k"] = k
    if k < jp - 1:
        raise MaximalityViolation(
            branch, f"v_{jp - 1} has a chord back to v_{k}", view.order
        )
    if not j < k < i:
        raise ProofGap(branch, f"expected j < k < i, got j={j} k={k} i={i}", view.order)
    c1 = [view.v(1)] + view.seg(jp, j)
    c2 = [view.v(n)] + view.seg(ip, i)
    pool = view.path_edges() | {edge(view.v(s), view.v(t)), edge(view.v(k), view.v(jp - 1))}
    return PlanResult(_plan(g, [c1, c2], pool), branch, wit)


# routing ----------------------------------------------------------------------


def _checked(g: CubicGraph, result: PlanResult, path: Optional[HamPath]):
    report = verify_plan(g, result.plan)
    if not report.ok:
        raise ProofGap(
            result.branch, "plan fails the tree/cycle preconditions",
            path.order if path else None, report.violations,
        )
    d = apply_lemma1(g, result.plan)
    report = verify_decomposition(g, d)
    if not report.ok:
        raise ProofGap(result.branch, "decomposition fails verification",
                       path.order if path else None, report.violations)
    return d


def _trace(branch, path, pc, witnesses, gaps) -> TraceLog:
    return TraceLog(
        branch=branch,
        path=path.order if path is not None else None,
        chords=pc.as_dict() if pc is not None else None,
        witnesses=witnesses,
        proof_gaps=[gp.as_record() for gp in gaps],
    )


def _try_case(g, build, path, pc, gaps):
    try:
        result = build(g, path, pc)
        return result, _checked(g, result, path)
    except ProofGap as gap:
        if gap.path is None:
            gap.path = path.order
        log.warning("proof gap: %s", gap)
        gaps.append(gap)
        return None


def _orientations(p: HamPath):
    return (p, p.reversed())


def _run_case2(g, disjoint, gaps, *, follow_cycles):
    """Case 2 on the best-ranked path; later ranks are retries after a gap."""
    for path, pc in rank_disjoint(disjoint):
        try:
            got = _try_case(g, case2, path, pc, gaps)
        except HamiltonianCycleFound as hc:
            if follow_cycles:
                return hc
            continue
        if got is not None:
            return path, pc, got
    return None


def decompose(
    g: CubicGraph,
    *,
    max_n_case2: int = DEFAULT_MAX_N_CASE2,
    force: bool = False,
    path_cap: int = DEFAULT_PATH_CAP,
) -> Tuple[Decomposition, TraceLog]:
    """Decompose ``g`` following the case analysis on its Hamiltonian paths.

    Paths are scanned in enumeration order.  The first overlapping
    orientation goes to Case 1.  A path whose ends are adjacent sends the
    graph to :func:`hamiltonian_fallback` unless an overlapping path was
    already seen.  Case 2 needs the whole enumeration, so above
    ``max_n_case2`` vertices it is refused unless ``force`` is set.
    """
    exhaustive = force or g.n <= max_n_case2
    gaps: List[ProofGap] = []
    disjoint = []
    overlapping_seen = False
    ham_cycle = None
    any_path = False
    for p in enumerate_ham_paths(g, cap=None if exhaustive else path_cap):
        any_path = True
        for q in _orientations(p):
            pc = chord_indices(g, q)
            if pc.kind is PathKind.OVERLAPPING:
                overlapping_seen = True
                try:
                    got = _try_case(g, case1, q, pc, gaps)
                except HamiltonianCycleFound as hc:
                    return hamiltonian_fallback(g, hc.cycle, gaps=gaps, origin=hc.origin,
                                                max_n_case2=max_n_case2, force=force)
                if got is not None:
                    result, d = got
                    return d, _trace(result.branch, q, pc, result.witnesses, gaps)
            elif pc.kind is PathKind.HAMILTONIAN_ENDPOINTS:
                if not overlapping_seen:
                    return hamiltonian_fallback(g, q.order, gaps=gaps, origin="path_endpoints",
                                                max_n_case2=max_n_case2, force=force)
                if ham_cycle is None:
                    ham_cycle = q.order
            else:
                disjoint.append((q, pc))
    if not any_path:
        raise NotTraceable("no Hamiltonian path")
    if not exhaustive:
        raise Case2Refused(
            f"n={g.n} exceeds max_n_case2={max_n_case2}; no Case 1 witness in "
            f"the first {path_cap} paths"
        )
    if not overlapping_seen and disjoint:
        out = _run_case2(g, disjoint, gaps, follow_cycles=True)
        if isinstance(out, HamiltonianCycleFound):
            return hamiltonian_fallback(g, out.cycle, gaps=gaps, origin=out.origin,
                                        max_n_case2=max_n_case2, force=force)
        if out is not None:
            path, pc, (result, d) = out
            return d, _trace(result.branch, path, pc, result.witnesses, gaps)
    if ham_cycle is not None:
        return hamiltonian_fallback(g, ham_cycle, gaps=gaps, origin="path_endpoints",
                                    max_n_case2=max_n_case2, force=force)
    return _oracle(g, M.ORACLE_ONLY, {}, gaps)


# Hamiltonian fallback -----------------------------------------------------------


def rotation_paths(g: CubicGraph, cycle: Sequence[int]) -> List[HamPath]:
    """Paths with non-adjacent ends, one end-rotation away from ``cycle``."""
    n = len(cycle)
    found = set()
    for cut in range(n):
        base = list(cycle[cut + 1:]) + list(cycle[:cut + 1])
        for p in (base, base[::-1]):
            head = p[0]
            for w in g.neighbors(head):
                k = p.index(w)
                if 2 <= k <= n - 2:
                    q = p[k - 1::-1] + p[k:]
                    if not g.has_edge(q[0], q[-1]):
                        found.add(min(tuple(q), tuple(q[::-1])))
    return [HamPath(o) for o in sorted(found)]


def _rotation_rung(g, cycle, gaps, exhaustive, path_cap):
    def overlapping_attempts(paths):
        for p in paths:
            for q in _orientations(p):
                pc = chord_indices(g, q)
                yield q, pc

    for q, pc in overlapping_attempts(rotation_paths(g, cycle)):
        if pc.kind is PathKind.OVERLAPPING:
            try:
                got = _try_case(g, case1, q, pc, gaps)
            except HamiltonianCycleFound:
                continue
            if got is not None:
                return q, pc, got, "rotation"

    disjoint, overlapping_seen = [], False
    paths = enumerate_ham_paths(g, cap=None if exhaustive else path_cap)
    for q, pc in overlapping_attempts(paths):
        if pc.kind is PathKind.OVERLAPPING:
            overlapping_seen = True
            try:
                got = _try_case(g, case1, q, pc, gaps)
            except HamiltonianCycleFound:
                continue
            if got is not None:
                return q, pc, got, "enumeration"
        elif pc.kind is PathKind.DISJOINT:
            disjoint.append((q, pc))
    if exhaustive and not overlapping_seen and disjoint:
        out = _run_case2(g, disjoint, gaps, follow_cycles=False)
        if out is not None:
            path, pc, got = out
            return path, pc, got, "enumeration"
    return None


def hamiltonian_fallback(
    g: CubicGraph,
    cycle: Sequence[int],
    *,
    gaps: Optional[List[ProofGap]] = None,
    origin: str = "given",
    max_n_case2: int = DEFAULT_MAX_N_CASE2,
    force: bool = False,
    path_cap: int = DEFAULT_PATH_CAP,
) -> Tuple[Decomposition, TraceLog]:
    """Decompose a Hamiltonian graph, given one of its Hamiltonian cycles.

    Rungs, first success wins: rotate the cycle into paths with
    non-adjacent ends and rerun the case analysis; the star-plus-triangle
    split of K4; brute force.
    """
    gaps = [] if gaps is None else gaps
    cycle = tuple(cycle)
    if sorted(cycle) != list(g.vertices) or not all(
        g.has_edge(a, b) for a, b in zip(cycle, cycle[1:] + cycle[:1])
    ):
        raise ValueError("not a Hamiltonian cycle of g")
    wit = {"cycle": list(cycle), "origin": origin}
    exhaustive = force or g.n <= max_n_case2
    out = _rotation_rung(g, cycle, gaps, exhaustive, path_cap)
    if out is not None:
        path, pc, (result, d), source = out
        wit.update(inner_branch=result.branch, source=source, inner=result.witnesses)
        return d, _trace(M.FALLBACK_ROTATION, path, pc, wit, gaps)
    if g.n == 4:
        others = tuple(v for v in g.vertices if v != 0)
        plan = PartitionPlan(frozenset({0}), frozenset(), (others,))
        return apply_lemma1(g, plan), _trace(M.FALLBACK_K4, None, None, wit, gaps)
    return _oracle(g, M.FALLBACK_ORACLE, wit, gaps)


def _oracle(g, branch, wit, gaps):
    res = brute_force_decompose(g)
    if res.found is None:
        raise OracleExhausted(f"no decomposition after {res.trees_examined} spanning trees")
    wit = dict(wit, trees_examined=res.trees_examined)
    return res.found, _trace(branch, None, None, wit, gaps)


def decompose_all_paths(g: CubicGraph, paths: Optional[Iterable[HamPath]] = None):
    """Run the case constructions on every orientation of every path.

    Yields ``(path, branch_or_None, gap_or_None)``; a debugging and coverage
    aid that ignores the routing policy.
    """
    paths = enumerate_ham_paths(g) if paths is None else paths
    for p in paths:
        for q in _orientations(p):
            pc = chord_indices(g, q)
            if pc.kind is PathKind.HAMILTONIAN_ENDPOINTS:
                continue
            build = case1 if pc.kind is PathKind.OVERLAPPING else case2
            gaps: List[ProofGap] = []
            try:
                got = _try_case(g, build, q, pc, gaps)
            except HamiltonianCycleFound as hc:
                yield q, hc.origin, None
                continue
            yield q, (got[0].branch if got else None), (gaps[0] if gaps else None)
