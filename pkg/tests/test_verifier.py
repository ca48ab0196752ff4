import random

from plans import chordless_cycles, independent_plan_ok, random_plan, single_edge_moves

from cubicdecomp.decomposer import decompose
from cubicdecomp.graph import k4, petersen
from cubicdecomp.model import Decomposition, PartitionPlan
from cubicdecomp.oracle import brute_force_decompose
from cubicdecomp.verifier import report_json, verify_decomposition, verify_plan

STAR = frozenset({(0, 1), (0, 2), (0, 3)})
TRIANGLE = frozenset({(1, 2), (1, 3), (2, 3)})


def test_k4_decomposition_ok():
    report = verify_decomposition(k4(), Decomposition(STAR, frozenset(), (TRIANGLE,)))
    assert report.ok and report.violations == []
    assert '"ok": true' in report_json(report)


def test_k4_broken_cycle():
    broken = (TRIANGLE - {(1, 2)},)
    with_matching = verify_decomposition(k4(), Decomposition(STAR, frozenset({(1, 2)}), broken))
    assert not with_matching.ok
    assert "cycle[0].not_2_regular" in with_matching.checks()
    without = verify_decomposition(k4(), Decomposition(STAR, frozenset(), broken))
    assert {"partition.missing_edge", "cycle[0].not_2_regular"} <= set(without.checks())


def test_overlap_and_foreign_edges():
    report = verify_decomposition(k4(), Decomposition(STAR | {(1, 2)}, frozenset({(4, 5)}), (TRIANGLE,)))
    checks = set(report.checks())
    assert "partition.overlap" in checks
    assert "partition.foreign_edge" in checks


def test_k4_plan_ok():
    assert verify_plan(k4(), PartitionPlan(frozenset({0}), frozenset(), ((1, 2, 3),))).ok


def test_pendant_witness(census):
    # find a leaf with no cycle neighbour: tree on the rest, leaf attached last
    for g in census[10]:
        for c in chordless_cycles(g):
            rest = set(g.vertices) - set(c)
            for x in sorted(rest):
                if any(w in c for w in g.neighbors(x)):
                    continue
                hooks = [w for w in g.neighbors(x) if w in rest]
                core = rest - {x}
                tree = _bfs_tree(g, core)
                if tree is None or not hooks:
                    continue
                tree.add((min(x, hooks[0]), max(x, hooks[0])))
                plan = PartitionPlan(frozenset(rest), frozenset(tree), (c,))
                report = verify_plan(g, plan)
                assert ("tree.pendant_not_on_cycle", x) in report.violations
                return
    raise AssertionError("no pendant gadget found in the census")


def _bfs_tree(g, vs):
    vs = set(vs)
    root = min(vs)
    seen, tree, stack = {root}, set(), [root]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w in vs and w not in seen:
                seen.add(w)
                tree.add((min(u, w), max(u, w)))
                stack.append(w)
    return tree if seen == vs else None


def test_linked_cycles_are_flagged():
    g = petersen()
    plan = PartitionPlan(frozenset(), frozenset(), ((0, 1, 2, 3, 4), (5, 7, 9, 6, 8)))
    assert "cycles.linked" in verify_plan(g, plan).checks()


def test_plan_verdicts_match_independent_checker(census):
    rng = random.Random(5)
    for g in census[8] + census[10]:
        pool = chordless_cycles(g)
        for _ in range(60):
            plan = random_plan(g, rng, pool, noise=0.5)
            assert verify_plan(g, plan).ok == independent_plan_ok(g, plan), plan


def test_single_edge_moves_all_fail(census):
    for g in census[6] + census[8] + [petersen()]:
        for d in (decompose(g)[0], brute_force_decompose(g).found):
            assert verify_decomposition(g, d).ok
            for e, src, dst, bad in single_edge_moves(d):
                assert not verify_decomposition(g, bad).ok, (e, src, dst)
