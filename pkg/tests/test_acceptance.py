"""Acceptance criteria, one test each.

Every test records a single PASS/FAIL line (shown in the terminal summary
under "acceptance criteria", and on stdout with ``-s``) before asserting.
"""

import json
import random
import subprocess
import sys
import time
from collections import Counter

from plans import chordless_cycles, random_plan, single_edge_moves
from test_decomposer import HAMILTONIAN_ARMS, run_case

from cubicdecomp import model as M
from cubicdecomp.batch import strip_timing
from cubicdecomp.corpus import random_graphs
from cubicdecomp.decomposer import HamiltonianCycleFound, NotTraceable, apply_lemma1, decompose
from cubicdecomp.graph import k4, k33, petersen
from cubicdecomp.oracle import brute_force_decompose, count_spanning_trees, iter_spanning_trees
from cubicdecomp.verifier import verify_decomposition, verify_plan

SMALL = (4, 6, 8, 10)


def _decompose_all(graphs):
    rows = []
    for g in graphs:
        try:
            d, trace = decompose(g)
        except NotTraceable:
            rows.append((g, None, None))
            continue
        rows.append((g, d, trace))
    return rows


def test_1_exhaustive_theorem_check(census, acceptance):
    t0 = time.perf_counter()
    rows = _decompose_all(g for n in SMALL for g in census[n])
    bad = [g for g, d, t in rows if d is not None and not verify_decomposition(g, d).ok]
    gaps = sum(len(t.proof_gaps) for _, d, t in rows if t is not None)
    traceable = sum(1 for _, d, _ in rows if d is not None)
    secs = time.perf_counter() - t0
    sizes = [len(census[n]) for n in SMALL]
    ok = sizes == [1, 2, 5, 19] and not bad and gaps == 0 and secs < 10
    acceptance(1, "exhaustive theorem check n<=10", ok,
               f"census sizes {sizes}, {traceable}/{len(rows)} traceable, "
               f"{len(bad)} unverified, {gaps} proof gaps, {secs:.2f}s (limit 10s)")


def test_2_at_most_two_cycles(census, acceptance):
    graphs = [g for n in SMALL for g in census[n]] + random_graphs(16, 500, seed=16)
    worst, case_runs, unverified = 0, 0, 0
    for g, d, trace in _decompose_all(graphs):
        if d is None:
            continue
        unverified += not verify_decomposition(g, d).ok
        if any(M.is_case_leaf(x) for x in trace.leaves):
            case_runs += 1
            worst = max(worst, len(d.cycles))
    ok = worst <= 2 and unverified == 0
    acceptance(2, "case-branch decompositions have <= 2 cycles", ok,
               f"{case_runs} case-branch decompositions over census + 500 random n=16 (seed 16), "
               f"max cycles {worst}, {unverified} unverified")


def test_3_oracle_agreement(census, acceptance):
    t0 = time.perf_counter()
    total, agree = 0, 0
    for n in SMALL:
        for g in census[n]:
            total += 1
            res = brute_force_decompose(g)
            d, _ = decompose(g)
            if res.found is not None and verify_decomposition(g, res.found).ok \
                    and verify_decomposition(g, d).ok:
                agree += 1
    secs = time.perf_counter() - t0
    ok = agree == total and secs < 120
    acceptance(3, "oracle agreement n<=10", ok,
               f"{agree}/{total} graphs with both outputs verified, {secs:.2f}s (limit 120s)")


def test_4_tree_growth_fuzz(census, acceptance):
    rng = random.Random(2024)
    graphs = [g for n in (6, 8, 10) for g in census[n]]
    pools = {id(g): chordless_cycles(g) for g in graphs}
    cases, accepted, failures = 0, 0, 0
    while cases < 10_000:
        g = rng.choice(graphs)
        plan = random_plan(g, rng, pools[id(g)])
        cases += 1
        if verify_plan(g, plan).ok:
            accepted += 1
            failures += not verify_decomposition(g, apply_lemma1(g, plan)).ok
    ok = cases >= 10_000 and failures == 0 and accepted > 0
    acceptance(4, "tree-growth fuzz (apply_lemma1)", ok,
               f"{cases} generated plans, {accepted} accepted by verify_plan, {failures} failures")


def test_5_verifier_mutations(census, acceptance):
    pool = [g for n in SMALL for g in census[n]]
    decs = [(g, decompose(g)[0]) for g in pool]
    decs += [(g, brute_force_decompose(g).found) for g in pool]
    for g in random_graphs(12, 200, seed=5):
        if len(decs) >= 100:
            break
        decs.append((g, decompose(g)[0]))
    decs = decs[:100]
    moves, escapes = 0, 0
    for g, d in decs:
        assert verify_decomposition(g, d).ok
        for _, _, _, bad in single_edge_moves(d):
            moves += 1
            escapes += verify_decomposition(g, bad).ok
    ok = len(decs) == 100 and escapes == 0
    acceptance(5, "verifier mutation completeness", ok,
               f"{len(decs)} decompositions, {moves} single-edge moves, {escapes} escapes")


def test_6_spanning_tree_enumeration(census, acceptance):
    mismatches = []
    for n in (4, 6, 8):
        for g in census[n]:
            visited = sum(1 for _ in iter_spanning_trees(g))
            if visited != count_spanning_trees(g):
                mismatches.append(g)
    known = (count_spanning_trees(k4()), count_spanning_trees(k33()))
    ok = not mismatches and known == (16, 81)
    acceptance(6, "spanning-tree enumeration soundness", ok,
               f"{len(mismatches)} mismatches over the n<=8 census; K4={known[0]}, K3,3={known[1]}")


def test_7_petersen(acceptance):
    g = petersen()
    d, trace = decompose(g)
    sizes = d.part_sizes()
    ok = (verify_decomposition(g, d).ok and sizes["tree"] == 9
          and sizes["matching"] + sum(sizes["cycles"]) == 6
          and sizes == {"tree": 9, "matching": 1, "cycles": [5]})
    acceptance(7, "Petersen regression", ok,
               f"branch {trace.branch}, tree {sizes['tree']}, matching {sizes['matching']}, "
               f"cycles {sizes['cycles']}")


def test_8_branch_coverage(census, census12, witnesses, acceptance):
    hist = Counter()
    for g, d, trace in _decompose_all([g for n in SMALL for g in census[n]] + census12):
        if trace is not None and not trace.proof_gaps:
            hist.update(trace.leaves)
    for leaf, (g, path) in sorted(witnesses.items()):
        try:
            result, _ = run_case(g, path)
        except HamiltonianCycleFound as hc:
            hist[hc.origin] += 1
            continue
        if verify_decomposition(g, apply_lemma1(g, result.plan)).ok:
            hist[result.branch] += 1
    required = set(M.CASE_LEAVES) | set(M.FALLBACK_LEAVES) | {"Case2.Sub3.hamiltonian"}
    missing = sorted(required - set(hist))
    ok = not missing
    acceptance(8, "branch coverage", ok,
               f"{len(required) - len(missing)}/{len(required)} leaves fired; missing {missing}; "
               f"histogram {json.dumps(dict(sorted(hist.items())), separators=(',', ':'))}")
    assert set(HAMILTONIAN_ARMS) <= set(hist)


def test_9_batch_determinism(tmp_path, acceptance):
    outs = []
    codes = []
    for k in range(2):
        dest = tmp_path / f"run{k}.jsonl"
        proc = subprocess.run(
            [sys.executable, "-m", "cubicdecomp", "batch", "--exhaustive", "10", "--oracle",
             "--out", str(dest)],
            capture_output=True, text=True, check=False,
        )
        codes.append(proc.returncode)
        outs.append(dest.read_text().splitlines())
    norm = [[json.dumps(strip_timing(x), sort_keys=True) for x in lines] for lines in outs]
    ok = codes == [0, 0] and len(outs[0]) == 19 and norm[0] == norm[1]
    acceptance(9, "batch determinism", ok,
               f"exit codes {codes}, {len(outs[0])} and {len(outs[1])} records, "
               f"identical modulo timing: {norm[0] == norm[1]}")
