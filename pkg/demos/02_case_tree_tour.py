"""Visit every leaf of the case analysis with its witness graph and path.

Run:  python3 demos/02_case_tree_tour.py
"""

import json
import pathlib

from cubicdecomp import apply_lemma1, case1, case2, chord_indices, parse_graph6, verify_decomposition
from cubicdecomp.decomposer import HamiltonianCycleFound
from cubicdecomp.hampath import HamPath, PathKind

rows = json.loads((pathlib.Path(__file__).parents[1] / "tests" / "data" / "witnesses.json").read_text())

for row in rows:
    g = parse_graph6(row["graph6"])
    path = HamPath(tuple(row["path"]))
    pc = chord_indices(g, path)
    build = case1 if pc.kind is PathKind.OVERLAPPING else case2
    print(f"{row['leaf']:<24} n={g.n:<3} {pc.kind.value:<11} jp={pc.jp} j={pc.j} i={pc.i} ip={pc.ip}")
    try:
        result = build(g, path, pc)
    except HamiltonianCycleFound as hc:
        print(f"    found a Hamiltonian cycle instead: {list(hc.cycle)}")
        continue
    d = apply_lemma1(g, result.plan)
    cycles = [list(c) for c in result.plan.cycles]
    print(f"    cycles {cycles}; tree {len(d.tree)} edges, matching {len(d.matching)}; "
          f"verified={verify_decomposition(g, d).ok}")
