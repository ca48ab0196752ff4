"""Walk the Petersen graph through every stage by hand.

Run:  python3 demos/01_petersen_walkthrough.py
"""

from cubicdecomp import (
    chord_indices,
    decompose,
    enumerate_ham_paths,
    petersen,
    verify_decomposition,
    write_graph6,
)

g = petersen()
print(f"Petersen graph: n={g.n}, {len(g.edges)} edges, graph6 {write_graph6(g)}")

# Hamiltonian paths drive everything; classify the first few by their end chords.
for p in list(enumerate_ham_paths(g))[:3]:
    pc = chord_indices(g, p)
    print(f"  path {p.order} -> {pc.kind.value} {pc.as_dict()}")

d, trace = decompose(g)
print(f"\nbranch taken: {trace.branch} via path {trace.path}")
print(f"tree ({len(d.tree)} edges): {sorted(d.tree)}")
print(f"matching: {sorted(d.matching)}")
for c in d.cycles:
    print(f"cycle ({len(c)} edges): {sorted(c)}")

report = verify_decomposition(g, d)
print(f"\nverifier: ok={report.ok}")
print("15 edges = 9 tree + 1 matching + 5 cycle:", len(d.tree) + len(d.matching) + sum(map(len, d.cycles)))
