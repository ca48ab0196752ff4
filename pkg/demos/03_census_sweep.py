"""Sweep the n = 4..10 census through the batch runner, with the oracle on.

Run:  python3 demos/03_census_sweep.py
"""

import io
import json

from cubicdecomp.batch import run_batch
from cubicdecomp.corpus import CorpusSpec

for n in (4, 6, 8, 10):
    out = io.StringIO()
    records, summary = run_batch(CorpusSpec("exhaustive", n=n), oracle=True, out=out)
    print(f"n={n}: {summary['graphs']} graphs, {summary['verified']} verified, "
          f"{summary['failures']} failures, oracle disagreements {summary['oracle_disagreements']}")
    for leaf, count in summary["leaf_histogram"].items():
        print(f"    {leaf:<32} {count}")

print("\nlast record of the n=10 sweep:")
print(json.dumps(json.loads(out.getvalue().splitlines()[-1]), indent=2))
