import io
import json

from cubicdecomp import model as M
from cubicdecomp.batch import BatchRecord, process_graph, run_batch, strip_timing, summarize
from cubicdecomp.corpus import CorpusSpec
from cubicdecomp.graph import k4


def test_exhaustive_10_with_oracle():
    out = io.StringIO()
    records, summary = run_batch(CorpusSpec("exhaustive", n=10), oracle=True, out=out)
    lines = out.getvalue().splitlines()
    assert len(records) == len(lines) == 19
    assert all(r.verified and r.oracle_agrees for r in records)
    assert summary["failures"] == 0 and summary["graphs"] == 19
    assert json.loads(lines[0])["graph6"] == records[0].graph6


def test_malformed_line_is_recorded(tmp_path):
    f = tmp_path / "census.g6"
    f.write_text("C~\n?!?\nIheA@GUAo\n")
    records, summary = run_batch(CorpusSpec("census-file", path=str(f)))
    assert [r.verified for r in records] == [True, False, True]
    assert records[1].error.startswith("MalformedGraph6")
    assert summary["failures"] == 1 and summary["failed_graphs"] == ["?!?"]


def test_random_16_reaches_both_cases():
    records, summary = run_batch(CorpusSpec("random", n=16, count=200, seed=0))
    leaves = summary["leaf_histogram"]
    assert any(k.startswith("Case1.") for k in leaves)
    assert any(k.startswith("Case2.") for k in leaves)
    assert summary["failures"] == 0
    assert summary["max_cycles_case_branches"] <= 2


def test_workers_keep_input_order():
    spec = CorpusSpec("random", n=12, count=12, seed=4)
    one, two = io.StringIO(), io.StringIO()
    run_batch(spec, out=one)
    run_batch(spec, workers=2, out=two)
    strip = lambda s: [strip_timing(x) for x in s.getvalue().splitlines()]  # noqa: E731
    assert strip(one) == strip(two)


def test_failure_accounting():
    ok = process_graph("C~", k4())
    assert not ok.failed and ok.branch == M.FALLBACK_K4
    bad = BatchRecord("x", n=4, traceable=True, branch="Case1.Sub2.a", leaves=["Case1.Sub2.a"],
                      verified=False)
    gap = BatchRecord("y", n=4, traceable=True, branch="Oracle", leaves=["Oracle"],
                      verified=True, proof_gaps=2)
    many = BatchRecord("z", n=4, traceable=True, branch="Case1.Sub1", leaves=["Case1.Sub1"],
                       verified=True, cycle_count=3)
    nt = BatchRecord("w", n=16, traceable=False, error="NotTraceable")
    summary = summarize([ok, bad, gap, many, nt])
    assert summary["failures"] == 3
    assert summary["failed_graphs"] == ["x", "y", "z"]
    assert summary["not_traceable"] == 1


def test_record_json_has_the_contract_fields():
    data = json.loads(process_graph("C~", None).to_json())
    for key in ("graph6", "n", "traceable", "branch", "verified", "oracle_agrees", "cycle_count", "millis"):
        assert key in data
