"""Sweep decompose + verify (+ oracle) over a corpus, one JSON record per graph."""

from __future__ import annotations

import json
import logging
import statistics
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import IO, Iterable, Iterator, List, Optional, Tuple

from . import model as M
from .corpus import CorpusSpec, load_corpus
from .decomposer import DEFAULT_MAX_N_CASE2, Case2Refused, NotTraceable, decompose
from .graph import ValidationError, parse_graph6
from .oracle import brute_force_decompose
from .verifier import verify_decomposition

log = logging.getLogger(__name__)

TIMING_FIELDS = ("millis",)


@dataclass
class BatchRecord:
    graph6: str
    n: Optional[int] = None
    traceable: Optional[bool] = None
    branch: Optional[str] = None
    leaves: List[str] = field(default_factory=list)
    verified: bool = False
    oracle_agrees: Optional[bool] = None
    cycle_count: Optional[int] = None
    proof_gaps: int = 0
    error: Optional[str] = None
    millis: float = 0.0

    @property
    def failed(self) -> bool:
        if self.error is not None and self.error != "NotTraceable":
            return True
        if self.traceable and not self.verified:
            return True
        if self.proof_gaps or self.oracle_agrees is False:
            return True
        return any(M.is_case_leaf(x) for x in self.leaves) and (self.cycle_count or 0) > 2

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def process_graph(label: str, graph, oracle: bool = False,
                  max_n_case2: int = DEFAULT_MAX_N_CASE2, force: bool = False) -> BatchRecord:
    """Run one graph; per-graph errors end up in the record, never raised."""
    rec = BatchRecord(graph6=label)
    start = time.perf_counter()
    try:
        if isinstance(graph, Exception):
            raise graph
        if graph is None:
            graph = parse_graph6(label)
        rec.n = graph.n
        try:
            d, trace = decompose(graph, max_n_case2=max_n_case2, force=force)
        except NotTraceable:
            rec.traceable = False
            rec.error = "NotTraceable"
        else:
            rec.traceable = True
            rec.branch = trace.branch
            rec.leaves = list(trace.leaves)
            rec.verified = verify_decomposition(graph, d).ok
            rec.cycle_count = len(d.cycles)
            rec.proof_gaps = len(trace.proof_gaps)
        if oracle:
            res = brute_force_decompose(graph)
            rec.oracle_agrees = res.found is not None and verify_decomposition(graph, res.found).ok
    except ValidationError as exc:
        rec.error = f"{type(exc).__name__}: {exc}"
    except Case2Refused as exc:
        rec.error = f"Case2Refused: {exc}"
    except Exception as exc:  # recorded, the sweep goes on
        log.exception("graph %s crashed", label)
        rec.error = f"{type(exc).__name__}: {exc}"
    rec.millis = round((time.perf_counter() - start) * 1000, 3)
    return rec


def _job(args) -> BatchRecord:
    label, graph, oracle, max_n_case2, force = args
    return process_graph(label, graph, oracle, max_n_case2, force)


def iter_batch(
    spec: CorpusSpec,
    *,
    oracle: bool = False,
    workers: int = 1,
    max_n_case2: int = DEFAULT_MAX_N_CASE2,
    force: bool = False,
) -> Iterator[BatchRecord]:
    """Records in corpus order, whatever the number of workers."""
    jobs = ((label, g, oracle, max_n_case2, force) for label, g in load_corpus(spec))
    if workers <= 1:
        yield from map(_job, jobs)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_job, jobs, chunksize=4)


def summarize(records: Iterable[BatchRecord], spec: Optional[CorpusSpec] = None) -> dict:
    records = list(records)
    branches = Counter(r.branch for r in records if r.branch)
    leaves = Counter(x for r in records for x in r.leaves)
    times = sorted(r.millis for r in records)
    case_cycles = [r.cycle_count or 0 for r in records if any(M.is_case_leaf(x) for x in r.leaves)]
    failures = [r.graph6 for r in records if r.failed]
    if len(times) >= 2:
        cuts = statistics.quantiles(times, n=100, method="inclusive")
        pct = {"p50": cuts[49], "p90": cuts[89], "p99": cuts[98], "max": times[-1]}
    else:
        pct = {"p50": times[0] if times else 0.0, "max": times[-1] if times else 0.0}
    return {
        "corpus": spec.describe() if spec else None,
        "graphs": len(records),
        "traceable": sum(1 for r in records if r.traceable),
        "verified": sum(1 for r in records if r.verified),
        "errors": sum(1 for r in records if r.error and r.error != "NotTraceable"),
        "not_traceable": sum(1 for r in records if r.error == "NotTraceable"),
        "proof_gaps": sum(r.proof_gaps for r in records),
        "oracle_checked": sum(1 for r in records if r.oracle_agrees is not None),
        "oracle_disagreements": sum(1 for r in records if r.oracle_agrees is False),
        "max_cycles_case_branches": max(case_cycles, default=0),
        "branch_histogram": dict(sorted(branches.items())),
        "leaf_histogram": dict(sorted(leaves.items())),
        "failures": len(failures),
        "failed_graphs": failures,
        "millis": {k: round(v, 3) for k, v in pct.items()},
    }


def run_batch(
    spec: CorpusSpec,
    *,
    oracle: bool = False,
    workers: int = 1,
    out: Optional[IO[str]] = None,
    max_n_case2: int = DEFAULT_MAX_N_CASE2,
    force: bool = False,
) -> Tuple[List[BatchRecord], dict]:
    """Run the sweep, appending JSONL records to ``out`` as they arrive."""
    records = []
    for rec in iter_batch(spec, oracle=oracle, workers=workers,
                          max_n_case2=max_n_case2, force=force):
        records.append(rec)
        if out is not None:
            out.write(rec.to_json() + "\n")
            out.flush()
    return records, summarize(records, spec)


def strip_timing(line: str) -> dict:
    """A JSONL record without its timing fields, for reproducibility checks."""
    data = json.loads(line)
    for k in TIMING_FIELDS:
        data.pop(k, None)
    return data
