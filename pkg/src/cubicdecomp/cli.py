"""Command-line entry point: ``cubicdecomp <subcommand> ...``.

Data goes to stdout as JSON or JSONL, diagnostics go to stderr.  Exit codes:
0 clean, 1 verification failure / proof gap / no result, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import logging
import sys
from typing import List, Optional

from . import batch as B
from .corpus import MAX_EXHAUSTIVE_N, CorpusSpec, generate_exhaustive, random_graphs
from .decomposer import DEFAULT_MAX_N_CASE2, Case2Refused, NotTraceable, OracleExhausted, decompose
from .graph import (
    CubicGraph,
    ValidationError,
    from_edge_list,
    parse_edge_list_text,
    parse_graph6,
    write_graph6,
)
from .hampath import chord_indices, enumerate_ham_paths
from .model import Decomposition
from .oracle import BudgetExhausted, brute_force_decompose
from .verifier import verify_decomposition

log = logging.getLogger("cubicdecomp")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")


def _parse_graph_text(text: str) -> CubicGraph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) == 1 and len(lines[0].split()) == 1:
        return parse_graph6(lines[0])
    return parse_edge_list_text(text)


def _read_graph(args, required: bool = True) -> Optional[CubicGraph]:
    try:
        if args.g6 is not None:
            return parse_graph6(args.g6)
        if args.edges is not None:
            with open(args.edges, encoding="utf-8") as fh:
                return _parse_graph_text(fh.read())
        if args.stdin:
            return _parse_graph_text(sys.stdin.read())
    except ValidationError as exc:
        raise UsageError(f"invalid graph: {type(exc).__name__}: {exc}") from None
    except OSError as exc:
        raise UsageError(f"cannot read graph: {exc}") from None
    if required:
        raise UsageError("give a graph with --g6, --edges or --stdin")
    return None


def _add_graph_flags(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--g6", metavar="STR", help="graph6 string")
    src.add_argument("--edges", metavar="PATH", help="edge-list file ('n m' header, then 'u v' lines) or graph6 file")
    src.add_argument("--stdin", action="store_true", help="read graph6 or edge-list text from stdin")


def _add_bound_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-n-case2", type=int, default=DEFAULT_MAX_N_CASE2, metavar="N",
                   help="refuse full path enumeration above this order (default %(default)s)")
    p.add_argument("--force", action="store_true", help="enumerate all paths regardless of order")


def _add_corpus_flags(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--exhaustive", type=int, metavar="N", help=f"all connected cubic graphs of order N (N <= {MAX_EXHAUSTIVE_N})")
    src.add_argument("--random", type=int, metavar="N", help="random cubic graphs of order N")
    src.add_argument("--census", metavar="PATH", help="graph6 file, one graph per line")
    p.add_argument("--count", type=int, default=1, metavar="K", help="number of random graphs (default 1)")
    p.add_argument("--seed", type=int, default=0, metavar="S", help="random seed (default 0)")
    p.add_argument("--out", metavar="PATH", help="output file instead of stdout")


def _corpus_spec(args) -> CorpusSpec:
    try:
        if args.exhaustive is not None:
            if args.exhaustive > MAX_EXHAUSTIVE_N:
                raise UsageError(f"--exhaustive is limited to N <= {MAX_EXHAUSTIVE_N}")
            return CorpusSpec("exhaustive", n=args.exhaustive)
        if args.random is not None:
            return CorpusSpec("random", n=args.random, count=args.count, seed=args.seed)
        return CorpusSpec("census-file", path=args.census)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# subcommands ----------------------------------------------------------------------


def cmd_decompose(args) -> int:
    g = _read_graph(args)
    try:
        d, trace = decompose(g, max_n_case2=args.max_n_case2, force=args.force)
    except (NotTraceable, Case2Refused, OracleExhausted) as exc:
        _emit({"n": g.n, "graph6": write_graph6(g), "error": type(exc).__name__, "detail": str(exc)})
        log.error("%s: %s", type(exc).__name__, exc)
        return EXIT_FAIL
    doc = {"n": g.n, "graph6": write_graph6(g), **d.to_json_dict(), "trace": trace.to_json_dict()}
    code = EXIT_OK
    if trace.proof_gaps:
        log.error("%d proof gap(s) on the way to %s", len(trace.proof_gaps), trace.branch)
        code = EXIT_FAIL
    if args.verify:
        report = verify_decomposition(g, d)
        doc["verify"] = report.to_json()
        if not report.ok:
            log.error("decomposition failed verification: %s", report.checks())
            code = EXIT_FAIL
    _emit(doc)
    return code


def cmd_verify(args) -> int:
    try:
        with (open(args.decomposition, encoding="utf-8") if args.decomposition != "-"
              else contextlib.nullcontext(sys.stdin)) as fh:
            doc = json.load(fh)
        d = Decomposition.from_json_dict(doc)
    except (OSError, ValueError, TypeError) as exc:
        raise UsageError(f"cannot read decomposition: {exc}") from None
    g = _read_graph(args, required=False)
    if g is None and "graph6" in doc:
        try:
            g = parse_graph6(doc["graph6"])
        except ValidationError as exc:
            raise UsageError(f"decomposition carries a bad graph6: {exc}") from None
    if g is None:
        # no graph given: the union of the parts must itself be a cubic graph
        edges = set(d.tree) | set(d.matching) | {e for c in d.cycles for e in c}
        try:
            g = from_edge_list(int(doc.get("n", 0)), sorted(edges))
        except ValidationError as exc:
            _emit({"ok": False, "violations": [{"check": "graph.invalid", "witness": str(exc)}]})
            return EXIT_FAIL
    report = verify_decomposition(g, d)
    _emit(report.to_json())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_oracle(args) -> int:
    g = _read_graph(args)
    try:
        res = brute_force_decompose(g, budget=args.budget)
    except BudgetExhausted as exc:
        _emit({"found": None, "trees_examined": exc.examined, "exhausted": False, "error": "BudgetExhausted"})
        return EXIT_FAIL
    doc = res.to_json_dict()
    if res.found is not None:
        doc["verify"] = verify_decomposition(g, res.found).to_json()
    _emit(doc)
    return EXIT_OK if res.found is not None and doc["verify"]["ok"] else EXIT_FAIL


def cmd_batch(args) -> int:
    spec = _corpus_spec(args)
    if args.workers < 1:
        raise UsageError("--workers must be >= 1")
    with contextlib.ExitStack() as stack:
        out = stack.enter_context(open(args.out, "w", encoding="utf-8")) if args.out else sys.stdout
        try:
            _, summary = B.run_batch(spec, oracle=args.oracle, workers=args.workers, out=out,
                                     max_n_case2=args.max_n_case2, force=args.force)
        except OSError as exc:
            raise UsageError(f"cannot read corpus: {exc}") from None
    text = json.dumps(summary, indent=2, sort_keys=True) + "\n"
    summary_path = args.summary or (args.out + ".summary.json" if args.out else None)
    if summary_path:
        with open(summary_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stderr.write(text)
    if summary["failures"]:
        log.error("%d failing graph(s)", summary["failures"])
        return EXIT_FAIL
    return EXIT_OK


def cmd_gen(args) -> int:
    spec = _corpus_spec(args)
    if spec.kind == "census-file":
        raise UsageError("gen takes --exhaustive or --random")
    graphs = (generate_exhaustive(spec.n) if spec.kind == "exhaustive"
              else random_graphs(spec.n, spec.count, spec.seed))
    text = "".join(write_graph6(g) + "\n" for g in graphs)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_paths(args) -> int:
    g = _read_graph(args)
    count = 0
    for p in enumerate_ham_paths(g, cap=args.cap):
        count += 1
        sys.stdout.write(json.dumps({
            "path": list(p.order),
            "forward": chord_indices(g, p).as_dict(),
            "reverse": chord_indices(g, p.reversed()).as_dict(),
        }, sort_keys=True) + "\n")
    log.info("%d Hamiltonian path(s)", count)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubicdecomp",
        description="Spanning tree + matching + cycles decompositions of traceable cubic graphs.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("decompose", help="decompose one graph, print JSON")
    _add_graph_flags(p)
    _add_bound_flags(p)
    p.add_argument("--verify", action="store_true", help="re-check the result with the verifier")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check a decomposition JSON file against its graph")
    p.add_argument("decomposition", help="decomposition JSON file, '-' for stdin")
    _add_graph_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force search over spanning trees")
    _add_graph_flags(p)
    p.add_argument("--budget", type=int, default=None, metavar="T", help="give up after T trees")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("batch", help="decompose + verify every graph of a corpus, JSONL out")
    _add_corpus_flags(p)
    _add_bound_flags(p)
    p.add_argument("--oracle", action="store_true", help="also run the brute-force oracle")
    p.add_argument("--workers", type=int, default=1, metavar="K", help="worker processes (default 1)")
    p.add_argument("--summary", metavar="PATH",
                   help="summary JSON file (default: OUT.summary.json, or stderr without --out)")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("gen", help="write a generated corpus as graph6 lines")
    _add_corpus_flags(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("paths", help="list Hamiltonian paths with chord indices (JSONL)")
    _add_graph_flags(p)
    p.add_argument("--cap", type=int, default=None, metavar="K", help="stop after K paths")
    p.set_defaults(func=cmd_paths)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse: --help exits 0, bad flags exit 2
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        log.error("%s", exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
