import json
import logging
import pathlib

import pytest

from cubicdecomp.corpus import generate_exhaustive
from cubicdecomp.graph import parse_graph6
from cubicdecomp.hampath import HamPath

DATA = pathlib.Path(__file__).parent / "data"

_ACCEPTANCE = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE] = []
    logging.getLogger("cubicdecomp").setLevel(logging.ERROR)


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("[")[1].split("]")[0])):
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line for an acceptance criterion, then assert it."""

    def record(number: int, title: str, ok: bool, detail: str) -> None:
        line = f"{'PASS' if ok else 'FAIL'} [{number}] {title}: {detail}"
        print(line)
        request.config.stash[_ACCEPTANCE].append(line)
        assert ok, line

    return record


@pytest.fixture(scope="session")
def census():
    """Connected cubic graphs by order, n = 4..10."""
    return {n: generate_exhaustive(n) for n in (4, 6, 8, 10)}


@pytest.fixture(scope="session")
def census12():
    return generate_exhaustive(12)


@pytest.fixture(scope="session")
def witnesses():
    """Per case leaf: a graph and a Hamiltonian path that lands in that leaf."""
    rows = json.loads((DATA / "witnesses.json").read_text())
    return {r["leaf"]: (parse_graph6(r["graph6"]), HamPath(tuple(r["path"]))) for r in rows}
