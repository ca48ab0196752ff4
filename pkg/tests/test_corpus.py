import itertools
import random

import networkx as nx
import pytest

from plans import to_nx

from cubicdecomp.corpus import (
    CENSUS_COUNTS,
    CorpusSpec,
    OrderTooLarge,
    canonical_form,
    generate_exhaustive,
    generate_random,
    load_corpus,
    random_graphs,
    relabel_canonical,
)
from cubicdecomp.graph import from_edge_list, k4, petersen, write_graph6


def relabeled(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return from_edge_list(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def test_census_counts(census):
    for n, graphs in census.items():
        assert len(graphs) == CENSUS_COUNTS[n]


def test_census_is_isomorph_free(census):
    for graphs in census.values():
        forms = [canonical_form(g) for g in graphs]
        assert len(set(forms)) == len(forms)
        for a, b in itertools.combinations(graphs, 2):
            assert not nx.is_isomorphic(to_nx(a), to_nx(b))


def test_census_graphs_are_valid(census):
    for n, graphs in census.items():
        for g in graphs:
            assert g.n == n and len(g.edges) == 3 * n // 2
            assert nx.is_connected(to_nx(g))


def test_named_small_graphs(census):
    assert census[4] == [k4()]
    names = {nx.is_bipartite(to_nx(g)) for g in census[6]}
    assert names == {True, False}  # K3,3 and the prism


def test_canonical_form_ignores_labels(census):
    rng = random.Random(3)
    for g in census[10] + [petersen()]:
        form = canonical_form(g)
        for _ in range(5):
            assert canonical_form(relabeled(g, rng)) == form
    assert relabel_canonical(relabeled(petersen(), rng)) == relabel_canonical(petersen())


def test_order_too_large():
    with pytest.raises(OrderTooLarge):
        generate_exhaustive(14)


@pytest.mark.parametrize("n", [3, 5, 2])
def test_bad_orders(n):
    with pytest.raises(ValueError):
        generate_exhaustive(n)
    with pytest.raises(ValueError):
        generate_random(n, 0)


def test_random_k4():
    for seed in range(20):
        assert generate_random(4, seed) == k4()


def test_random_is_deterministic():
    a, b = generate_random(20, 42), generate_random(20, 42)
    assert a == b and a.n == 20
    assert write_graph6(a) == write_graph6(b)
    assert random_graphs(16, 10, 7) == random_graphs(16, 10, 7)


def test_random_samples_are_valid():
    for g in random_graphs(16, 500, 1):
        assert g.n == 16 and len(g.edges) == 24
        assert all(len(g.neighbors(v)) == 3 for v in g.vertices)


@pytest.mark.parametrize("kwargs", [
    dict(kind="random", n=7),
    dict(kind="random", n=64),
    dict(kind="random", n=2),
    dict(kind="random", n=10, count=0),
    dict(kind="census-file"),
    dict(kind="bogus", n=10),
])
def test_corpus_spec_validation(kwargs):
    with pytest.raises(ValueError):
        CorpusSpec(**kwargs)


def test_load_corpus_file(tmp_path):
    f = tmp_path / "c.g6"
    f.write_text("C~\nnot-a-graph\nIheA@GUAo\n")
    rows = list(load_corpus(CorpusSpec("census-file", path=str(f))))
    assert [label for label, _ in rows] == ["C~", "not-a-graph", "IheA@GUAo"]
    assert isinstance(rows[1][1], Exception)
    assert rows[2][1] == petersen()
