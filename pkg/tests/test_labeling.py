import itertools

import pytest
from hypothesis import given, settings, strategies as st

from listdist import graphs, labeling
from listdist.errors import ListDistError
from listdist.graphs import Graph
from listdist.labeling import Predicate, enumerate_labelings, min_labels, satisfies

from test_graphs import small_graph

DIST, PROPER, BOTH = Predicate.DISTINGUISHING, Predicate.PROPER, Predicate.PROPER_DISTINGUISHING


def slow_satisfies(pred, g, labels):
    """Plain-Python reference over the brute-force group."""
    if pred.proper and any(labels[u] == labels[v] for u, v in g.edges):
        return False
    if pred.distinguishing:
        for sigma in graphs.brute_force_automorphisms(g):
            if any(x != s for x, s in enumerate(sigma)) and all(labels[sigma[x]] == labels[x] for x in range(g.order)):
                return False
    return True


def test_predicate_parse():
    assert Predicate.parse("distinguishing") is DIST
    assert Predicate.parse("PROPER") is PROPER
    assert Predicate.parse(BOTH) is BOTH
    with pytest.raises(ValueError):
        Predicate.parse("colour")


def test_satisfies_examples():
    c4 = graphs.cycle(4)
    aut = graphs.automorphisms(c4)
    assert satisfies(PROPER, c4, None, (1, 2, 1, 2))
    assert not satisfies(DIST, c4, aut, (1, 2, 1, 2))  # rotation by two keeps it
    assert not satisfies(DIST, c4, aut, (1, 1, 2, 2))  # reflection swapping 0,1 and 2,3
    assert satisfies(DIST, c4, aut, (1, 1, 2, 3))
    assert not satisfies(BOTH, c4, aut, (1, 1, 2, 3))
    assert not satisfies(BOTH, c4, aut, (1, 2, 1, 3))  # reflection through 1 and 3
    assert satisfies(BOTH, c4, aut, (1, 2, 3, 4))
    k2 = graphs.complete(2)
    assert not satisfies(DIST, k2, graphs.automorphisms(k2), (1, 1))


def test_satisfies_errors():
    g = graphs.path(3)
    with pytest.raises(ValueError):
        satisfies(PROPER, g, None, (1, 2))
    with pytest.raises(ValueError):
        satisfies(DIST, g, None, (1, 2, 3))
    part = graphs.automorphisms(graphs.complete(4), cap=3, allow_truncated=True)
    with pytest.raises(ListDistError):
        satisfies(DIST, graphs.complete(4), part, (1, 2, 3, 4))


@pytest.mark.parametrize("g, numbers", [
    (graphs.complete(2), (2, 2, 2)),
    (graphs.path(3), (2, 2, 3)),
    (graphs.cycle(4), (3, 2, 4)),
    (graphs.cycle(5), (3, 3, 3)),
    (graphs.cycle(6), (2, 2, 4)),
    (graphs.complete(4), (4, 4, 4)),
    (graphs.star(3), (3, 2, 4)),
    (Graph.from_edges(1, []), (1, 1, 1)),
])
def test_min_labels_examples(g, numbers):
    aut = graphs.automorphisms(g)
    for pred, expected in zip((DIST, PROPER, BOTH), numbers):
        res = min_labels(pred, g, aut)
        assert res.number == expected
        assert satisfies(pred, g, aut, res.witness)
        assert max(res.witness) == expected
        assert res.number == labeling.brute_force_min_labels(pred, g, aut)


def test_min_labels_empty_graph():
    assert min_labels(DIST, Graph.from_edges(0, [])) == (0, ())


@pytest.mark.parametrize("n, expected", [(3, 3), (4, 3), (5, 3), (6, 2), (7, 2), (8, 2)])
def test_cycle_distinguishing_numbers(n, expected):
    assert min_labels(DIST, graphs.cycle(n)).number == expected


def test_enumerate_examples():
    k2, p3 = graphs.complete(2), graphs.path(3)
    assert len(enumerate_labelings(DIST, k2, 2)) == 2
    assert len(enumerate_labelings(DIST, k2, 3)) == 6
    assert enumerate_labelings(DIST, k2, 2).members == ((1, 2), (2, 1))
    # P3: the end labels must differ; the middle is free
    assert len(enumerate_labelings(DIST, p3, 2)) == 4
    assert len(enumerate_labelings(PROPER, p3, 2)) == 2
    assert len(enumerate_labelings(BOTH, p3, 2)) == 0


@given(small_graph(max_n=5), st.integers(1, 3), st.sampled_from(list(Predicate)))
@settings(max_examples=60, deadline=None)
def test_enumerate_matches_reference(g, m, pred):
    got = set(enumerate_labelings(pred, g, m).members)
    want = {c for c in itertools.product(range(1, m + 1), repeat=g.order) if slow_satisfies(pred, g, c)}
    assert got == want


@given(small_graph(max_n=5), st.sampled_from(list(Predicate)))
@settings(max_examples=60, deadline=None)
def test_injective_labelings_always_satisfy(g, pred):
    aut = graphs.automorphisms(g)
    assert satisfies(pred, g, aut, tuple(range(1, g.order + 1)))


@given(small_graph(max_n=5), st.integers(1, 3), st.sampled_from(list(Predicate)))
@settings(max_examples=40, deadline=None)
def test_labeling_sets_nest(g, m, pred):
    smaller = set(enumerate_labelings(pred, g, m).members)
    larger = set(enumerate_labelings(pred, g, m + 1).members)
    assert smaller <= larger


@given(small_graph(max_n=6))
@settings(max_examples=40, deadline=None)
def test_number_inequalities(g):
    aut = graphs.automorphisms(g)
    d, chi, chi_d = (min_labels(p, g, aut).number for p in (DIST, PROPER, BOTH))
    assert max(d, chi) <= chi_d <= g.order


@given(small_graph(max_n=5), st.integers(1, 3), st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_counts_are_isomorphism_invariant(g, m, rng):
    perm = list(range(g.order))
    rng.shuffle(perm)
    h = g.relabel(perm)
    for pred in Predicate:
        assert len(enumerate_labelings(pred, g, m)) == len(enumerate_labelings(pred, h, m))


@given(small_graph(max_n=5), st.data())
@settings(max_examples=60, deadline=None)
def test_search_solutions_match_enumeration(g, data):
    pred = data.draw(st.sampled_from(list(Predicate)))
    domains = [data.draw(st.lists(st.integers(1, 4), min_size=1, max_size=3, unique=True)) for _ in range(g.order)]
    aut = graphs.automorphisms(g)
    search = labeling.LabelingSearch(g, aut, pred)
    found = set(search.solutions(domains))
    want = {c for c in itertools.product(*domains) if satisfies(pred, g, aut, c)}
    assert found == want
    first = search.first(domains)
    assert first == (min(want) if want else None)
