import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from listdist import graphs
from listdist.errors import GraphParseError, GroupTruncatedError
from listdist.graphs import Graph


def random_graph(rng, n, p=0.5):
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


@st.composite
def small_graph(draw, max_n=6):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, c in zip(pairs, chosen) if c])


# -- graph6 -----------------------------------------------------------------

def test_graph6_known_strings():
    assert graphs.encode_graph6(graphs.complete(2)) == "A_"
    assert graphs.parse_graph6("A_") == graphs.complete(2)
    assert graphs.parse_graph6("B?") == Graph.from_edges(3, [])
    assert graphs.encode_graph6(Graph.from_edges(0, [])) == "?"


def test_graph6_headers_accepted():
    assert graphs.parse_graph6(">>graph6<<A_") == graphs.complete(2)


@pytest.mark.parametrize("bad", ["", "   ", "A", "A_x", "B\x7f", "A`"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(GraphParseError):
        graphs.parse_graph6(bad)


def test_graph6_matches_networkx():
    rng = random.Random(7)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 70), rng.random())
        ref = nx.Graph()
        ref.add_nodes_from(range(g.order))
        ref.add_edges_from(g.edges)
        expected = nx.to_graph6_bytes(ref, header=False).decode().strip()
        assert graphs.encode_graph6(g) == expected
        assert graphs.parse_graph6(expected) == g


def test_graph6_round_trip_every_graph_up_to_five():
    for n in range(6):
        pairs = list(itertools.combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            g = Graph.from_edges(n, [e for i, e in enumerate(pairs) if bits >> i & 1])
            assert graphs.parse_graph6(graphs.encode_graph6(g)) == g


@given(small_graph(max_n=6))
def test_graph6_round_trip_property(g):
    assert graphs.parse_graph6(graphs.encode_graph6(g)) == g


# -- edge lists -------------------------------------------------------------

def test_edge_list_round_trip():
    g = graphs.friendship(2)
    text = graphs.format_edge_list(g)
    assert graphs.parse_edge_list(text) == g


def test_edge_list_comments_and_blank_lines():
    g = graphs.parse_edge_list("# a path\n3\n\n0 1\n1 2  # tail\n")
    assert g == graphs.path(3)


@pytest.mark.parametrize("text", ["", "3\n0", "3\n0 3", "3\n1 1", "3\n0 1\n1 0", "x\n", "-1\n"])
def test_edge_list_errors(text):
    with pytest.raises(GraphParseError):
        graphs.parse_edge_list(text)


def test_from_edges_rejects_duplicates_and_loops():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(2, 2)])


# -- families ---------------------------------------------------------------

@pytest.mark.parametrize("n", range(2, 7))
def test_friendship_shape(n):
    g = graphs.friendship(n)
    assert g.order == 2 * n + 1 and len(g.edges) == 3 * n
    assert g.degrees[0] == 2 * n
    assert all(g.has_edge(2 * i - 1, 2 * i) for i in range(1, n + 1))


@pytest.mark.parametrize("n", range(2, 7))
def test_book_shape(n):
    g = graphs.book(n)
    assert g.order == 2 * n + 2 and len(g.edges) == 3 * n + 1
    assert g.has_edge(0, 1)
    assert all(g.has_edge(0, 2 * i) and g.has_edge(1, 2 * i + 1) and g.has_edge(2 * i, 2 * i + 1)
               for i in range(1, n + 1))


def test_small_family_identities():
    assert graphs.cycle(3) == graphs.complete(3)
    assert graphs.star(3) == graphs.complete_bipartite(1, 3)
    assert graphs.path(2) == graphs.complete(2)


@pytest.mark.parametrize("call", [("cycle", 2), ("friendship", 1), ("book", 0), ("nope", 3), ("path", 0)])
def test_family_parameter_errors(call):
    with pytest.raises(ValueError):
        graphs.generate_family(*call)


# -- automorphisms ----------------------------------------------------------

def test_automorphism_orders_small():
    assert graphs.automorphisms(graphs.complete(3)).order == 6
    assert graphs.automorphisms(graphs.path(3)).order == 2
    assert graphs.automorphisms(graphs.cycle(5)).order == 10
    assert graphs.automorphisms(Graph.from_edges(1, [])).is_trivial


def test_friendship_group_matches_brute_force():
    g = graphs.friendship(2)
    assert len(graphs.brute_force_automorphisms(g)) == 8
    assert set(graphs.automorphisms(g).elements) == set(graphs.brute_force_automorphisms(g))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_friendship_group_order(n):
    # n pages permuted, each page flipped independently
    from math import factorial
    assert graphs.automorphisms(graphs.friendship(n)).order == 2**n * factorial(n)


@pytest.mark.parametrize("n", [2, 3])
def test_book_group_order(n):
    # pages permuted, times the side swap
    from math import factorial
    assert graphs.automorphisms(graphs.book(n)).order == 2 * factorial(n)


@given(small_graph(max_n=6))
@settings(max_examples=60, deadline=None)
def test_automorphisms_match_brute_force(g):
    assert set(graphs.automorphisms(g).elements) == set(graphs.brute_force_automorphisms(g))


@given(small_graph(max_n=6), st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_group_order_relabel_invariant(g, rng):
    perm = list(range(g.order))
    rng.shuffle(perm)
    assert graphs.automorphisms(g.relabel(perm)).order == graphs.automorphisms(g).order


def test_group_cap_truncation():
    with pytest.raises(GroupTruncatedError):
        graphs.automorphisms(graphs.complete(5), cap=10)
    part = graphs.automorphisms(graphs.complete(5), cap=10, allow_truncated=True)
    assert not part.complete and part.order == 10


def test_fixed_vertices():
    assert graphs.automorphisms(graphs.star(3)).fixed_vertices == (0,)
    assert graphs.automorphisms(graphs.cycle(4)).fixed_vertices == ()


def test_small_graph_counts():
    # connected graphs up to isomorphism on 1..5 vertices
    assert [len(graphs.small_graphs(n)) for n in range(1, 6)] == [1, 1, 2, 6, 21]
    assert [len(graphs.small_graphs(n, connected=False)) for n in range(1, 5)] == [1, 2, 4, 11]


def test_small_graphs_pairwise_non_isomorphic():
    gs = graphs.small_graphs(5)
    nxs = []
    for g in gs:
        h = nx.Graph()
        h.add_nodes_from(range(g.order))
        h.add_edges_from(g.edges)
        assert nx.is_connected(h)
        nxs.append(h)
    for a, b in itertools.combinations(nxs, 2):
        assert not nx.is_isomorphic(a, b)
