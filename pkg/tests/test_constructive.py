import random

import pytest

from listdist import constructive, graphs
from listdist.labeling import Predicate, min_labels, satisfies


def test_closed_forms_small():
    assert [constructive.friendship_distinguishing_number(n) for n in range(2, 11)] == [3, 3, 4, 4, 4, 5, 5, 5, 5]
    assert [constructive.book_distinguishing_number(n) for n in range(2, 11)] == [2, 2, 2, 3, 3, 3, 3, 3, 4]
    with pytest.raises(ValueError):
        constructive.friendship_distinguishing_number(1)
    with pytest.raises(ValueError):
        constructive.book_distinguishing_number(1)


def test_closed_forms_large_n_exact():
    # isqrt keeps the boundary cases exact where float sqrt would not
    for d in (10**6, 10**9 + 7):
        tri = d * (d - 1) // 2
        assert constructive.friendship_distinguishing_number(tri) == d
        assert constructive.friendship_distinguishing_number(tri + 1) == d + 1
        assert constructive.book_distinguishing_number(d * d) == d
        assert constructive.book_distinguishing_number(d * d + 1) == d + 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_closed_forms_match_search(n):
    assert min_labels(Predicate.DISTINGUISHING, graphs.friendship(n)).number == \
        constructive.friendship_distinguishing_number(n)
    assert min_labels(Predicate.DISTINGUISHING, graphs.book(n)).number == constructive.book_distinguishing_number(n)


def test_friendship_examples():
    lab = constructive.friendship_list_labeling(2, [[1, 2, 3]] * 5)
    assert lab == (1, 1, 2, 1, 3)
    lab = constructive.friendship_list_labeling(3, [[1, 2, 3]] * 7)
    assert lab == (1, 1, 2, 1, 3, 2, 3)
    lab = constructive.friendship_list_labeling(2, [[7, 8, 9], [1, 2, 3], [4, 5, 6], [1, 2, 3], [4, 5, 6]])
    assert lab == (7, 1, 4, 1, 5)


def test_friendship_orients_pairs_into_lists():
    lists = [[1, 2, 3], [4, 5, 6], [1, 2, 3], [4, 5, 6], [1, 2, 3]]
    lab = constructive.friendship_list_labeling(2, lists)
    assert all(lab[v] in lists[v] for v in range(5))
    assert {lab[1], lab[2]} != {lab[3], lab[4]}


def test_book_examples():
    lab = constructive.book_list_labeling(4, [[1, 2]] * 10)
    assert lab == (1, 2, 1, 1, 1, 2, 2, 1, 2, 2)
    lab = constructive.book_list_labeling(2, [[5, 6]] * 6)
    assert lab == (5, 6, 5, 5, 5, 6)


def test_book_spine_differs_when_lists_share_first_label():
    lab = constructive.book_list_labeling(2, [[1, 2], [1, 3], [1, 2], [1, 2], [1, 2], [1, 2]])
    assert lab[0] == 1 and lab[1] == 3


@pytest.mark.parametrize("n", range(2, 6))
def test_random_lists_friendship(n):
    rng = random.Random(n)
    g = graphs.friendship(n)
    d = constructive.friendship_distinguishing_number(n)
    aut = graphs.automorphisms(g)
    for _ in range(100):
        lists = [rng.sample(range(1, 3 * d + 1), d) for _ in range(g.order)]
        lab = constructive.friendship_list_labeling(n, lists, verify=False)
        assert all(lab[v] in lists[v] for v in range(g.order))
        assert satisfies(Predicate.DISTINGUISHING, g, aut, lab)


@pytest.mark.parametrize("n", range(2, 6))
def test_random_lists_book(n):
    rng = random.Random(n)
    g = graphs.book(n)
    d = constructive.book_distinguishing_number(n)
    aut = graphs.automorphisms(g)
    for _ in range(100):
        lists = [rng.sample(range(1, 3 * d + 1), d) for _ in range(g.order)]
        lab = constructive.book_list_labeling(n, lists, verify=False)
        assert all(lab[v] in lists[v] for v in range(g.order))
        assert satisfies(Predicate.DISTINGUISHING, g, aut, lab)


def test_longer_lists_accepted():
    lab = constructive.friendship_list_labeling(2, [[1, 2, 3, 4]] * 5)
    assert len(lab) == 5


def test_list_validation():
    with pytest.raises(ValueError):
        constructive.friendship_list_labeling(2, [[1, 2]] * 5)
    with pytest.raises(ValueError):
        constructive.friendship_list_labeling(2, [[1, 2, 3]] * 4)
    with pytest.raises(ValueError):
        constructive.book_list_labeling(4, [[1]] * 10)

