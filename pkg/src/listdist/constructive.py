"""
Closed-form distinguishing numbers of friendship and book graphs, and the
greedy list labelings that realise them from arbitrary lists.

Both constructions give every page a distinct "signature" (an unordered
pair with two different labels for a friendship triangle, an ordered pair
for a book page), which no label-preserving automorphism can shuffle.
Every output is re-verified against the full automorphism group.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import isqrt

from listdist.errors import ListDistError
from listdist.graphs import AutomorphismGroup, automorphisms, book, friendship
from listdist.labeling import Labeling, Predicate, satisfies
from listdist.listnum import ListAssignment


def friendship_distinguishing_number(n: int) -> int:
    """ceil((1 + sqrt(8n+1)) / 2), i.e. the least d with d(d-1)/2 >= n."""
    if n < 2:
        raise ValueError("friendship graph needs n >= 2")
    d = (1 + isqrt(8 * n + 1)) // 2
    while d * (d - 1) // 2 < n:
        d += 1
    return d


def book_distinguishing_number(n: int) -> int:
    """ceil(sqrt(n))."""
    if n < 2:
        raise ValueError("book graph needs n >= 2")
    r = isqrt(n)
    return r if r * r == n else r + 1


@lru_cache(maxsize=None)
def _friendship_group(n: int) -> AutomorphismGroup:
    return automorphisms(friendship(n))


@lru_cache(maxsize=None)
def _book_group(n: int) -> AutomorphismGroup:
    return automorphisms(book(n))


def _as_lists(L, order: int, k: int) -> tuple:
    lists = L.lists if isinstance(L, ListAssignment) else tuple(tuple(sorted(set(l))) for l in L)
    if len(lists) != order:
        raise ValueError(f"expected {order} lists, got {len(lists)}")
    if any(len(l) < k for l in lists):
        raise ValueError(f"every list needs at least {k} labels")
    return lists


def friendship_list_labeling(n: int, L, verify: bool = True) -> Labeling:
    """Distinguishing labeling of friendship(n) chosen from lists ``L``.

    Page i takes the lexicographically least 2-set {a, b}, a != b, with one
    label from each of its two lists, not used by an earlier page.  At
    least C(d, 2) >= n such sets exist per page, so the greedy never runs
    dry.  The centre is fixed by every automorphism and gets min L(w).
    """
    d = friendship_distinguishing_number(n)
    lists = _as_lists(L, 2 * n + 1, d)
    labels = [0] * (2 * n + 1)
    labels[0] = lists[0][0]
    used = set()
    for i in range(1, n + 1):
        first, second = lists[2 * i - 1], lists[2 * i]
        candidates = sorted({(min(a, b), max(a, b)) for a, b in product(first, second) if a != b} - used)
        if not candidates:
            raise ListDistError(f"friendship({n}): page {i} has no unused label pair")
        lo, hi = candidates[0]
        used.add((lo, hi))
        if lo in first and hi in second:
            labels[2 * i - 1], labels[2 * i] = lo, hi
        else:
            labels[2 * i - 1], labels[2 * i] = hi, lo
    out = tuple(labels)
    if verify and not satisfies(Predicate.DISTINGUISHING, friendship(n), _friendship_group(n), out):
        raise ListDistError(f"friendship({n}): constructed labeling {out} is not distinguishing")
    return out


def book_list_labeling(n: int, L, verify: bool = True) -> Labeling:
    """Distinguishing labeling of book(n) chosen from lists ``L``.

    Page i takes the lexicographically least ordered pair from
    L(v_i) x L(w_i) not used by an earlier page (d^2 >= n candidates).  The
    spine ends get different labels, min L(v0) and the least other label
    of L(w0), which rules out the automorphism swapping the two sides.
    """
    d = book_distinguishing_number(n)
    lists = _as_lists(L, 2 * n + 2, max(d, 2))
    labels = [0] * (2 * n + 2)
    labels[0] = lists[0][0]
    labels[1] = min(x for x in lists[1] if x != labels[0])
    used = set()
    for i in range(1, n + 1):
        pair = next((p for p in product(lists[2 * i], lists[2 * i + 1]) if p not in used), None)
        if pair is None:
            raise ListDistError(f"book({n}): page {i} has no unused ordered pair")
        used.add(pair)
        labels[2 * i], labels[2 * i + 1] = pair
    out = tuple(labels)
    if verify and not satisfies(Predicate.DISTINGUISHING, book(n), _book_group(n), out):
        raise ListDistError(f"book({n}): constructed labeling {out} is not distinguishing")
    return out
