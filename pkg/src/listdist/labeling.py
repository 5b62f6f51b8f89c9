"""
Vertex labelings under three predicates: distinguishing, proper, and both.

Two independent evaluation routes live here:

* :class:`LabelingSearch` - depth-first search over per-vertex label domains.
  Each non-identity automorphism is checked at the depth where the largest
  vertex it moves receives its label, so the full stabilizer test is spread
  over the search tree and partial labelings already fixed by some
  automorphism are cut early.
* :func:`enumerate_labelings` / :func:`satisfies` - literal tests over
  the explicit group, vectorised with numpy. No search, no pruning.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from listdist.errors import CapExceededError, ListDistError
from listdist.graphs import AutomorphismGroup, Graph, automorphisms

Labeling = tuple  # labels[v] >= 1

DEFAULT_ENUMERATION_CAP = 10**7
_CHUNK = 1 << 16


class Predicate(enum.Enum):
    DISTINGUISHING = "dist"
    PROPER = "proper"
    PROPER_DISTINGUISHING = "propdist"

    @property
    def distinguishing(self) -> bool:
        return self is not Predicate.PROPER

    @property
    def proper(self) -> bool:
        return self is not Predicate.DISTINGUISHING

    @classmethod
    def parse(cls, text: "str | Predicate") -> "Predicate":
        if isinstance(text, cls):
            return text
        aliases = {
            "dist": cls.DISTINGUISHING, "distinguishing": cls.DISTINGUISHING,
            "proper": cls.PROPER,
            "propdist": cls.PROPER_DISTINGUISHING, "proper_distinguishing": cls.PROPER_DISTINGUISHING,
        }
        try:
            return aliases[text.lower()]
        except KeyError:
            raise ValueError(f"unknown predicate {text!r}") from None


def _require_complete(aut: AutomorphismGroup | None, pred: Predicate):
    if not pred.distinguishing:
        return
    if aut is None:
        raise ValueError("a distinguishing test needs the automorphism group")
    if not aut.complete:
        raise ListDistError("automorphism group is truncated; distinguishing test would be unsound")


def is_proper(g: Graph, labels: Sequence[int]) -> bool:
    return all(labels[u] != labels[v] for u, v in g.edges)


def stabilizer_order(aut: AutomorphismGroup, labels: Sequence[int]) -> int:
    """Number of automorphisms preserving every label (always >= 1)."""
    if aut.degree == 0:
        return aut.order
    c = np.asarray(labels)
    return int((c[aut.array] == c).all(axis=1).sum())


def is_distinguishing(aut: AutomorphismGroup, labels: Sequence[int]) -> bool:
    return stabilizer_order(aut, labels) == 1


def satisfies(pred: Predicate, g: Graph, aut: AutomorphismGroup | None, labels: Sequence[int]) -> bool:
    pred = Predicate.parse(pred)
    _require_complete(aut, pred)
    if len(labels) != g.order:
        raise ValueError(f"labeling has length {len(labels)}, graph has {g.order} vertices")
    if pred.proper and not is_proper(g, labels):
        return False
    if pred.distinguishing and not is_distinguishing(aut, labels):
        return False
    return True


class LabelingSearch:
    """Backtracking search for labelings satisfying ``pred`` on ``g``.

    Built once per (graph, group, predicate); :meth:`solutions` can then be
    run against any per-vertex label domains.
    """

    def __init__(self, g: Graph, aut: AutomorphismGroup | None, pred: Predicate):
        pred = Predicate.parse(pred)
        _require_complete(aut, pred)
        self.graph = g
        self.pred = pred
        n = g.order
        self.back_neighbours = [()] * n
        if pred.proper:
            self.back_neighbours = [tuple(u for u in g.adjacency[v] if u < v) for v in range(n)]
        # buckets[v]: automorphisms whose largest moved vertex is v, as (x, sigma(x)) pairs
        self.buckets: list[list[tuple]] = [[] for _ in range(n)]
        if pred.distinguishing:
            for sigma in aut.elements:
                moved = tuple((x, s) for x, s in enumerate(sigma) if x != s)
                if moved:
                    self.buckets[max(x for x, _ in moved)].append(moved)
            for b in self.buckets:
                # small supports first: cheapest to refute
                b.sort(key=len)

    def _consistent(self, lab: list, v: int) -> bool:
        lv = lab[v]
        for u in self.back_neighbours[v]:
            if lab[u] == lv:
                return False
        for pairs in self.buckets[v]:
            for x, y in pairs:
                if lab[x] != lab[y]:
                    break
            else:
                return False
        return True

    def solutions(self, domains: Sequence[Sequence[int]], canonical: bool = False) -> Iterator[Labeling]:
        """Satisfying labelings with ``lab[v] in domains[v]``, in lexicographic order.

        With ``canonical=True`` the domains must all be ``1..r`` and labels are
        introduced in first-occurrence order, yielding one labeling per
        label-renaming class.
        """
        n = self.graph.order
        if len(domains) != n:
            raise ValueError("need one label domain per vertex")
        doms = [sorted(set(d)) for d in domains]
        if n == 0:
            yield ()
            return
        lab = [0] * n

        def extend(v, top):
            choices = doms[v]
            if canonical:
                choices = [c for c in choices if c <= top + 1]
            for c in choices:
                lab[v] = c
                if self._consistent(lab, v):
                    if v + 1 == n:
                        yield tuple(lab)
                    else:
                        yield from extend(v + 1, max(top, c))
            lab[v] = 0

        yield from extend(0, 0)

    def first(self, domains, canonical=False) -> Labeling | None:
        if canonical:
            return next(self.solutions(domains, canonical), None)
        # plain recursion: this path runs millions of times inside list-number checks
        n = self.graph.order
        if len(domains) != n:
            raise ValueError("need one label domain per vertex")
        if n == 0:
            return ()
        doms = [sorted(d) for d in domains]
        lab = [0] * n
        consistent = self._consistent

        def extend(v):
            for c in doms[v]:
                lab[v] = c
                if consistent(lab, v) and (v + 1 == n or extend(v + 1)):
                    return True
            return False

        return tuple(lab) if extend(0) else None


class MinLabels(NamedTuple):
    number: int
    witness: Labeling


def min_labels(pred: Predicate, g: Graph, aut: AutomorphismGroup | None = None) -> MinLabels:
    """Least ``r`` admitting a labeling from ``1..r`` satisfying ``pred``.

    Covers D (distinguishing), chi (proper) and chi_D (proper distinguishing).
    The witness is the lexicographically least satisfying label vector.
    The empty graph returns ``(0, ())`` by convention.
    """
    pred = Predicate.parse(pred)
    if g.order == 0:
        return MinLabels(0, ())
    if pred.distinguishing and aut is None:
        aut = automorphisms(g)
    search = LabelingSearch(g, aut, pred)
    for r in range(1, g.order + 1):
        witness = search.first([range(1, r + 1)] * g.order, canonical=True)
        if witness is not None:
            return MinLabels(r, witness)
    raise AssertionError("injective labelings always satisfy every predicate")


@dataclass(frozen=True)
class LabelingSet:
    """Every labeling ``V -> {1..label_bound}`` satisfying ``predicate``, sorted."""

    members: tuple
    graph_order: int
    label_bound: int
    predicate: Predicate

    @property
    def t(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def _candidate_chunks(n: int, m: int) -> Iterator[np.ndarray]:
    total = m**n
    if n == 0:
        yield np.zeros((1, 0), dtype=np.int64)
        return
    powers = m ** np.arange(n - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        yield (idx[:, None] // powers) % m + 1


def enumerate_labelings(pred: Predicate, g: Graph, m: int, aut: AutomorphismGroup | None = None,
                        cap: int = DEFAULT_ENUMERATION_CAP) -> LabelingSet:
    """All ``m**n`` candidate labelings tested literally against ``pred``.

    No symmetry quotient is applied: the result is the literal set of
    satisfying label vectors, in lexicographic order.
    """
    pred = Predicate.parse(pred)
    if m < 1:
        raise ValueError("label bound m must be >= 1")
    n = g.order
    if m**n > cap:
        raise CapExceededError(f"{m}^{n} candidate labelings exceed cap {cap}")
    if pred.distinguishing and aut is None:
        aut = automorphisms(g)
    _require_complete(aut, pred)
    perms = []
    if pred.distinguishing:
        perms = [np.asarray(s) for s in aut.elements if any(x != y for x, y in enumerate(s))]
    edges = g.sorted_edges() if pred.proper else []

    members = []
    for cand in _candidate_chunks(n, m):
        ok = np.ones(len(cand), dtype=bool)
        for u, v in edges:
            ok &= cand[:, u] != cand[:, v]
        for sigma in perms:
            ok &= ~(cand[:, sigma] == cand).all(axis=1)
        members.extend(tuple(int(x) for x in row) for row in cand[ok])
    return LabelingSet(tuple(members), n, m, pred)


def brute_force_min_labels(pred: Predicate, g: Graph, aut: AutomorphismGroup | None = None) -> int:
    """Reference oracle: least m with a non-empty :func:`enumerate_labelings`."""
    if g.order == 0:
        return 0
    for m in range(1, g.order + 1):
        if len(enumerate_labelings(pred, g, m, aut)):
            return m
    raise AssertionError("unreachable")


def all_labelings(n: int, m: int) -> Iterator[Labeling]:
    return product(range(1, m + 1), repeat=n)
