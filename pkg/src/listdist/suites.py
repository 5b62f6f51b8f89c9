"""
Randomised and exhaustive property suites behind ``listdist verify-props``.

Each suite returns a :class:`SuiteResult`; the first counterexample is kept
so a failure can be replayed from the printed seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from listdist import constructive, counting, graphs, labeling, listnum
from listdist.labeling import Predicate


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    passed: int = 0
    counterexample: object = None
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.checked == self.passed

    def record(self, good: bool, witness=None):
        self.checked += 1
        if good:
            self.passed += 1
        elif self.counterexample is None:
            self.counterexample = witness

    def to_json(self) -> dict:
        out = {"suite": self.name, "checked": self.checked, "passed": self.passed, "ok": self.ok}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        out.update(self.details)
        return out


def random_family(rng: random.Random, max_n=4, max_t=4, max_d=3, max_m=5) -> counting.FunctionFamily:
    n = rng.randint(1, max_n)
    d = rng.randint(1, max_d)
    m = rng.randint(d, max_m)
    t = rng.randint(1, max_t)
    fs = tuple(tuple(rng.randint(1, m) for _ in range(n)) for _ in range(t))
    return counting.FunctionFamily(fs, m, d)


def counting_suite(seed: int, count: int = 100) -> SuiteResult:
    """All four union-count paths agree, and respect the A-size bound."""
    rng = random.Random(seed)
    res = SuiteResult("counting")
    for _ in range(count):
        fam = random_family(rng)
        values = [
            counting.union_count_paper(fam),
            counting.union_count_subsets(fam),
            counting.union_count_recurrence(fam),
            len(counting.enumerate_B(fam)),
        ]
        good = len(set(values)) == 1 and values[0] <= counting.total_sequences(fam.n, fam.m, fam.d)
        res.record(good, {"functions": [list(f) for f in fam.functions], "m": fam.m, "d": fam.d,
                          "telescoped": values[0], "subsets": values[1], "recurrence": values[2],
                          "enumerated": values[3]})
    return res


def random_lists(rng: random.Random, order: int, k: int, universe: int) -> list[tuple]:
    return [tuple(sorted(rng.sample(range(1, universe + 1), k))) for _ in range(order)]


def _constructive_suite(name, build, number, order_of, seed, count, ns) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult(name)
    for n in ns:
        d = number(n)
        order = order_of(n)
        for _ in range(count):
            lists = random_lists(rng, order, d, 3 * d)
            try:
                lab = build(n, lists)
                good = all(lab[v] in lists[v] for v in range(order))
            except Exception as exc:  # a failure here is a result, not a crash
                good, lab = False, repr(exc)
            res.record(good, {"n": n, "lists": [list(l) for l in lists], "labeling": lab})
    return res


def friendship_suite(seed: int, count: int = 1000, ns=range(2, 7)) -> SuiteResult:
    def build(n, lists):
        lab = constructive.friendship_list_labeling(n, lists)
        pairs = [frozenset((lab[2 * i - 1], lab[2 * i])) for i in range(1, n + 1)]
        if len(set(pairs)) != n or any(len(p) != 2 for p in pairs):
            raise AssertionError("page label sets are not pairwise distinct 2-sets")
        return lab
    return _constructive_suite("friendship", build, constructive.friendship_distinguishing_number,
                               lambda n: 2 * n + 1, seed, count, ns)


def book_suite(seed: int, count: int = 1000, ns=range(2, 7)) -> SuiteResult:
    def build(n, lists):
        lab = constructive.book_list_labeling(n, lists)
        if lab[0] == lab[1]:
            raise AssertionError("spine labels coincide")
        return lab
    return _constructive_suite("book", build, constructive.book_distinguishing_number,
                               lambda n: 2 * n + 2, seed, count, ns)


def graph_suite(seed: int, count: int = 50) -> SuiteResult:
    """Automorphism search vs brute force, relabelling invariance, graph6 round trip."""
    rng = random.Random(seed)
    res = SuiteResult("graph")
    for _ in range(count):
        n = rng.randint(0, 6)
        edges = [e for e in ((u, v) for u in range(n) for v in range(u + 1, n)) if rng.random() < 0.5]
        g = graphs.Graph.from_edges(n, edges)
        group = graphs.automorphisms(g)
        perm = list(range(n))
        rng.shuffle(perm)
        good = (set(group.elements) == set(graphs.brute_force_automorphisms(g))
                and graphs.automorphisms(g.relabel(perm)).order == group.order
                and graphs.parse_graph6(graphs.encode_graph6(g)) == g)
        res.record(good, {"graph6": graphs.encode_graph6(g)})
    return res


def labeling_suite(seed: int, count: int = 0, max_n: int = 5) -> SuiteResult:
    """min_labels (search) vs the least m with a non-empty literal enumeration."""
    res = SuiteResult("labeling")
    for n in range(1, max_n + 1):
        for g in graphs.small_graphs(n, connected=False):
            aut = graphs.automorphisms(g)
            for pred in Predicate:
                fast = labeling.min_labels(pred, g, aut)
                slow = labeling.brute_force_min_labels(pred, g, aut)
                good = fast.number == slow and labeling.satisfies(pred, g, aut, fast.witness)
                res.record(good, {"graph6": graphs.encode_graph6(g), "pred": pred.value})
    return res


def desk_suite() -> list[graphs.Graph]:
    paw = graphs.Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)], "paw")
    return [graphs.complete(2), graphs.path(3), graphs.path(4), graphs.complete(3), graphs.star(3),
            graphs.cycle(4), paw]


def lists_suite(seed: int, count: int = 0, preds=(Predicate.DISTINGUISHING, Predicate.PROPER)) -> SuiteResult:
    """Direct oracle and characterization engine agree on the desk suite."""
    res = SuiteResult("lists")
    rows = []
    for g in desk_suite():
        aut = graphs.automorphisms(g)
        for pred in preds:
            direct = listnum.list_number_direct(pred, g, aut=aut).value
            charac, _ = listnum.list_number_characterization(pred, g, aut=aut)
            rows.append({"graph": g.name, "pred": pred.value, "direct": direct, "characterization": charac})
            res.record(direct == charac, rows[-1])
    res.details["rows"] = rows
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "counting": counting_suite,
    "friendship": friendship_suite,
    "book": book_suite,
    "graph": graph_suite,
    "labeling": labeling_suite,
    "lists": lists_suite,
}


def run(selector: str, seed: int, count: int | None = None) -> list[SuiteResult]:
    names = list(SUITES) if selector == "all" else [selector]
    out = []
    for name in names:
        if name not in SUITES:
            raise KeyError(name)
        fn = SUITES[name]
        out.append(fn(seed) if count is None else fn(seed, count))
    return out
