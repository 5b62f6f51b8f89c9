"""
List versions of the labeling numbers: D_l, chi_l and chi_{D_l}.

Two independent routes compute the same number:

``list_number_direct``
    Definition-level: every size-k list assignment (one representative per
    label-renaming class) is handed to a backtracking selector.

``list_number_characterization``
    Counting-level: build the literal set of satisfying labelings with
    labels <= m, and decide whether the union of their related-sequence
    sets is the whole space A of size-d list sequences, for every m in
    [d, m_max].  Membership in that union is tested against the enumerated
    labelings, never through the selector.

Assignments are identified up to renaming of labels by the multiset of
their *incidence sets*: for each label, the set of vertices whose list
contains it.  That multiset is a complete invariant of the renaming
class, and an assignment with u labels over {1..m} has
``m!/(m-u)! / prod(mult!)`` renamed copies, which lets the characterization
report exact sizes of B and A without expanding orbits.

Only assignments with lists of exactly k labels are examined.  Allowing
longer lists changes nothing: shrink each list to any k of its labels, and
a selection from the shrunken lists is a selection from the originals.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import comb
from typing import Callable, Iterable, Iterator, Sequence

from listdist.counting import (
    DEFAULT_SUBSET_CAP,
    FunctionFamily,
    falling_factorial,
    multinomial_denominator,
    union_count_paper,
)
from listdist.errors import CapExceededError, ListDistError
from listdist.graphs import AutomorphismGroup, Graph, automorphisms, encode_graph6
from listdist.labeling import (
    DEFAULT_ENUMERATION_CAP,
    LabelingSearch,
    Labeling,
    Predicate,
    enumerate_labelings,
    min_labels,
    satisfies,
)

log = logging.getLogger(__name__)

DEFAULT_PRODUCT_CAP = 10**12
DEFAULT_ASSIGNMENT_CAP = 10**7


@dataclass(frozen=True)
class ListAssignment:
    """One list of labels per vertex, all of the same size ``k``."""

    lists: tuple
    universe_bound: int | None = None

    def __post_init__(self):
        lists = tuple(tuple(sorted(set(int(x) for x in l))) for l in self.lists)
        object.__setattr__(self, "lists", lists)
        sizes = {len(l) for l in lists}
        if len(sizes) > 1:
            raise ValueError(f"lists must share one size, got sizes {sorted(sizes)}")
        if any(x < 1 for l in lists for x in l):
            raise ValueError("labels must be positive")
        top = max((x for l in lists for x in l), default=0)
        if self.universe_bound is None:
            object.__setattr__(self, "universe_bound", top)
        elif top > self.universe_bound:
            raise ValueError(f"label {top} exceeds universe bound {self.universe_bound}")

    @property
    def k(self) -> int:
        return len(self.lists[0]) if self.lists else 0

    def __len__(self):
        return len(self.lists)

    def to_json(self) -> list:
        return [list(l) for l in self.lists]


# ---------------------------------------------------------------------------
# renaming classes of list assignments
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RenamingClass:
    """A list assignment up to renaming of labels.

    ``masks`` are the incidence sets (vertex bitmasks), sorted by lowest
    vertex then value; label ``j+1`` is carried by ``masks[j]``.
    """

    masks: tuple
    n: int

    @property
    def labels_used(self) -> int:
        return len(self.masks)

    @property
    def lists(self) -> tuple:
        out = [[] for _ in range(self.n)]
        for j, mk in enumerate(self.masks, start=1):
            for v in _bits(mk):
                out[v].append(j)
        return tuple(map(tuple, out))

    def assignment(self) -> ListAssignment:
        return ListAssignment(self.lists)

    def multiplicities(self) -> list[int]:
        counts: dict = {}
        for mk in self.masks:
            counts[mk] = counts.get(mk, 0) + 1
        return list(counts.values())

    def orbit_size(self, m: int) -> int:
        """Number of distinct assignments over {1..m} in this class."""
        return falling_factorial(m, self.labels_used) // multinomial_denominator(self.multiplicities())


@lru_cache(maxsize=None)
def _bits(mk: int) -> tuple[int, ...]:
    return tuple(v for v in range(mk.bit_length()) if mk >> v & 1)


def _mask_key(mk: int) -> tuple[int, int]:
    return ((mk & -mk).bit_length(), mk)


def canonical_form(lists: Sequence[Iterable[int]]) -> RenamingClass:
    """The renaming class of an arbitrary list assignment."""
    incidence: dict = {}
    for v, l in enumerate(lists):
        for x in set(l):
            incidence[x] = incidence.get(x, 0) | (1 << v)
    return RenamingClass(tuple(sorted(incidence.values(), key=_mask_key)), len(lists))


def renaming_classes(n: int, k: int) -> Iterator[RenamingClass]:
    """One representative per renaming class of size-k assignments on n vertices.

    Incidence sets are chosen grouped by their lowest vertex: the sets with
    lowest vertex v must top vertex v up to k, and later vertices can always
    be completed, so the generation never dead-ends.
    """
    if k < 1:
        raise ValueError("list size must be >= 1")
    cov = [0] * n
    chosen: list[int] = []
    group_masks = []
    for v in range(n):
        masks = []
        for s in range(1 << (n - v - 1)):
            mk = (1 << v) | (s << (v + 1))
            masks.append((mk, [w for w in range(v + 1, n) if mk >> w & 1]))
        group_masks.append(masks)

    def group(v):
        if v == n:
            yield RenamingClass(tuple(chosen), n)
            return
        yield from pick(v, k - cov[v], 0)

    def pick(v, need, start):
        if need == 0:
            yield from group(v + 1)
            return
        masks = group_masks[v]
        for i in range(start, len(masks)):
            mk, above = masks[i]
            if any(cov[w] >= k for w in above):
                continue
            for w in above:
                cov[w] += 1
            chosen.append(mk)
            yield from pick(v, need - 1, i)
            chosen.pop()
            for w in above:
                cov[w] -= 1

    yield from group(0)


@lru_cache(maxsize=None)
def count_renaming_classes(n: int, k: int) -> int:
    """Number of items :func:`renaming_classes` yields, by dynamic programming."""
    subsets = list(range(1, 1 << n))

    @lru_cache(maxsize=None)
    def go(idx, cov):
        if all(c == k for c in cov):
            return 1
        if idx == len(subsets):
            return 0
        s = subsets[idx]
        total = 0
        c = list(cov)
        while True:
            total += go(idx + 1, tuple(c))
            for v in range(n):
                if s >> v & 1:
                    c[v] += 1
            if any(x > k for x in c):
                return total

    return go(0, (0,) * n)


# ---------------------------------------------------------------------------
# selection
# ---------------------------------------------------------------------------

def _group_for(pred: Predicate, g: Graph, aut: AutomorphismGroup | None) -> AutomorphismGroup | None:
    if pred.distinguishing and aut is None:
        return automorphisms(g)
    return aut


def select_satisfying(pred, g: Graph, aut: AutomorphismGroup | None, lists,
                      cap: int = DEFAULT_PRODUCT_CAP, search: LabelingSearch | None = None) -> Labeling | None:
    """A labeling choosing each vertex's label from its list and satisfying
    ``pred``, or ``None``. Returns the lexicographically least one."""
    pred = Predicate.parse(pred)
    if isinstance(lists, ListAssignment):
        lists = lists.lists
    if len(lists) != g.order:
        raise ValueError("need one list per vertex")
    if any(len(l) == 0 for l in lists):
        return None
    space = 1
    for l in lists:
        space *= len(l)
    if space > cap:
        raise CapExceededError(f"list product space {space} exceeds cap {cap}")
    if search is None:
        search = LabelingSearch(g, _group_for(pred, g, aut), pred)
    return search.first(lists)


def brute_force_selectable(pred, g: Graph, aut: AutomorphismGroup | None, lists) -> bool:
    """Reference oracle: try every labeling in the product of the lists."""
    pred = Predicate.parse(pred)
    if isinstance(lists, ListAssignment):
        lists = lists.lists
    aut = _group_for(pred, g, aut)
    return any(satisfies(pred, g, aut, c) for c in product(*lists))


# ---------------------------------------------------------------------------
# direct oracle
# ---------------------------------------------------------------------------

@dataclass
class KResult:
    k: int
    passed: bool
    representatives: int
    witness: ListAssignment | None = None


@dataclass
class DirectResult:
    value: int | None
    per_k: list[KResult] = field(default_factory=list)


def check_list_size(pred, g: Graph, k: int, aut: AutomorphismGroup | None = None,
                    cap: int = DEFAULT_ASSIGNMENT_CAP, drop_fixed: bool = True) -> KResult:
    """Does every size-k list assignment admit a satisfying selection?

    For the plain distinguishing predicate, vertices fixed by the whole
    group cannot break any symmetry, so their lists are irrelevant and
    only the remaining vertices are enumerated (``drop_fixed``).
    The first failing assignment found is returned as the witness.
    """
    pred = Predicate.parse(pred)
    aut = _group_for(pred, g, aut)
    n = g.order
    free = list(range(n))
    if drop_fixed and pred is Predicate.DISTINGUISHING:
        fixed = set(aut.fixed_vertices)
        free = [v for v in range(n) if v not in fixed]
    total = count_renaming_classes(len(free), k)
    if total > cap:
        raise CapExceededError(
            f"{total} renaming classes of size-{k} assignments on {len(free)} vertices exceed cap {cap}")
    search = LabelingSearch(g, aut, pred)
    filler = tuple(range(1, k + 1))
    checked = 0
    for rep in renaming_classes(len(free), k):
        lists = [filler] * n
        for pos, l in zip(free, rep.lists):
            lists[pos] = l
        checked += 1
        if search.first(lists) is None:
            return KResult(k, False, checked, ListAssignment(lists))
    return KResult(k, True, checked)


def list_number_direct(pred, g: Graph, k_max: int | None = None, aut: AutomorphismGroup | None = None,
                       cap: int = DEFAULT_ASSIGNMENT_CAP, stop_at_first_pass: bool = True,
                       drop_fixed: bool = True) -> DirectResult:
    """Least k such that every size-k list assignment admits a selection.

    Each k is decided independently; with ``stop_at_first_pass=False``
    every k in ``1..k_max`` is evaluated and reported.
    """
    pred = Predicate.parse(pred)
    if g.order == 0:
        return DirectResult(0)
    aut = _group_for(pred, g, aut)
    k_max = g.order if k_max is None else k_max
    result = DirectResult(None)
    for k in range(1, k_max + 1):
        res = check_list_size(pred, g, k, aut, cap, drop_fixed)
        result.per_k.append(res)
        if res.passed and result.value is None:
            result.value = k
            if stop_at_first_pass:
                break
    return result


# ---------------------------------------------------------------------------
# characterization engine
# ---------------------------------------------------------------------------

@dataclass
class MEntry:
    m: int
    count_B: int
    count_A: int

    @property
    def equal(self) -> bool:
        return self.count_B == self.count_A


@dataclass
class CharacterizationReport:
    d: int
    m_max: int
    per_m: list[MEntry]
    witness: ListAssignment | None = None

    @property
    def verdict(self) -> bool:
        return all(e.equal for e in self.per_m)


def _membership_sweep(pred, g, d, m_values, aut, cap, enum_cap):
    """Exact |B_m| for each m via renaming classes; plus the first class outside B."""
    n = g.order
    top = max(m_values)
    total = count_renaming_classes(n, d)
    if total > cap:
        raise CapExceededError(f"{total} renaming classes of size-{d} lists on {n} vertices exceed cap {cap}")
    members = set(enumerate_labelings(pred, g, top, aut, cap=enum_cap).members)
    count_B = dict.fromkeys(m_values, 0)
    witness = None
    for rep in renaming_classes(n, d):
        u = rep.labels_used
        if u > top:
            continue
        lists = rep.lists
        if any(c in members for c in product(*lists)):
            for m in m_values:
                if u <= m:
                    count_B[m] += rep.orbit_size(m)
        elif witness is None:
            witness = ListAssignment(lists, top)
    entries = [MEntry(m, count_B[m], comb(m, d) ** n) for m in m_values]
    return entries, witness


def characterization_holds_at(pred, g: Graph, d: int, m: int, strategy: str = "membership",
                              aut: AutomorphismGroup | None = None, cap: int = DEFAULT_ASSIGNMENT_CAP,
                              subset_cap: int = DEFAULT_SUBSET_CAP,
                              enum_cap: int = DEFAULT_ENUMERATION_CAP) -> tuple[MEntry, ListAssignment | None]:
    """Decide B = A at one (d, m) for the satisfying labelings with labels <= m.

    ``strategy="counting"`` evaluates |B| with the telescoped inclusion-
    exclusion sum over the labelings (needs t_m <= subset_cap);
    ``"membership"`` walks renaming classes of A.
    """
    pred = Predicate.parse(pred)
    if not 1 <= d <= m:
        raise ValueError("need 1 <= d <= m")
    aut = _group_for(pred, g, aut)
    if strategy == "membership":
        entries, witness = _membership_sweep(pred, g, d, [m], aut, cap, enum_cap)
        return entries[0], witness
    if strategy == "counting":
        labelings = enumerate_labelings(pred, g, m, aut, cap=enum_cap)
        count_A = comb(m, d) ** g.order
        if labelings.t == 0:
            return MEntry(m, 0, count_A), None
        if labelings.t > subset_cap:
            raise CapExceededError(f"t_{m} = {labelings.t} labelings exceed the subset cap {subset_cap}")
        count_B = union_count_paper(FunctionFamily(labelings.members, m, d), cap=subset_cap)
        return MEntry(m, count_B, count_A), None
    raise ValueError(f"unknown strategy {strategy!r}")


def list_number_characterization(pred, g: Graph, m_max: int | None = None,
                                 aut: AutomorphismGroup | None = None,
                                 cap: int = DEFAULT_ASSIGNMENT_CAP,
                                 enum_cap: int = DEFAULT_ENUMERATION_CAP) -> tuple[int, list[CharacterizationReport]]:
    """Least d for which B = A at every m in [d, m_max].

    ``m_max`` defaults to n*d: a size-d assignment on n vertices uses at most
    n*d labels, so after renaming every assignment already lives inside
    {1..n*d} and larger m add nothing new.  Starting d is the ordinary
    number, which is a lower bound (identical lists reduce to it).
    """
    pred = Predicate.parse(pred)
    n = g.order
    if n == 0:
        return 0, []
    aut = _group_for(pred, g, aut)
    reports = []
    for d in range(min_labels(pred, g, aut).number, n + 1):
        top = m_max if m_max is not None else n * d
        if top < d:
            raise ValueError(f"m_max={top} is below d={d}")
        entries, witness = _membership_sweep(pred, g, d, list(range(d, top + 1)), aut, cap, enum_cap)
        report = CharacterizationReport(d, top, entries, None if all(e.equal for e in entries) else witness)
        reports.append(report)
        if report.verdict:
            return d, reports
    raise ListDistError(f"no list size up to n={n} passed; lists of size n always admit an injective selection")


# ---------------------------------------------------------------------------
# counterexample hunt
# ---------------------------------------------------------------------------

@dataclass
class Hit:
    graph: Graph
    base: int
    k: int
    assignment: ListAssignment
    reverified: bool

    def to_json(self) -> dict:
        return {
            "graph6": encode_graph6(self.graph),
            "n": self.graph.order,
            "edges": [list(e) for e in self.graph.sorted_edges()],
            "base": self.base,
            "k": self.k,
            "assignment": self.assignment.to_json(),
            "reverified": self.reverified,
        }


@dataclass
class HuntReport:
    scanned: int = 0
    skipped: list = field(default_factory=list)  # (index, reason)
    hits: list = field(default_factory=list)

    def summary(self) -> dict:
        return {"scanned": self.scanned, "skipped": len(self.skipped), "hits": len(self.hits)}


def _hunt_one(args):
    pred, g, k_offset, group_cap, cap = args
    try:
        aut = automorphisms(g, group_cap) if pred.distinguishing else None
        base = min_labels(pred, g, aut).number
        k = base + k_offset
        if k < 1:
            return ("ok", None)
        res = check_list_size(pred, g, k, aut, cap)
    except CapExceededError as exc:
        return ("skip", str(exc))
    if res.passed:
        return ("ok", None)
    ok = not brute_force_selectable(pred, g, aut, res.witness)
    return ("hit", Hit(g, base, k, res.witness, ok))


def hunt(pred, graphs: Iterable[Graph], k_offset: int = 0, group_cap: int = 10**6,
         cap: int = DEFAULT_ASSIGNMENT_CAP, jobs: int = 1,
         on_result: Callable | None = None) -> HuntReport:
    """Look for graphs whose list number exceeds the ordinary number.

    For each graph the ordinary number ``base`` is computed, then every
    size ``base + k_offset`` list assignment is tried.  A failing assignment
    is re-checked by brute force over its whole product before being
    reported.  Graphs that hit a cap are skipped and logged.
    ``on_result(index, status, payload)`` is called in input order.
    """
    pred = Predicate.parse(pred)
    report = HuntReport()
    tasks = ((pred, g, k_offset, group_cap, cap) for g in graphs)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_hunt_one, tasks, chunksize=1))
    else:
        results = map(_hunt_one, tasks)
    for i, (status, payload) in enumerate(results):
        report.scanned += 1
        if status == "skip":
            log.warning("graph %d skipped: %s", i, payload)
            report.skipped.append((i, payload))
        elif status == "hit":
            report.hits.append(payload)
        if on_result is not None:
            on_result(i, status, payload)
    return report
