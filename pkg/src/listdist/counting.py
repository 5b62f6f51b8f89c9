"""
Counting (m, d)-related sequences.

Given functions f_1..f_t from an n-point domain into labels {1..m}, a
related sequence for f is a choice of one d-subset L_a of {1..m} per point
with f(a) in L_a.  The union over the family, B, is counted four ways:

* ``union_count_paper``      telescoped sum of S_i, where S_i counts the
                             sequences new to f_i given f_1..f_{i-1}
* ``union_count_subsets``    plain inclusion-exclusion over all sub-families
* ``union_count_recurrence`` recursion on the universe size: peel off the
                             top label, split the domain by which lists hold it
* ``enumerate_B``            explicit enumeration (the ground truth)

All counts are exact Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb, factorial, prod
from typing import Sequence

from listdist.errors import CapExceededError

DEFAULT_SUBSET_CAP = 20
DEFAULT_SEQUENCE_CAP = 10**7

RelatedSequence = tuple  # n sorted d-tuples of labels


@dataclass(frozen=True)
class FunctionFamily:
    """``functions[j][a]`` is f_{j+1}(a_{a+1}); values in ``1..m``."""

    functions: tuple
    m: int
    d: int

    def __post_init__(self):
        fs = tuple(tuple(int(x) for x in f) for f in self.functions)
        object.__setattr__(self, "functions", fs)
        if not 1 <= self.d <= self.m:
            raise ValueError(f"need 1 <= d <= m, got d={self.d}, m={self.m}")
        if fs:
            n = len(fs[0])
            if any(len(f) != n for f in fs):
                raise ValueError("all functions must share one domain size")
            if any(not 1 <= x <= self.m for f in fs for x in f):
                raise ValueError(f"function values must lie in 1..{self.m}")

    @property
    def t(self) -> int:
        return len(self.functions)

    @property
    def n(self) -> int:
        return len(self.functions[0]) if self.functions else 0


def _check_md(m: int, d: int):
    if not 1 <= d <= m:
        raise ValueError(f"need 1 <= d <= m, got d={d}, m={m}")


def related_sequence_count(n: int, m: int, d: int) -> int:
    """Number of (m, d)-related sequences to a single function: C(m-1, d-1)^n."""
    _check_md(m, d)
    return comb(m - 1, d - 1) ** n


def total_sequences(n: int, m: int, d: int) -> int:
    """Size of the whole space A of d-list sequences: C(m, d)^n."""
    _check_md(m, d)
    return comb(m, d) ** n


def overlap_profile(fam: FunctionFamily, subset: Sequence[int]) -> tuple[int, ...]:
    """``counts[p-1]``: points where the sub-family takes exactly p distinct values.

    ``subset`` holds 0-based function indices.
    """
    idx = sorted(set(subset))
    if not idx:
        raise ValueError("overlap profile needs a non-empty sub-family")
    if idx[0] < 0 or idx[-1] >= fam.t:
        raise IndexError(f"function index out of range 0..{fam.t - 1}")
    counts = [0] * len(idx)
    for a in range(fam.n):
        counts[len({fam.functions[j][a] for j in idx}) - 1] += 1
    return tuple(counts)


def intersection_count(profile: Sequence[int], m: int, d: int) -> int:
    """Sequences related to every function of the sub-family with this profile.

    A point forcing p distinct values leaves C(m-p, d-p) lists, and none
    when p > d.
    """
    _check_md(m, d)
    total = 1
    for p, n_p in enumerate(profile, start=1):
        if n_p == 0:
            continue
        if p > d:
            return 0
        total *= comb(m - p, d - p) ** n_p
    return total


def _check_subset_cap(fam: FunctionFamily, cap: int):
    if fam.t < 1:
        raise ValueError("family must contain at least one function")
    if fam.t > cap:
        raise CapExceededError(
            f"t={fam.t} functions exceeds the subset cap {cap}; "
            "use enumerate_B or a membership test instead")


def new_sequences(fam: FunctionFamily, i: int) -> int:
    """S_i: sequences related to f_i but to none of f_1..f_{i-1} (``i`` is 1-based)."""
    last = i - 1
    total = 0
    for r in range(i):
        sign = -1 if r % 2 else 1
        for earlier in combinations(range(last), r):
            total += sign * intersection_count(overlap_profile(fam, earlier + (last,)), fam.m, fam.d)
    return total


def union_count_paper(fam: FunctionFamily, cap: int = DEFAULT_SUBSET_CAP) -> int:
    """|B| as the telescoped sum S_1 + ... + S_t."""
    _check_subset_cap(fam, cap)
    return sum(new_sequences(fam, i) for i in range(1, fam.t + 1))


def union_count_subsets(fam: FunctionFamily, cap: int = DEFAULT_SUBSET_CAP) -> int:
    """|B| by inclusion-exclusion over every non-empty sub-family."""
    _check_subset_cap(fam, cap)
    total = 0
    for r in range(1, fam.t + 1):
        sign = 1 if r % 2 else -1
        for sub in combinations(range(fam.t), r):
            total += sign * intersection_count(overlap_profile(fam, sub), fam.m, fam.d)
    return total


# Point values inside the recurrence: a label 1..m, or one of these markers.
_FREE = 0    # the point's list already holds this function's value (a peeled label)
_DEAD = -1   # this function's value was peeled off and left out of the point's list


def _fit_distribution(columns: tuple, t: int, m: int, d: int) -> dict:
    """Map fitting-set bitmask -> number of sequences over these points.

    ``columns`` has one t-tuple of function values per point.  A sequence's
    fitting set is the set of functions contained pointwise in it.
    """
    return _fit_distribution_cached(tuple(sorted(columns)), t, m, d)


@lru_cache(maxsize=None)
def _fit_distribution_cached(columns: tuple, t: int, m: int, d: int) -> dict:
    full = (1 << t) - 1
    if not columns:
        return {full: 1}
    if d > m:
        return {}

    def mask_where(ok):
        mask = full
        for col in columns:
            for j, x in enumerate(col):
                if not ok(x):
                    mask &= ~(1 << j)
        return mask

    if d == 0:
        return {mask_where(lambda x: x == _FREE): 1}
    if d == m:
        return {mask_where(lambda x: x != _DEAD): 1}

    # Peel label m: points in `held` get it in their list (value m becomes
    # satisfied, d-1 slots remain); the others exclude it (value m can no
    # longer be met).
    out: dict = {}
    k = len(columns)
    for r in range(k + 1):
        for held in combinations(range(k), r):
            held_set = set(held)
            inside = tuple(tuple(_FREE if x == m else x for x in columns[i]) for i in held)
            outside = tuple(tuple(_DEAD if x == m else x for x in columns[i])
                            for i in range(k) if i not in held_set)
            left = _fit_distribution(inside, t, m - 1, d - 1)
            if not left:
                continue
            right = _fit_distribution(outside, t, m - 1, d)
            for lm, lc in left.items():
                for rm, rc in right.items():
                    key = lm & rm
                    out[key] = out.get(key, 0) + lc * rc
    return out


def union_count_recurrence(fam: FunctionFamily, cap: int = DEFAULT_SUBSET_CAP) -> int:
    """|B| by recursion on the universe size.

    Every sequence over {1..m} splits by the set of points whose list holds
    label m; the held part is a (m-1, d-1) problem and the rest a (m-1, d)
    problem.  Because one function must fit at *every* point, the recursion
    tracks which functions fit (a bitmask) rather than bare counts, and the
    two halves combine by intersecting those sets.
    """
    _check_subset_cap(fam, cap)
    columns = tuple(tuple(f[a] for f in fam.functions) for a in range(fam.n))
    dist = _fit_distribution(columns, fam.t, fam.m, fam.d)
    return sum(c for mask, c in dist.items() if mask)


def fit_distribution(fam: FunctionFamily) -> dict:
    """Fitting-set distribution over the whole space A (keys are bitmasks)."""
    columns = tuple(tuple(f[a] for f in fam.functions) for a in range(fam.n))
    return dict(_fit_distribution(columns, fam.t, fam.m, fam.d))


def enumerate_B(fam: FunctionFamily, cap: int = DEFAULT_SEQUENCE_CAP) -> list[RelatedSequence]:
    """Every sequence related to at least one function, sorted lexicographically."""
    size = total_sequences(fam.n, fam.m, fam.d)
    if size > cap:
        raise CapExceededError(f"C({fam.m},{fam.d})^{fam.n} = {size} sequences exceed cap {cap}")
    lists = list(combinations(range(1, fam.m + 1), fam.d))
    found = []
    for seq in product(lists, repeat=fam.n):
        if any(all(f[a] in seq[a] for a in range(fam.n)) for f in fam.functions):
            found.append(seq)
    return found


def related_sequences(f: Sequence[int], m: int, d: int) -> list[RelatedSequence]:
    """All (m, d)-related sequences to one function, sorted."""
    _check_md(m, d)
    per_point = []
    for x in f:
        others = [y for y in range(1, m + 1) if y != x]
        per_point.append(sorted(tuple(sorted(c + (x,))) for c in combinations(others, d - 1)))
    return sorted(product(*per_point))


def falling_factorial(m: int, u: int) -> int:
    return factorial(m) // factorial(m - u) if 0 <= u <= m else 0


def multinomial_denominator(multiplicities: Sequence[int]) -> int:
    return prod(factorial(k) for k in multiplicities)
