"""
Small simple graphs: representation, graph6 / edge-list I/O, named families
and exhaustive automorphism groups.

Vertices are always the dense integers 0..n-1. The friendship and book
families use a fixed numbering so that the constructive list labelings in
:mod:`listdist.constructive` can address pages directly:

    friendship(n): centre w = 0, page i (1..n) owns vertices 2i-1, 2i
    book(n):       spine v0 = 0, w0 = 1, page i (1..n) owns v_i = 2i, w_i = 2i+1
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

import numpy as np

from listdist.errors import GraphParseError, GroupTruncatedError

Permutation = tuple  # image[v] is the image of vertex v

DEFAULT_GROUP_CAP = 10**6
GRAPH6_HEADER = ">>graph6<<"


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..order-1``.

    Equality is literal (same order, same edge set); ``name`` is cosmetic.
    """

    order: int
    edges: frozenset = frozenset()
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"negative vertex count {self.order}")
        normalized = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise ValueError(f"edge {{{u},{v}}} out of range for n={self.order}")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Sequence[int]], name=None) -> "Graph":
        """Build a graph, rejecting duplicate edges (in either orientation)."""
        seen = set()
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {{{u},{v}}}")
            seen.add(key)
        return cls(order, frozenset(seen), name)

    @cached_property
    def adjacency(self) -> tuple[frozenset, ...]:
        nbrs = [set() for _ in range(self.order)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image of the graph under the vertex bijection ``v -> perm[v]``."""
        if sorted(perm) != list(range(self.order)):
            raise ValueError("relabelling must be a permutation of the vertex set")
        return Graph(self.order, frozenset((perm[u], perm[v]) for u, v in self.edges), self.name)

    def is_connected(self) -> bool:
        if self.order <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self.adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.order

    def __repr__(self):
        label = self.name or "Graph"
        return f"<{label}: n={self.order}, m={len(self.edges)}>"


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise ValueError(f"graph6 cannot encode n={n}")


def encode_graph6(g: Graph) -> str:
    """Standard graph6 encoding (no header, no newline)."""
    bits = [1 if g.has_edge(i, j) else 0 for j in range(g.order) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chunks = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chunks.append(chr(val + 63))
    return _encode_size(g.order) + "".join(chunks)


def parse_graph6(text: str, name: str | None = None) -> Graph:
    """Decode one graph6 line.

    Accepts an optional ``>>graph6<<`` header and surrounding whitespace.
    Raises :class:`GraphParseError` naming the offending byte offset.
    """
    s = text.strip()
    base = 0
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not s:
        raise GraphParseError("empty graph6 input")
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphParseError(f"byte {ch!r} outside graph6 range 63..126", base + i)

    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    elif len(s) >= 2 and s[1] == "~":
        raise GraphParseError("graphs with n > 258047 are not supported", base + 1)
    else:
        if len(s) < 4:
            raise GraphParseError("truncated length header", base + len(s))
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 4

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[pos:]
    if len(body) < nbytes:
        raise GraphParseError(f"adjacency data too short: need {nbytes} bytes for n={n}", base + len(s))
    if len(body) > nbytes:
        raise GraphParseError("trailing garbage after adjacency data", base + pos + nbytes)

    edges = set()
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.add((i, j))
            k += 1
    if nbytes:
        pad = 6 * nbytes - nbits
        if (ord(body[-1]) - 63) & ((1 << pad) - 1):
            raise GraphParseError("non-zero padding bits", base + pos + nbytes - 1)
    return Graph(n, frozenset(edges), name)


# ---------------------------------------------------------------------------
# edge lists
# ---------------------------------------------------------------------------

def parse_edge_list(text: str, name: str | None = None) -> Graph:
    """Parse ``n`` followed by whitespace-separated pairs ``u v``.

    ``#`` starts a comment that runs to end of line.
    """
    tokens = []
    for line in text.splitlines():
        tokens.extend(line.split("#", 1)[0].split())
    if not tokens:
        raise GraphParseError("empty edge list")
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise GraphParseError(f"non-integer token: {exc}") from None
    n, rest = nums[0], nums[1:]
    if n < 0:
        raise GraphParseError(f"negative vertex count {n}")
    if len(rest) % 2:
        raise GraphParseError("odd number of endpoint tokens")
    seen = set()
    for k in range(0, len(rest), 2):
        u, v = rest[k], rest[k + 1]
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"edge {u} {v}: endpoint out of range for n={n}")
        if u == v:
            raise GraphParseError(f"edge {u} {v}: self-loop")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"edge {u} {v}: duplicate edge")
        seen.add(key)
    return Graph(n, frozenset(seen), name)


def format_edge_list(g: Graph) -> str:
    lines = [str(g.order)] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------

def friendship(n: int) -> Graph:
    if n < 2:
        raise ValueError("friendship graph needs n >= 2")
    edges = []
    for i in range(1, n + 1):
        a, b = 2 * i - 1, 2 * i
        edges += [(0, a), (0, b), (a, b)]
    return Graph.from_edges(2 * n + 1, edges, f"friendship({n})")


def book(n: int) -> Graph:
    if n < 2:
        raise ValueError("book graph needs n >= 2")
    edges = [(0, 1)]
    for i in range(1, n + 1):
        v, w = 2 * i, 2 * i + 1
        edges += [(0, v), (1, w), (v, w)]
    return Graph.from_edges(2 * n + 2, edges, f"book({n})")


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"path({n})")


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"cycle({n})")


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2), f"complete({n})")


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("complete bipartite graph needs both sides >= 1")
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return Graph.from_edges(a + b, edges, f"complete_bipartite({a},{b})")


def star(n: int) -> Graph:
    """K_{1,n} with the centre at vertex 0."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)], f"star({n})")


FAMILIES = {
    "friendship": (friendship, 1),
    "book": (book, 1),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "star": (star, 1),
}


def generate_family(family: str, *params: int) -> Graph:
    try:
        builder, arity = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    if len(params) != arity:
        raise ValueError(f"{family} takes {arity} integer parameter(s), got {len(params)}")
    return builder(*params)


# ---------------------------------------------------------------------------
# automorphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AutomorphismGroup:
    """Explicit list of every automorphism (sorted, identity first)."""

    elements: tuple
    order_cap: int = DEFAULT_GROUP_CAP
    complete: bool = True

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def degree(self) -> int:
        return len(self.elements[0]) if self.elements else 0

    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    @cached_property
    def array(self) -> np.ndarray:
        """Elements as an ``(order, n)`` integer array."""
        return np.array(self.elements, dtype=np.intp).reshape(len(self.elements), self.degree)

    @cached_property
    def fixed_vertices(self) -> tuple[int, ...]:
        """Vertices fixed by every automorphism."""
        if not self.elements:
            return ()
        arr = self.array
        return tuple(int(v) for v in np.flatnonzero((arr == np.arange(self.degree)).all(axis=0)))


def _search_order(g: Graph) -> list[int]:
    # Highest degree first, then greedily the vertex with most placed neighbours,
    # so adjacency constraints bite early.
    n = g.order
    order: list[int] = []
    placed = [False] * n
    links = [0] * n
    for _ in range(n):
        v = max((u for u in range(n) if not placed[u]), key=lambda u: (links[u], g.degrees[u], -u))
        order.append(v)
        placed[v] = True
        for w in g.adjacency[v]:
            links[w] += 1
    return order


def iter_automorphisms(g: Graph) -> Iterator[Permutation]:
    """Yield every automorphism of ``g`` via degree-pruned backtracking."""
    n = g.order
    if n == 0:
        yield ()
        return
    order = _search_order(g)
    adj = g.adjacency
    deg = g.degrees
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(deg[v], []).append(v)
    image = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            yield tuple(image)
            return
        v = order[i]
        earlier = order[:i]
        for cand in by_degree[deg[v]]:
            if used[cand]:
                continue
            if any((u in adj[v]) != (image[u] in adj[cand]) for u in earlier):
                continue
            image[v] = cand
            used[cand] = True
            yield from extend(i + 1)
            used[cand] = False
        image[v] = -1

    yield from extend(0)


def automorphisms(g: Graph, cap: int = DEFAULT_GROUP_CAP, allow_truncated: bool = False) -> AutomorphismGroup:
    """The full automorphism group of ``g``.

    Raises :class:`GroupTruncatedError` once more than ``cap`` elements are
    found, unless ``allow_truncated`` is set, in which case the partial
    group is returned with ``complete=False``.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    found = []
    for perm in iter_automorphisms(g):
        if len(found) == cap:
            if allow_truncated:
                return AutomorphismGroup(tuple(sorted(found)), cap, complete=False)
            raise GroupTruncatedError(f"automorphism group of {g!r} has more than {cap} elements")
        found.append(perm)
    return AutomorphismGroup(tuple(sorted(found)), cap, complete=True)


def brute_force_automorphisms(g: Graph) -> list[Permutation]:
    """Reference oracle: test all n! permutations. Desk scale only."""
    edges = g.edges
    out = []
    for perm in permutations(range(g.order)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in edges for u, v in edges):
            out.append(perm)
    return out


# ---------------------------------------------------------------------------
# small-graph corpus
# ---------------------------------------------------------------------------

def _brute_canonical_key(n: int, edges: frozenset, perms: list) -> tuple:
    return min(tuple(sorted((min(p[u], p[v]), max(p[u], p[v])) for u, v in edges)) for p in perms)


def small_graphs(n: int, connected: bool = True) -> list[Graph]:
    """All graphs on ``n`` vertices up to isomorphism, by brute force.

    Intended for corpora with n <= 6; output order is deterministic.
    """
    if n > 6:
        raise ValueError("brute-force enumeration is limited to n <= 6")
    pairs = list(combinations(range(n), 2))
    perms = list(permutations(range(n)))
    seen = {}
    for mask in range(1 << len(pairs)):
        edges = frozenset(pairs[i] for i in range(len(pairs)) if mask >> i & 1)
        g = Graph(n, edges)
        if connected and not g.is_connected():
            continue
        key = _brute_canonical_key(n, edges, perms)
        if key not in seen:
            seen[key] = Graph(n, frozenset(key))
    return [seen[k] for k in sorted(seen, key=lambda k: (len(k), k))]
