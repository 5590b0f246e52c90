"""Finite simple graphs: construction, named families, induced subgraphs,
regularity classification, and induced-pattern search.

Graphs are immutable once built. Vertices are the integers 0..n-1 and keep
their identity for the life of the object; all operations return new graphs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Graph",
    "RegularityProfile",
    "build_graph",
    "complete",
    "star",
    "cycle",
    "complete_multipartite",
    "k_tilde",
    "petersen",
    "rook_3x3",
    "triangular_5",
    "named_graph",
    "complement",
    "induced_subgraph",
    "disjoint_union",
    "is_connected",
    "regularity_profile",
    "induced_embedding",
    "contains_induced",
]


class Graph:
    """Immutable simple undirected graph on vertex set {0, ..., n-1}."""

    __slots__ = ("_n", "_adj", "_masks", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge endpoint out of range 0..{n - 1}: ({u}, {v})")
            if u == v:
                raise ValueError(f"self-loop rejected: ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        self._n = n
        self._adj = tuple(frozenset(s) for s in adj)
        self._masks = tuple(sum(1 << w for w in s) for s in adj)
        self._edges = tuple(
            (u, v) for u in range(n) for v in sorted(adj[u]) if u < v
        )

    @property
    def n(self) -> int:
        return self._n

    def vertices(self) -> range:
        return range(self._n)

    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    def edge_count(self) -> int:
        return len(self._edges)

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def neighbor_mask(self, v: int) -> int:
        """Neighborhood of v as a bitmask (bit w set iff v ~ w)."""
        return self._masks[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(s) for s in self._adj))

    def common_neighbor_count(self, u: int, v: int) -> int:
        return (self._masks[u] & self._masks[v]).bit_count()

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self._n, self._n))
        for u, v in self._edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={len(self._edges)})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an explicit edge list (duplicates collapse)."""
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# named families


def complete(n: int) -> Graph:
    _require_positive("n", n)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(t: int) -> Graph:
    """Star with center 0 and t leaves."""
    _require_positive("t", t)
    return Graph(t + 1, [(0, i) for i in range(1, t + 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Complete multipartite graph; vertices grouped block by block."""
    if not parts:
        raise ValueError("need at least one part")
    for p in parts:
        _require_positive("part size", p)
    n = sum(parts)
    block = []
    for i, p in enumerate(parts):
        block.extend([i] * p)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if block[u] != block[v]
    ]
    return Graph(n, edges)


def k_tilde(m: int) -> Graph:
    """Clique on 2m vertices plus an apex adjacent to exactly half of it.

    Vertices 0..2m-1 form the clique; vertex 2m is the apex, adjacent to
    0..m-1.
    """
    _require_positive("m", m)
    edges = [(u, v) for u in range(2 * m) for v in range(u + 1, 2 * m)]
    edges += [(i, 2 * m) for i in range(m)]
    return Graph(2 * m + 1, edges)


def petersen() -> Graph:
    """Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes i~i+5."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
        edges.append((i, 5 + i))
    return Graph(10, edges)


def rook_3x3() -> Graph:
    """3x3 rook's graph: cells (i,j) indexed 3i+j, adjacent iff same row or column."""
    edges = []
    for a in range(9):
        for b in range(a + 1, 9):
            if a // 3 == b // 3 or a % 3 == b % 3:
                edges.append((a, b))
    return Graph(9, edges)


def triangular_5() -> Graph:
    """Triangular graph on 2-subsets of a 5-set, adjacent iff intersecting."""
    pairs = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    edges = []
    for a in range(10):
        for b in range(a + 1, 10):
            if set(pairs[a]) & set(pairs[b]):
                edges.append((a, b))
    return Graph(10, edges)


_FAMILIES = {
    "complete": (complete, ("n",)),
    "star": (star, ("t",)),
    "cycle": (cycle, ("n",)),
    "complete_multipartite": (complete_multipartite, ("parts",)),
    "k_tilde": (k_tilde, ("m",)),
    "petersen": (petersen, ()),
    "rook": (rook_3x3, ()),
    "triangular": (triangular_5, ()),
}


def named_graph(family: str, **params) -> Graph:
    """Dispatch to a named family by keyword parameters.

    Families: complete(n), star(t), cycle(n), complete_multipartite(parts),
    k_tilde(m), petersen, rook, triangular.
    """
    if family not in _FAMILIES:
        raise ValueError(
            f"unknown family {family!r}; choose from {sorted(_FAMILIES)}"
        )
    fn, names = _FAMILIES[family]
    missing = [p for p in names if p not in params]
    extra = [p for p in params if p not in names]
    if missing or extra:
        raise ValueError(
            f"family {family!r} takes parameters {list(names)}; "
            f"missing {missing}, unexpected {extra}"
        )
    return fn(*[params[p] for p in names])


def _require_positive(name: str, value: int) -> None:
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")


# ---------------------------------------------------------------------------
# derived graphs


def complement(g: Graph) -> Graph:
    n = g.n
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if not g.adjacent(u, v)
    ]
    return Graph(n, edges)


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced on s, reindexed in ascending original order."""
    sel = sorted(set(s))
    for v in sel:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex out of range 0..{g.n - 1}: {v}")
    index = {v: i for i, v in enumerate(sel)}
    edges = [
        (index[u], index[v])
        for u in sel
        for v in g.neighbors(u)
        if v in index and u < v
    ]
    return Graph(len(sel), edges)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    edges = list(a.edges()) + [(u + a.n, v + a.n) for u, v in b.edges()]
    return Graph(a.n + b.n, edges)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


# ---------------------------------------------------------------------------
# regularity classification


@dataclass(frozen=True)
class RegularityProfile:
    """Pairwise common-neighbor statistics of a graph.

    ``sesqui_c`` is the common-neighbor count of distance-2 pairs when that
    count is the same for every such pair, else None. ``srg_a`` and
    ``coedge_c`` are the analogous constants over adjacent and over all
    non-adjacent pairs (the latter is the standard co-edge-regular parameter:
    distance-2 pairs and farther ones alike). ``vacuous_c`` flags graphs with
    no distance-2 pair at all, e.g. complete graphs, where sesqui-regularity
    holds vacuously and no c value is invented.
    """

    is_regular: bool
    k: int | None
    sesqui_c: int | None
    srg_a: int | None
    coedge_c: int | None
    diameter_at_most_2: bool
    vacuous_c: bool

    @property
    def is_sesqui_regular(self) -> bool:
        return self.is_regular and self.sesqui_c is not None

    @property
    def is_strongly_regular(self) -> bool:
        return self.is_regular and self.srg_a is not None and self.coedge_c is not None

    def to_dict(self) -> dict:
        return {
            "is_regular": self.is_regular,
            "k": self.k,
            "sesqui_c": self.sesqui_c,
            "srg_a": self.srg_a,
            "coedge_c": self.coedge_c,
            "diameter_at_most_2": self.diameter_at_most_2,
            "vacuous_c": self.vacuous_c,
        }


def regularity_profile(g: Graph) -> RegularityProfile:
    """Classify by exhaustive scan over all vertex pairs.

    Distance-2 pairs are non-adjacent pairs with at least one common
    neighbor; pairs in different components are at infinite distance and do
    not count.
    """
    n = g.n
    degrees = [g.degree(v) for v in range(n)]
    is_regular = len(set(degrees)) <= 1 and n > 0
    k = degrees[0] if is_regular else None

    a_vals: set[int] = set()
    c2_vals: set[int] = set()
    co_vals: set[int] = set()
    diameter_at_most_2 = True
    for u in range(n):
        for v in range(u + 1, n):
            common = g.common_neighbor_count(u, v)
            if g.adjacent(u, v):
                a_vals.add(common)
            else:
                co_vals.add(common)
                if common > 0:
                    c2_vals.add(common)
                else:
                    diameter_at_most_2 = False

    vacuous_c = not c2_vals
    return RegularityProfile(
        is_regular=is_regular,
        k=k,
        sesqui_c=c2_vals.pop() if len(c2_vals) == 1 else None,
        srg_a=a_vals.pop() if len(a_vals) == 1 else None,
        coedge_c=co_vals.pop() if len(co_vals) == 1 else None,
        diameter_at_most_2=diameter_at_most_2,
        vacuous_c=vacuous_c,
    )


# ---------------------------------------------------------------------------
# induced-pattern search


def induced_embedding(
    g: Graph,
    pattern: Graph,
    extra_filter=None,
) -> tuple[int, ...] | None:
    """Find an injective map pattern -> g preserving adjacency and
    non-adjacency, or None.

    Exact backtracking with bitmask candidate sets, forward checking and
    most-constrained-vertex ordering; ``extra_filter(pu, hv)`` may narrow the
    initial candidates (used for label-preserving searches).
    """
    pn, hn = pattern.n, g.n
    if pn == 0:
        return ()
    if pn > hn:
        return None

    cands = []
    for u in range(pn):
        du = pattern.degree(u)
        mask = 0
        for v in range(hn):
            dv = g.degree(v)
            if du > dv or pn - 1 - du > hn - 1 - dv:
                continue
            if extra_filter is not None and not extra_filter(u, v):
                continue
            mask |= 1 << v
        if mask == 0:
            return None
        cands.append(mask)

    assignment = [-1] * pn
    full = (1 << hn) - 1

    def solve(cands: list[int], remaining: int) -> bool:
        if remaining == 0:
            return True
        u = min(
            (x for x in range(pn) if assignment[x] < 0),
            key=lambda x: cands[x].bit_count(),
        )
        mask = cands[u]
        while mask:
            bit = mask & -mask
            mask ^= bit
            v = bit.bit_length() - 1
            nxt = list(cands)
            nxt[u] = bit
            ok = True
            for w in range(pn):
                if assignment[w] >= 0 or w == u:
                    continue
                if pattern.adjacent(u, w):
                    nxt[w] &= g.neighbor_mask(v)
                else:
                    nxt[w] &= full & ~g.neighbor_mask(v)
                nxt[w] &= ~bit
                if nxt[w] == 0:
                    ok = False
                    break
            if not ok:
                continue
            assignment[u] = v
            if solve(nxt, remaining - 1):
                return True
            assignment[u] = -1
        return False

    if solve(cands, pn):
        return tuple(assignment)
    return None


def contains_induced(g: Graph, pattern: Graph) -> bool:
    """True iff some vertex subset of g induces a copy of pattern."""
    return induced_embedding(g, pattern) is not None
