"""Hoffman graphs: slim/fat-labeled graphs, their special matrices and
smallest eigenvalues, fat-vertex clique expansions, and the named families
with closed-form spectra.

A Hoffman graph is a graph whose vertices are labeled slim or fat such that
(i) fat vertices are pairwise non-adjacent and (ii) every fat vertex has at
least one slim neighbor. Its eigenvalues are those of the special matrix
S = A_s - C C^T, where A_s is the slim-slim adjacency matrix and C the
slim-fat incidence: off the diagonal S subtracts the number of common fat
neighbors, on the diagonal it holds minus the fat degree.

Expanding replaces each fat vertex by a p-clique completely joined to that
fat vertex's neighbors; the smallest eigenvalue of the expansion never drops
below that of the Hoffman graph and converges down to it as p grows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .graph6 import graph6_decode, graph6_encode
from .graphs import Graph, complement, induced_subgraph
from .spectral import (
    MARGIN_GUARD,
    eigenvalues,
    is_marginal,
    lambda_max,
    strictly_below,
)

__all__ = [
    "SLIM",
    "FAT",
    "HoffmanConditionError",
    "HoffmanGraph",
    "build_hoffman",
    "hoffman_from_fat",
    "special_matrix",
    "lambda_min_hoffman",
    "induced_hoffman",
    "expand",
    "HoffmanCatalogEntry",
    "catalog",
    "CATALOG_FAMILIES",
    "ExpansionSearch",
    "minimal_expansion_order",
    "hoffman_to_text",
    "hoffman_from_text",
    "induced_hoffman_embedding",
    "contains_induced_hoffman",
]

SLIM = "slim"
FAT = "fat"


class HoffmanConditionError(ValueError):
    """A slim/fat labeling violating one of the two defining conditions.

    ``condition`` is "i" (adjacent fat pair) or "ii" (fat vertex with no
    slim neighbor).
    """

    def __init__(self, condition: str, message: str):
        super().__init__(f"condition ({condition}) violated: {message}")
        self.condition = condition


class HoffmanGraph:
    """Immutable validated Hoffman graph."""

    __slots__ = ("_g", "_fat", "_slim")

    def __init__(self, underlying: Graph, fat: Iterable[int]):
        fat_set = frozenset(fat)
        for v in fat_set:
            if not 0 <= v < underlying.n:
                raise ValueError(f"fat vertex out of range 0..{underlying.n - 1}: {v}")
        for v in sorted(fat_set):
            adjacent_fat = underlying.neighbors(v) & fat_set
            if adjacent_fat:
                w = min(adjacent_fat)
                raise HoffmanConditionError("i", f"fat vertices {v} and {w} are adjacent")
        for v in sorted(fat_set):
            if not underlying.neighbors(v) - fat_set:
                raise HoffmanConditionError("ii", f"fat vertex {v} has no slim neighbor")
        self._g = underlying
        self._fat = fat_set
        self._slim = tuple(v for v in range(underlying.n) if v not in fat_set)

    @property
    def underlying(self) -> Graph:
        return self._g

    @property
    def n(self) -> int:
        return self._g.n

    @property
    def fat_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._fat))

    @property
    def slim_vertices(self) -> tuple[int, ...]:
        return self._slim

    def label(self, v: int) -> str:
        return FAT if v in self._fat else SLIM

    def is_fat(self, v: int) -> bool:
        return v in self._fat

    def slim_graph(self) -> Graph:
        """The plain graph induced on the slim vertices (reindexed)."""
        return induced_subgraph(self._g, self._slim)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HoffmanGraph):
            return NotImplemented
        return self._g == other._g and self._fat == other._fat

    def __hash__(self) -> int:
        return hash((self._g, self._fat))

    def __repr__(self) -> str:
        return (
            f"HoffmanGraph(n={self.n}, slim={len(self._slim)}, "
            f"fat={len(self._fat)})"
        )


def build_hoffman(g: Graph, labeling: Mapping[int, str]) -> HoffmanGraph:
    """Validate a total slim/fat labeling of g."""
    missing = [v for v in range(g.n) if v not in labeling]
    if missing:
        raise ValueError(f"labeling not total; missing vertices {missing}")
    fat = []
    for v in range(g.n):
        value = labeling[v]
        if value not in (SLIM, FAT):
            raise ValueError(f"label for vertex {v} must be {SLIM!r} or {FAT!r}, got {value!r}")
        if value == FAT:
            fat.append(v)
    return HoffmanGraph(g, fat)


def hoffman_from_fat(g: Graph, fat: Iterable[int]) -> HoffmanGraph:
    """Build from the fat vertex set alone (all others slim)."""
    return HoffmanGraph(g, fat)


def special_matrix(h: HoffmanGraph) -> np.ndarray:
    """S = A_s - C C^T, indexed by slim vertices in ascending order."""
    slim = h.slim_vertices
    if not slim:
        raise ValueError("Hoffman graph has no slim vertices")
    g = h.underlying
    fat = set(h.fat_vertices)
    s = np.zeros((len(slim), len(slim)))
    fat_nbrs = [g.neighbors(v) & fat for v in slim]
    for i, u in enumerate(slim):
        s[i, i] = -len(fat_nbrs[i])
        for j in range(i + 1, len(slim)):
            v = slim[j]
            value = (1.0 if g.adjacent(u, v) else 0.0) - len(fat_nbrs[i] & fat_nbrs[j])
            s[i, j] = s[j, i] = value
    return s


def lambda_min_hoffman(h: HoffmanGraph) -> float:
    """Smallest eigenvalue of the special matrix."""
    return eigenvalues(special_matrix(h)).smallest


def induced_hoffman(h: HoffmanGraph, s: Iterable[int]) -> HoffmanGraph:
    """Induced Hoffman subgraph on s, labels preserved.

    Rejects subsets whose induced labeling breaks a Hoffman condition
    (e.g. a kept fat vertex losing all slim neighbors); no silent repair.
    """
    sel = sorted(set(s))
    sub = induced_subgraph(h.underlying, sel)
    fat = [i for i, v in enumerate(sel) if h.is_fat(v)]
    return HoffmanGraph(sub, fat)


def expand(h: HoffmanGraph, p: int) -> Graph:
    """Replace each fat vertex by a K_p joined to that vertex's neighbors.

    Vertex order of the result: slim vertices of h first (ascending original
    index), then p new vertices per fat vertex in fat-index order.
    """
    if p < 1:
        raise ValueError(f"expansion order must be positive, got {p}")
    slim = h.slim_vertices
    index = {v: i for i, v in enumerate(slim)}
    g = h.underlying
    edges = [
        (index[u], index[v]) for u, v in g.edges() if u in index and v in index
    ]
    base = len(slim)
    for f in h.fat_vertices:
        block = range(base, base + p)
        edges.extend((a, b) for a in block for b in block if a < b)
        for w in g.neighbors(f):
            edges.extend((index[w], b) for b in block)
        base += p
    return Graph(len(slim) + p * len(h.fat_vertices), edges)


# ---------------------------------------------------------------------------
# named families


@dataclass(frozen=True)
class HoffmanCatalogEntry:
    """A named Hoffman graph together with its closed-form smallest eigenvalue."""

    name: str
    parameter: object
    hoffman: HoffmanGraph
    closed_form_lambda_min: float


def _single_slim_with_fat(t: int) -> HoffmanGraph:
    """One slim vertex (0) adjacent to t fat vertices."""
    g = Graph(t + 1, [(0, i) for i in range(1, t + 1)])
    return HoffmanGraph(g, range(1, t + 1))


def _adjacent_pair_with_fat(t: int) -> HoffmanGraph:
    """Adjacent slim vertices 0 and 1; 0 carries t fat neighbors, 1 one more.

    All t+1 fat vertices are distinct, so the fat neighborhoods are disjoint.
    """
    edges = [(0, 1)] + [(0, i) for i in range(2, t + 2)] + [(1, t + 2)]
    g = Graph(t + 3, edges)
    return HoffmanGraph(g, range(2, t + 3))


def _near_clique_with_fat(n: int) -> HoffmanGraph:
    """Clique on n+1 slim vertices with one fat vertex attached to n of them."""
    edges = [(u, v) for u in range(n + 1) for v in range(u + 1, n + 1)]
    edges += [(i, n + 1) for i in range(n)]
    g = Graph(n + 2, edges)
    return HoffmanGraph(g, [n + 1])


def _fat_cone(base: Graph) -> HoffmanGraph:
    """All of ``base`` slim, plus one fat vertex adjacent to every vertex."""
    if base.n < 1:
        raise ValueError("fat cone needs a base graph with at least one vertex")
    edges = list(base.edges()) + [(v, base.n) for v in range(base.n)]
    g = Graph(base.n + 1, edges)
    return HoffmanGraph(g, [base.n])


CATALOG_FAMILIES = ("h_t", "h_t1", "c_n", "q_of")


def catalog(name: str, parameter) -> HoffmanCatalogEntry:
    """Named Hoffman families and their closed-form smallest eigenvalues.

    - "h_t" (t >= 1): one slim vertex with t fat neighbors; value -t.
    - "h_t1" (t >= 1): adjacent slim pair, one with t fat neighbors, the
      other with one disjoint fat neighbor; value (-t-1-sqrt(t^2-2t+5))/2.
    - "c_n" (n >= 1): clique on n+1 slim vertices, fat vertex on n of them;
      value (-1-sqrt(1+4n))/2.
    - "q_of" (a Graph): fat cone over the graph; the special matrix is
      A - J, so the value is -1 - lambda_max of the complement.
    """
    if name == "h_t":
        t = _positive_int("t", parameter)
        return HoffmanCatalogEntry(name, t, _single_slim_with_fat(t), float(-t))
    if name == "h_t1":
        t = _positive_int("t", parameter)
        value = (-t - 1 - math.sqrt(t * t - 2 * t + 5)) / 2
        return HoffmanCatalogEntry(name, t, _adjacent_pair_with_fat(t), value)
    if name == "c_n":
        n = _positive_int("n", parameter)
        value = (-1 - math.sqrt(1 + 4 * n)) / 2
        return HoffmanCatalogEntry(name, n, _near_clique_with_fat(n), value)
    if name == "q_of":
        if not isinstance(parameter, Graph):
            raise ValueError("family 'q_of' takes a Graph parameter")
        value = -1.0 - lambda_max(complement(parameter))
        return HoffmanCatalogEntry(name, parameter, _fat_cone(parameter), value)
    raise ValueError(f"unknown catalog family {name!r}; choose from {CATALOG_FAMILIES}")


def _positive_int(name: str, value) -> int:
    if not isinstance(value, int) or value < 1:
        raise ValueError(f"parameter {name} must be a positive integer, got {value!r}")
    return value


# ---------------------------------------------------------------------------
# expansion order search


@dataclass(frozen=True)
class ExpansionSearch:
    """Outcome of the smallest-p search for lambda_min(expand(h, p)) < -lam.

    ``p`` is None when no order up to p_max works; ``permanent`` marks the
    cases where the expansion lower bound lambda_min(h) >= -lam guarantees
    no larger p can ever work. ``marginal_orders`` lists p values whose
    eigenvalue landed inside the numerical guard band of the threshold.
    """

    p: int | None
    permanent: bool
    marginal_orders: tuple[int, ...] = ()


def minimal_expansion_order(
    h: HoffmanGraph, lam: float, p_max: int = 200
) -> ExpansionSearch:
    """Smallest p <= p_max with lambda_min(expand(h, p)) strictly below -lam.

    Linear upward scan; monotonicity of the expansion eigenvalue makes the
    first hit minimal. Uses the guard-band strict comparison so exact-boundary
    orders (eigenvalue equal to -lam) are not claimed.
    """
    if not 1 <= p_max <= 10**4:
        raise ValueError(f"p_max must be in 1..10000, got {p_max}")
    threshold = -float(lam)
    base = lambda_min_hoffman(h)
    marginal = []
    for p in range(1, p_max + 1):
        value = eigenvalues(expand(h, p).adjacency_matrix()).smallest
        if is_marginal(value, threshold):
            marginal.append(p)
        if strictly_below(value, threshold):
            return ExpansionSearch(p=p, permanent=False, marginal_orders=tuple(marginal))
    permanent = base >= threshold - MARGIN_GUARD
    return ExpansionSearch(p=None, permanent=permanent, marginal_orders=tuple(marginal))


# ---------------------------------------------------------------------------
# serialization: graph6 of the underlying graph plus an "F:" label line


def hoffman_to_text(h: HoffmanGraph) -> str:
    fat = " ".join(str(v) for v in h.fat_vertices)
    return graph6_encode(h.underlying) + "\n" + ("F: " + fat if fat else "F:") + "\n"


def hoffman_from_text(text: str) -> HoffmanGraph:
    lines = [line for line in text.splitlines() if line.strip()]
    if len(lines) != 2 or not lines[1].startswith("F:"):
        raise ValueError(
            "expected two lines: a graph6 string and a fat-vertex line 'F: i j ...'"
        )
    g = graph6_decode(lines[0])
    rest = lines[1][2:].split()
    try:
        fat = [int(tok) for tok in rest]
    except ValueError as exc:
        raise ValueError(f"malformed fat vertex list {lines[1]!r}") from exc
    return HoffmanGraph(g, fat)


# ---------------------------------------------------------------------------
# label-preserving induced search


def induced_hoffman_embedding(
    host: HoffmanGraph, pattern: HoffmanGraph
) -> tuple[int, ...] | None:
    """Label-preserving induced embedding (slim->slim, fat->fat), or None."""
    from .graphs import induced_embedding

    def same_label(pu: int, hv: int) -> bool:
        return pattern.is_fat(pu) == host.is_fat(hv)

    return induced_embedding(host.underlying, pattern.underlying, extra_filter=same_label)


def contains_induced_hoffman(host: HoffmanGraph, pattern: HoffmanGraph) -> bool:
    return induced_hoffman_embedding(host, pattern) is not None
