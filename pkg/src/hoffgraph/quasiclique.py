"""Maximal cliques, the bounded-non-neighbor relation on large cliques,
quasi-cliques, and the associated Hoffman graph.

For parameters m >= 2 and n >= (m+1)^2, two maximal cliques of size >= n are
related when every vertex of each has at most m-1 non-neighbors in the
other. On graphs with no induced K~_{2m} this relation is an equivalence;
here that is a runtime check, not an assumption: classes are built by
union-find over the pairwise relation and then verified to be genuinely
pairwise related, and the quasi-clique of a class (all vertices with at most
m-1 non-neighbors in a representative) is recomputed from every
representative and must agree. Violations are reported with witnesses,
never repaired.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, contains_induced, k_tilde
from .hoffman import HoffmanGraph

__all__ = [
    "CLIQUE_COUNT_GUARD",
    "QuasiCliqueError",
    "QuasiCliqueSystem",
    "maximal_cliques",
    "pair_related",
    "quasi_clique_system",
    "associated_hoffman_graph",
    "system_report_text",
]

CLIQUE_COUNT_GUARD = 10**6


class QuasiCliqueError(ValueError):
    """Structural failure while building a quasi-clique system.

    ``kind`` is "transitivity" (with ``witness`` a clique triple related in
    a chain but not end to end) or "representatives" (with ``witness`` two
    representative cliques plus the symmetric difference of the vertex sets
    they generate).
    """

    def __init__(self, kind: str, message: str, witness: tuple):
        super().__init__(message)
        self.kind = kind
        self.witness = witness


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques, each sorted ascending, in lexicographic order.

    Bron-Kerbosch with pivoting over a degeneracy-ordered outer loop,
    working on neighborhood bitmasks. Aborts once the output exceeds
    CLIQUE_COUNT_GUARD cliques.
    """
    n = g.n
    if n == 0:
        return []
    masks = [g.neighbor_mask(v) for v in range(n)]

    # degeneracy order: repeatedly remove a minimum-degree vertex
    remaining = set(range(n))
    degree = {v: g.degree(v) for v in remaining}
    order = []
    while remaining:
        v = min(remaining, key=lambda x: (degree[x], x))
        order.append(v)
        remaining.remove(v)
        for w in g.neighbors(v):
            if w in remaining:
                degree[w] -= 1

    out: list[tuple[int, ...]] = []

    def extend(r: list[int], p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(tuple(sorted(r)))
            if len(out) > CLIQUE_COUNT_GUARD:
                raise ValueError(
                    f"maximal clique count exceeds guard {CLIQUE_COUNT_GUARD}"
                )
            return
        both = p | x
        pivot = max(
            _bits(both), key=lambda u: (masks[u] & p).bit_count()
        )
        candidates = p & ~masks[pivot]
        for v in _bits(candidates):
            bit = 1 << v
            extend(r + [v], p & masks[v], x & masks[v])
            p &= ~bit
            x |= bit

    full = (1 << n) - 1
    p_mask = full
    x_mask = 0
    for v in order:
        bit = 1 << v
        extend([v], p_mask & masks[v], x_mask & masks[v])
        p_mask &= ~bit
        x_mask |= bit
    return sorted(out)


def _bits(mask: int):
    while mask:
        bit = mask & -mask
        yield bit.bit_length() - 1
        mask ^= bit


def _require_clique(g: Graph, c: tuple[int, ...], label: str) -> None:
    for i, u in enumerate(c):
        for v in c[i + 1 :]:
            if not g.adjacent(u, v):
                raise ValueError(f"{label} is not a clique: {u} and {v} not adjacent")


def _non_neighbors_in(g: Graph, x: int, c: frozenset[int]) -> int:
    """Vertices of c distinct from x that are not adjacent to x."""
    return sum(1 for y in c if y != x and not g.adjacent(x, y))


def pair_related(c1, c2, g: Graph, m: int) -> bool:
    """Symmetric test: each vertex of either clique has at most m-1
    non-neighbors in the other (membership in both counts as zero)."""
    c1 = tuple(sorted(c1))
    c2 = tuple(sorted(c2))
    _require_clique(g, c1, "first argument")
    _require_clique(g, c2, "second argument")
    s1, s2 = frozenset(c1), frozenset(c2)
    return all(_non_neighbors_in(g, x, s2) <= m - 1 for x in c1) and all(
        _non_neighbors_in(g, y, s1) <= m - 1 for y in c2
    )


@dataclass(frozen=True)
class QuasiCliqueSystem:
    """Equivalence classes of large maximal cliques and their quasi-cliques.

    ``classes[i]`` lists the member cliques of class i (sorted tuples) and
    ``quasi_cliques[i]`` is the common vertex set generated by any of its
    representatives. ``forbidden_ok`` records that no induced K~_{2m} was
    found, the hypothesis under which the relation is an equivalence.
    """

    m: int
    n: int
    classes: tuple[tuple[tuple[int, ...], ...], ...]
    quasi_cliques: tuple[tuple[int, ...], ...]
    forbidden_ok: bool

    @property
    def class_count(self) -> int:
        return len(self.classes)


def quasi_clique_system(g: Graph, m: int, n: int) -> QuasiCliqueSystem:
    """Decompose the size->=n maximal cliques of g for parameter m.

    Raises QuasiCliqueError on a transitivity violation (with a witnessing
    clique triple) or a representative disagreement; both are possible only
    when g contains an induced K~_{2m}.
    """
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    if n < (m + 1) ** 2:
        raise ValueError(f"n must be at least (m+1)^2 = {(m + 1) ** 2}, got {n}")

    large = [c for c in maximal_cliques(g) if len(c) >= n]
    related = [
        [i != j and pair_related(large[i], large[j], g, m) for j in range(len(large))]
        for i in range(len(large))
    ]

    uf = _UnionFind(len(large))
    for i in range(len(large)):
        for j in range(i + 1, len(large)):
            if related[i][j]:
                uf.union(i, j)

    groups: dict[int, list[int]] = {}
    for i in range(len(large)):
        groups.setdefault(uf.find(i), []).append(i)

    # verify true transitivity: every same-class pair must itself be related
    for members in groups.values():
        for a_pos, i in enumerate(members):
            for j in members[a_pos + 1 :]:
                if not related[i][j]:
                    path = _relation_path(related, i, j)
                    triple = (large[path[0]], large[path[1]], large[path[2]])
                    raise QuasiCliqueError(
                        "transitivity",
                        "transitivity violation: cliques "
                        f"{triple[0]} ~ {triple[1]} ~ {triple[2]} "
                        "but the endpoints are unrelated",
                        triple,
                    )

    ordered = sorted(groups.values(), key=lambda members: large[min(members)])
    classes = tuple(tuple(large[i] for i in sorted(members)) for members in ordered)
    quasi = tuple(_verified_quasi_clique(g, members, m) for members in classes)

    for members, q in zip(classes, quasi):
        q_set = set(q)
        for c in members:
            missing = [v for v in c if v not in q_set]
            assert not missing, f"quasi-clique drops clique vertices {missing}"

    return QuasiCliqueSystem(
        m=m,
        n=n,
        classes=classes,
        quasi_cliques=quasi,
        forbidden_ok=not contains_induced(g, k_tilde(m)),
    )


def _relation_path(related: list[list[bool]], start: int, goal: int) -> list[int]:
    """Shortest relation path start..goal; its first three nodes witness the
    violation (on a shortest path the endpoints two steps apart are unrelated)."""
    prev = {start: start}
    frontier = [start]
    while frontier:
        nxt = []
        for u in frontier:
            for v in range(len(related)):
                if related[u][v] and v not in prev:
                    prev[v] = u
                    nxt.append(v)
        if goal in prev:
            break
        frontier = nxt
    path = [goal]
    while path[-1] != start:
        path.append(prev[path[-1]])
    path.reverse()
    return path


def _quasi_clique_of(g: Graph, c: tuple[int, ...], m: int) -> tuple[int, ...]:
    c_set = frozenset(c)
    return tuple(
        v for v in range(g.n) if _non_neighbors_in(g, v, c_set) <= m - 1
    )


def _verified_quasi_clique(
    g: Graph, members: tuple[tuple[int, ...], ...], m: int
) -> tuple[int, ...]:
    """Quasi-clique of a class, recomputed from every representative."""
    first = _quasi_clique_of(g, members[0], m)
    for other in members[1:]:
        candidate = _quasi_clique_of(g, other, m)
        if candidate != first:
            diff = tuple(sorted(set(first) ^ set(candidate)))
            raise QuasiCliqueError(
                "representatives",
                f"representatives {members[0]} and {other} generate different "
                f"quasi-cliques; symmetric difference {diff}",
                (members[0], other, diff),
            )
    return first


def associated_hoffman_graph(
    g: Graph, m: int, n: int, system: QuasiCliqueSystem | None = None
) -> HoffmanGraph:
    """Hoffman graph with slim part g and one fat vertex per clique class,
    each joined to its class's quasi-clique.

    Slim vertices keep their original indices; fat vertices follow as
    g.n, g.n+1, ... in class order. When the system's forbidden_ok flag is
    false a UserWarning is emitted (the construction is then outside the
    regime where the relation is guaranteed to be an equivalence).
    """
    if system is None:
        system = quasi_clique_system(g, m, n)
    if not system.forbidden_ok:
        import warnings

        warnings.warn(
            f"graph contains an induced K~_{2 * m}; quasi-clique classes may "
            "not be well defined",
            UserWarning,
            stacklevel=2,
        )
    edges = list(g.edges())
    for i, q in enumerate(system.quasi_cliques):
        assert q, "a quasi-clique contains its cliques and cannot be empty"
        fat_vertex = g.n + i
        edges.extend((v, fat_vertex) for v in q)
    underlying = Graph(g.n + system.class_count, edges)
    return HoffmanGraph(underlying, range(g.n, g.n + system.class_count))


def system_report_text(system: QuasiCliqueSystem) -> str:
    """Structured text report: class index, clique list, quasi-clique."""
    lines = [
        f"m={system.m} n={system.n} classes={system.class_count} "
        f"forbidden_ok={'yes' if system.forbidden_ok else 'no'}"
    ]
    for i, (members, q) in enumerate(zip(system.classes, system.quasi_cliques)):
        lines.append(f"class={i} cliques={len(members)}")
        for c in members:
            lines.append("  clique: " + " ".join(str(v) for v in c))
        lines.append("  quasi_clique: " + " ".join(str(v) for v in q))
    return "\n".join(lines) + "\n"
