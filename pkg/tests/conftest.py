"""Shared test fixtures and independent brute-force oracles.

The oracles here deliberately avoid the library's code paths: the profile
oracle works on powers of the dense adjacency matrix, the clique oracle
enumerates all vertex subsets, so they can stand as ground truth for the
optimized implementations.
"""

from __future__ import annotations

import random
from itertools import combinations

import numpy as np

from hoffgraph import Graph, HoffmanGraph


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def random_hoffman(
    rng: random.Random, max_slim: int = 8, max_fat: int = 3
) -> HoffmanGraph:
    """Random valid Hoffman graph: a random slim graph plus fat vertices
    attached to random nonempty slim subsets."""
    s = rng.randint(1, max_slim)
    f = rng.randint(0, max_fat)
    edges = [
        (u, v) for u in range(s) for v in range(u + 1, s) if rng.random() < 0.5
    ]
    for i in range(f):
        fat = s + i
        size = rng.randint(1, s)
        for v in rng.sample(range(s), size):
            edges.append((v, fat))
    return HoffmanGraph(Graph(s + f, edges), range(s, s + f))


def brute_profile(g: Graph) -> dict:
    """Definition-level regularity statistics via dense matrix arithmetic."""
    n = g.n
    a = g.adjacency_matrix()
    a2 = a @ a
    degrees = sorted(int(a[v].sum()) for v in range(n))
    regular = len(set(degrees)) <= 1 and n > 0

    a_vals, c2_vals, co_vals = set(), set(), set()
    diam2 = True
    for u in range(n):
        for v in range(u + 1, n):
            common = int(a2[u, v])
            if a[u, v]:
                a_vals.add(common)
            else:
                co_vals.add(common)
                if common > 0:
                    c2_vals.add(common)
                else:
                    diam2 = False
    vacuous = not c2_vals
    return {
        "is_regular": regular,
        "k": degrees[0] if regular else None,
        "sesqui_c": c2_vals.pop() if len(c2_vals) == 1 else None,
        "srg_a": a_vals.pop() if len(a_vals) == 1 else None,
        "coedge_c": co_vals.pop() if len(co_vals) == 1 else None,
        "diameter_at_most_2": diam2,
        "vacuous_c": vacuous,
    }


def brute_maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques by subset enumeration; only for small graphs."""
    n = g.n
    cliques = []
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            if all(g.adjacent(u, v) for u, v in combinations(subset, 2)):
                cliques.append(set(subset))
    maximal = [
        tuple(sorted(c))
        for c in cliques
        if not any(c < other for other in cliques)
    ]
    return sorted(set(maximal))


def srg_spectrum(v: int, k: int, a: int, c: int) -> list[float]:
    """Eigenvalue multiset of a strongly regular graph from its parameters
    (quadratic x^2 - (a-c)x - (k-c) plus standard multiplicities)."""
    disc = np.sqrt((a - c) ** 2 + 4 * (k - c))
    r = ((a - c) + disc) / 2
    s = ((a - c) - disc) / 2
    mult_r = ((v - 1) - (2 * k + (v - 1) * (a - c)) / disc) / 2
    mult_s = (v - 1) - mult_r
    out = [float(s)] * round(mult_s) + [float(r)] * round(mult_r) + [float(k)]
    return sorted(out)
