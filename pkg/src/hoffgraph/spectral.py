"""Dense symmetric eigenvalue computation, graph spectra, equitable
partitions and quotient matrices.

The eigensolver contract is determinism plus absolute accuracy well below
the 1e-9 working tolerance on the matrices this toolkit produces; LAPACK's
symmetric solver (via numpy) satisfies both at the orders involved (<= 2000).
Threshold comparisons such as "smallest eigenvalue < -lambda" carry a guard
band: values within MARGIN_GUARD of the threshold are flagged as numerically
marginal so that integer-valued searches cannot flip on roundoff.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graphs import Graph

__all__ = [
    "SymmetricSpectrum",
    "SYMMETRY_TOL",
    "MARGIN_GUARD",
    "MAX_ORDER",
    "eigenvalues",
    "lambda_min",
    "lambda_max",
    "quotient_matrix",
    "strictly_below",
    "is_marginal",
]

SYMMETRY_TOL = 1e-12
MARGIN_GUARD = 1e-7
MAX_ORDER = 2000


@dataclass(frozen=True)
class SymmetricSpectrum:
    """Eigenvalues of a real symmetric matrix, sorted ascending.

    ``tolerance`` is an a-priori absolute error bound for each value.
    """

    values: tuple[float, ...]
    tolerance: float

    @property
    def smallest(self) -> float:
        return self.values[0]

    @property
    def largest(self) -> float:
        return self.values[-1]


def eigenvalues(matrix) -> SymmetricSpectrum:
    """All eigenvalues of a real symmetric matrix.

    Rejects non-square, non-finite, or asymmetric input (max asymmetry
    above SYMMETRY_TOL) and orders outside 1..MAX_ORDER.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    order = a.shape[0]
    if order < 1:
        raise ValueError("matrix order must be at least 1")
    if order > MAX_ORDER:
        raise ValueError(f"matrix order {order} exceeds supported {MAX_ORDER}")
    if not np.isfinite(a).all():
        raise ValueError("matrix has non-finite entries")
    asym = float(np.max(np.abs(a - a.T))) if order > 1 else 0.0
    if asym > SYMMETRY_TOL:
        raise ValueError(f"matrix is asymmetric (max |a - a^T| = {asym:g})")

    vals = np.linalg.eigvalsh(a)
    # dsyevd-style backward error: a few eps times the spectral norm.
    norm_bound = float(np.max(np.sum(np.abs(a), axis=1))) if order else 0.0
    tol = max(1e-12, 8 * np.finfo(float).eps * max(1.0, norm_bound))
    return SymmetricSpectrum(values=tuple(float(v) for v in vals), tolerance=tol)


def lambda_min(g: Graph) -> float:
    """Smallest adjacency eigenvalue of a nonempty graph."""
    if g.n == 0:
        raise ValueError("empty graph has no eigenvalues")
    return eigenvalues(g.adjacency_matrix()).smallest


def lambda_max(g: Graph) -> float:
    """Largest adjacency eigenvalue of a nonempty graph."""
    if g.n == 0:
        raise ValueError("empty graph has no eigenvalues")
    return eigenvalues(g.adjacency_matrix()).largest


def quotient_matrix(
    g: Graph, partition: Sequence[Sequence[int]]
) -> tuple[np.ndarray, bool]:
    """Block quotient of the adjacency matrix and its equitability flag.

    Entry (i, j) is the average over block i of the number of neighbors a
    vertex has in block j; the partition is equitable iff that count is the
    same for every vertex of the block, for all block pairs. Only then do
    the (possibly asymmetric) quotient's eigenvalues belong to the graph's
    spectrum.
    """
    blocks = [list(b) for b in partition]
    if not blocks or any(not b for b in blocks):
        raise ValueError("partition blocks must be nonempty")
    seen: set[int] = set()
    for b in blocks:
        for v in b:
            if not 0 <= v < g.n:
                raise ValueError(f"vertex out of range 0..{g.n - 1}: {v}")
            if v in seen:
                raise ValueError(f"vertex {v} appears in two blocks")
            seen.add(v)
    if len(seen) != g.n:
        raise ValueError("partition does not cover the vertex set")

    r = len(blocks)
    q = np.zeros((r, r))
    equitable = True
    for i, bi in enumerate(blocks):
        for j, bj in enumerate(blocks):
            bj_set = set(bj)
            counts = [len(g.neighbors(v) & bj_set) for v in bi]
            if len(set(counts)) > 1:
                equitable = False
            q[i, j] = sum(counts) / len(counts)
    return q, equitable


def strictly_below(value: float, threshold: float, guard: float = MARGIN_GUARD) -> bool:
    """Strict comparison value < threshold, conservative inside the guard band."""
    return value < threshold - guard


def is_marginal(value: float, threshold: float, guard: float = MARGIN_GUARD) -> bool:
    """True when value sits within the guard band of the threshold."""
    return abs(value - threshold) <= guard
