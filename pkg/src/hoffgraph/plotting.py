"""Figure rendering for CLI reports (file output only, Agg backend)."""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

__all__ = ["save_convergence_plot"]


def save_convergence_plot(
    path: str,
    label: str,
    orders: Sequence[int],
    values: Sequence[float],
    limit: float,
) -> None:
    """Plot the expansion eigenvalue against the clique order p, with the
    Hoffman-graph eigenvalue drawn as the horizontal asymptote."""
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.plot(orders, values, marker="o", markersize=3, linewidth=1.2, label=label)
    ax.axhline(limit, color="crimson", linestyle="--", linewidth=1.0,
               label=f"limit {limit:.6g}")
    ax.set_xlabel("clique order p")
    ax.set_ylabel("smallest eigenvalue of the expansion")
    ax.legend(loc="best")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
