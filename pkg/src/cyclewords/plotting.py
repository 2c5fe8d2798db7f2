"""Figure renderers: subgraph pictures plus count and verification summaries.

Everything draws straight onto a Figure and saves to a file; no interactive
backend is ever touched.
"""

from __future__ import annotations

import math
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from matplotlib.colors import ListedColormap, LogNorm

from .counting import CountTable
from .subgraphs import CycleSubgraph
from .verification import VerificationReport

plt.rcParams["savefig.dpi"] = 150
plt.rcParams["savefig.bbox"] = "tight"
plt.rcParams["figure.autolayout"] = True


def _vertex_positions(count: int, radius: float = 1.0) -> list[tuple[float, float]]:
    # vertex 0 at the top, labels increasing clockwise
    positions = []
    for i in range(count):
        theta = math.pi / 2 - 2 * math.pi * i / count
        positions.append((radius * math.cos(theta), radius * math.sin(theta)))
    return positions


def subgraph_figure(graph: CycleSubgraph, title: str | None = None) -> plt.Figure:
    """Draw the full cycle with the subgraph's edges solid and its vertices filled."""
    cycle_len = graph.params.cycle_length
    positions = _vertex_positions(cycle_len)
    chosen = set(graph.edge_ids())
    used = graph.vertex_set()

    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    for e in range(cycle_len):
        (x0, y0), (x1, y1) = positions[e], positions[(e + 1) % cycle_len]
        if e in chosen:
            ax.plot([x0, x1], [y0, y1], color="C0", linewidth=2.5, zorder=1)
        else:
            ax.plot([x0, x1], [y0, y1], color="0.75", linewidth=1.0, linestyle=":", zorder=1)
    for v, (x, y) in enumerate(positions):
        face = "C0" if v in used else "white"
        ax.scatter([x], [y], s=170, facecolor=face, edgecolor="0.3", zorder=2)
        ax.text(1.18 * x, 1.18 * y, str(v), ha="center", va="center", fontsize=10)
    if title:
        ax.set_title(title)
    ax.set_aspect("equal")
    ax.set_xlim(-1.35, 1.35)
    ax.set_ylim(-1.35, 1.35)
    ax.axis("off")
    return fig


def save_subgraph_figure(graph: CycleSubgraph, path, title: str | None = None) -> None:
    fig = subgraph_figure(graph, title=title)
    fig.savefig(path)
    plt.close(fig)


def counts_figure(tables: Sequence[CountTable]) -> plt.Figure:
    """Lower-triangular heatmap of the total count per (n, k), annotated exactly.

    Cells where a brute-force graph count was computed and disagreed are
    flagged in red; the colour scale is logarithmic because totals grow fast.
    """
    max_n = max(t.n for t in tables)
    grid = np.full((max_n, max_n), np.nan)
    by_cell = {}
    for t in tables:
        grid[t.n - 1, t.k - 1] = t.w_total
        by_cell[(t.n, t.k)] = t

    fig, ax = plt.subplots(figsize=(1.0 * max_n + 2.5, 0.85 * max_n + 1.8))
    shown = np.ma.masked_invalid(grid)
    mesh = ax.imshow(shown, cmap="viridis", norm=LogNorm(vmin=1, vmax=max(2, shown.max())))
    for (n, k), t in by_cell.items():
        bad = t.g_star is not None and not t.matches
        label = f"{t.w_total}" + ("\n!= graphs" if bad else "")
        colour = "red" if bad else ("white" if t.w_total < shown.max() ** 0.5 else "black")
        ax.text(k - 1, n - 1, label, ha="center", va="center", fontsize=8, color=colour)
    ax.set_xticks(range(max_n), labels=[str(k) for k in range(1, max_n + 1)])
    ax.set_yticks(range(max_n), labels=[str(n) for n in range(1, max_n + 1)])
    ax.set_xlabel("k (components / Rs / Us)")
    ax.set_ylabel("n (edges)")
    ax.set_title("words per cell (equal to subgraphs when verified)")
    fig.colorbar(mesh, ax=ax, label="count")
    return fig


def verification_figure(reports: Sequence[VerificationReport]) -> plt.Figure:
    """Green/red PASS-FAIL grid over the verified cells."""
    max_n = max(r.params.n for r in reports)
    grid = np.full((max_n, max_n), np.nan)
    for r in reports:
        grid[r.params.n - 1, r.params.k - 1] = 1.0 if r.ok else 0.0

    fig, ax = plt.subplots(figsize=(1.0 * max_n + 2.0, 0.85 * max_n + 1.8))
    cmap = ListedColormap(["#c62828", "#2e7d32"])
    ax.imshow(np.ma.masked_invalid(grid), cmap=cmap, vmin=0.0, vmax=1.0)
    for r in reports:
        text = "PASS" if r.ok else "FAIL"
        ax.text(r.params.k - 1, r.params.n - 1, text, ha="center", va="center",
                fontsize=8, color="white")
    ax.set_xticks(range(max_n), labels=[str(k) for k in range(1, max_n + 1)])
    ax.set_yticks(range(max_n), labels=[str(n) for n in range(1, max_n + 1)])
    ax.set_xlabel("k")
    ax.set_ylabel("n")
    ax.set_title("exhaustive bijectivity check")
    return fig


def save_figure(fig: plt.Figure, path) -> None:
    fig.savefig(path)
    plt.close(fig)
