"""Matplotlib rendering of graphs, path systems and partition classes.

Layout is deliberately boring: one circle per connected component, laid out
left to right.  Vertices named by a ``groups`` list share a colour, path
edges can be emphasised, everything else stays grey.  The figure is written
straight to a file; nothing is shown interactively.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
from matplotlib import colormaps

from .graphs import Graph


def _positions(g: Graph) -> dict[int, tuple[float, float]]:
    pos: dict[int, tuple[float, float]] = {}
    comps = g.components() or []
    for ci, comp in enumerate(comps):
        vs = sorted(comp)
        k = len(vs)
        radius = max(1.0, k / 6.0)
        cx = ci * 3.0 * max(1.0, radius)
        for i, v in enumerate(vs):
            ang = 2.0 * math.pi * i / max(k, 1)
            pos[v] = (cx + radius * math.cos(ang), radius * math.sin(ang))
    return pos


def render_graph(g: Graph, path: str,
                 groups: Sequence[Iterable[int]] = (),
                 bold_paths: Sequence[Sequence[int]] = (),
                 title: str | None = None) -> str:
    """Draw g to ``path`` (format from the extension). Returns the path."""
    pos = _positions(g)
    fig, ax = plt.subplots(figsize=(7, 5))
    for u, v in g.edges:
        (x1, y1), (x2, y2) = pos[u], pos[v]
        ax.plot([x1, x2], [y1, y2], color="0.75", linewidth=1.0, zorder=1)
    for walk in bold_paths:
        for a, b in zip(walk, walk[1:]):
            (x1, y1), (x2, y2) = pos[a], pos[b]
            ax.plot([x1, x2], [y1, y2], color="crimson", linewidth=2.4, zorder=2)

    cmap = colormaps["tab10"]
    colour = {v: "0.4" for v in range(g.n)}
    for gi, members in enumerate(groups):
        for v in members:
            colour[v] = cmap(gi % 10)
    xs = [pos[v][0] for v in range(g.n)]
    ys = [pos[v][1] for v in range(g.n)]
    ax.scatter(xs, ys, c=[colour[v] for v in range(g.n)], s=160, zorder=3,
               edgecolors="black", linewidths=0.6)
    if g.n <= 60:
        for v in range(g.n):
            ax.annotate(str(g.names[v]), pos[v], ha="center", va="center",
                        fontsize=7, zorder=4, color="white")
    if title:
        ax.set_title(title)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
