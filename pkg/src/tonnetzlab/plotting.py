"""Matplotlib figures: cycle-table heatmaps, perimeter drawings of Levi graphs
and tessellation patches.  SVG output is byte-stable for identical input."""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import RegularPolygon  # noqa: E402

from .cycles import CycleTable, ReferenceHamiltonian  # noqa: E402
from .incidence import LeviGraph  # noqa: E402
from .tessellation import TessellationPatch  # noqa: E402

__all__ = ["plot_cycle_table", "plot_levi_perimeter", "plot_patch", "save_figure"]

_CLASS_COLOURS = ("#ffffff", "#404040", "#a8c8e8")


def save_figure(fig, path: str | Path) -> Path:
    path = Path(path)
    fmt = path.suffix.lstrip(".") or "svg"
    with matplotlib.rc_context({"svg.hashsalt": "tonnetzlab", "svg.fonttype": "path"}):
        meta = {"Date": None} if fmt in ("svg", "pdf") else {}
        if fmt == "png":
            meta = {"Software": None}
        fig.savefig(path, format=fmt, metadata=meta)
    plt.close(fig)
    return path


def plot_cycle_table(t: CycleTable, title: str = ""):
    width = t.max_p + 1
    data = [t.row(L, width) for L in t.lengths]
    fig, ax = plt.subplots(figsize=(1.0 + 0.55 * width, 1.0 + 0.45 * len(data)))
    peak = max((v for row in data for v in row), default=1) or 1
    ax.imshow([[v / peak for v in row] for row in data], cmap="Blues", aspect="auto", vmin=0, vmax=1)
    for i, row in enumerate(data):
        for p, v in enumerate(row):
            if v:
                ax.text(p, i, str(v), ha="center", va="center", fontsize=7, color="black" if v < 0.6 * peak else "white")
    ax.set_xticks(range(width), [str(p) for p in range(width)])
    ax.set_yticks(range(len(data)), [str(L) for L in t.lengths])
    ax.set_xlabel("p-number")
    ax.set_ylabel("cycle length")
    ax.set_title(title or f"{t.grand_total} cycles")
    fig.tight_layout()
    return fig


def plot_levi_perimeter(g: LeviGraph, ref: ReferenceHamiltonian, title: str = ""):
    """Perimeter on a circle, remaining edges drawn as chords."""
    order = ref.cycle.vertices
    n = len(order)
    pos = {}
    for i, v in enumerate(order):
        ang = math.pi / 2 - 2 * math.pi * i / n
        pos[v] = (math.cos(ang), math.sin(ang))
    fig, ax = plt.subplots(figsize=(6, 6))
    on = ref.edge_set
    for u, w in sorted(g.edges):
        (x1, y1), (x2, y2) = pos[u], pos[w]
        ax.plot([x1, x2], [y1, y2], color="black" if (min(u, w), max(u, w)) in on else "#888888",
                lw=1.6 if (min(u, w), max(u, w)) in on else 0.8, zorder=1)
    for v, (x, y) in sorted(pos.items()):
        white = v < g.n_white
        ax.scatter([x], [y], s=260, c="white" if white else "black", edgecolors="black", zorder=2)
        ax.text(1.16 * x, 1.16 * y, g.labels[v], ha="center", va="center", fontsize=7)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.set_title(title or g.name, pad=24)
    return fig


def plot_patch(p: TessellationPatch, title: str = ""):
    fig, ax = plt.subplots(figsize=(1.2 + 1.1 * p.cols, 1.2 + 1.1 * p.rows))
    xs, ys = [], []
    for c in p.cells:
        x, y = c.center
        y = -y
        xs.append(x)
        ys.append(y)
        face = "#eeeeee" if c.kind is None else _CLASS_COLOURS[c.kind % 3]
        ax.add_patch(RegularPolygon((x, y), 6, radius=1.0, orientation=math.pi / 6, facecolor=face, edgecolor="black", lw=0.8))
        if c.label is not None:
            ax.text(x, y, c.label, ha="center", va="center", fontsize=8, color="white" if c.kind == 1 else "black")
    ax.set_xlim(min(xs) - 1.2, max(xs) + 1.2)
    ax.set_ylim(min(ys) - 1.2, max(ys) + 1.2)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    return fig
