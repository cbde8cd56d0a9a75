"""Matplotlib renderings: pipe-dream tiles, fibers, and small posets.

Everything draws in the paper's visual convention: row 1 at the top,
crosses as two straight strands, elbows as quarter-circle pairs, and the
grid clipped to the square [n] x [n].  All entry points write image files;
the Agg backend keeps them usable on headless boxes.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Arc

from .permutations import length, perm_to_str
from .pipedream import PipeDream
from .poset import MitosisPoset


def draw_pipe_dream(ax, dream: PipeDream, title: str | None = None) -> None:
    """Render one pipe dream onto an axes object."""
    n = dream.n
    for r in range(1, n + 1):
        for c in range(1, n + 1):
            x, y = c - 1, n - r  # row 1 on top
            if dream.has(r, c):
                ax.plot([x, x + 1], [y + 0.5, y + 0.5], color="tab:blue", lw=1.4)
                ax.plot([x + 0.5, x + 0.5], [y, y + 1], color="tab:blue", lw=1.4)
            else:
                ax.add_patch(
                    Arc((x, y + 1), 1, 1, theta1=270, theta2=360,
                        color="tab:blue", lw=1.2)
                )
                ax.add_patch(
                    Arc((x + 1, y), 1, 1, theta1=90, theta2=180,
                        color="tab:blue", lw=1.2)
                )
    for k in range(n + 1):
        ax.plot([0, n], [k, k], color="0.85", lw=0.5, zorder=0)
        ax.plot([k, k], [0, n], color="0.85", lw=0.5, zorder=0)
    ax.set_xlim(-0.1, n + 0.1)
    ax.set_ylim(-0.1, n + 0.1)
    ax.set_aspect("equal")
    ax.set_axis_off()
    if title:
        ax.set_title(title, fontsize=9)


def save_pipe_dreams(
    dreams: Sequence[PipeDream], path: str | Path, title: str | None = None
) -> Path:
    """Write a grid of pipe-dream drawings to an image file."""
    path = Path(path)
    count = max(len(dreams), 1)
    cols = min(count, 5)
    rows = (count + cols - 1) // cols
    fig, axes = plt.subplots(rows, cols, figsize=(2.2 * cols, 2.4 * rows))
    flat = [axes] if count == 1 and rows * cols == 1 else list(axes.flat)
    for ax in flat:
        ax.set_axis_off()
    for k, dream in enumerate(dreams):
        draw_pipe_dream(flat[k], dream, title=f"#{k}")
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_poset(poset: MitosisPoset, path: str | Path) -> Path:
    """Draw the mitosis poset, ranked by cross count, fibers side by side."""
    path = Path(path)
    ranks: dict[int, list[PipeDream]] = {}
    for w, dreams in poset.sorted_fibers():
        ranks.setdefault(length(w), []).extend(dreams)
    coords: dict[PipeDream, tuple[float, float]] = {}
    for rank, dreams in ranks.items():
        for k, dream in enumerate(dreams):
            coords[dream] = (k - (len(dreams) - 1) / 2, rank)

    fig, ax = plt.subplots(figsize=(1.8 * max(len(v) for v in ranks.values()) + 2,
                                    1.6 * len(ranks) + 1))
    for parent, child, i in poset.edges:
        x0, y0 = coords[parent]
        x1, y1 = coords[child]
        ax.plot([x0, x1], [y0, y1], color="0.6", lw=1, zorder=1)
        ax.annotate(
            f"s{i}", ((x0 + x1) / 2, (y0 + y1) / 2),
            fontsize=7, color="0.35", ha="center",
        )
    glyph = 0.36
    for dream, (x, y) in coords.items():
        inset = ax.inset_axes(
            (x - glyph / 2, y - glyph / 2, glyph, glyph), transform=ax.transData
        )
        draw_pipe_dream(inset, dream)
        label = perm_to_str(poset.perm_of(dream))
        ax.annotate(label, (x, y - glyph / 2 - 0.08), fontsize=7, ha="center")
    ax.set_xlim(min(x for x, _ in coords.values()) - 1,
                max(x for x, _ in coords.values()) + 1)
    ax.set_ylim(-0.7, max(ranks) + 0.7)
    ax.set_axis_off()
    ax.set_title(f"Mitosis poset on reduced pipe dreams, n={poset.n}")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def save_fiber_sizes(n: int, path: str | Path) -> Path:
    """Scatter |RP(w)| against length(w) across all of S_n."""
    from . import oracle

    path = Path(path)
    table = oracle.rp_table(n)
    xs = [length(w) for w in table]
    ys = [len(dreams) for dreams in table.values()]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.scatter(xs, ys, s=14, alpha=0.45)
    ax.set_xlabel("length(w)")
    ax.set_ylabel("|RP(w)|")
    ax.set_title(f"Reduced pipe dream counts across S_{n}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
