"""Matplotlib figures for digitized strokes and hyphenation values."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Circle as CirclePatch  # noqa: E402

from .raster import Circle, PixelGrid, Segment  # noqa: E402

# Keep PNG bytes stable across runs.
_PNG_META = {"Software": None}


def _draw_grid(ax, grid: PixelGrid, path=None, title=""):
    extent = (grid.x0, grid.x0 + grid.width, grid.y0, grid.y0 + grid.height)
    ax.imshow(
        grid.rows_top_down(),
        cmap="Greys",
        vmin=0,
        vmax=1,
        extent=extent,
        interpolation="nearest",
    )
    ax.set_xticks(range(grid.x0, grid.x0 + grid.width + 1), minor=True)
    ax.set_yticks(range(grid.y0, grid.y0 + grid.height + 1), minor=True)
    ax.grid(which="minor", color="0.85", linewidth=0.4)
    ax.tick_params(which="both", length=0, labelsize=7)
    if isinstance(path, Segment):
        (x0, y0), (x1, y1) = path.p0, path.p1
        ax.plot([x0, x1], [y0, y1], color="tab:red", linewidth=0.8)
    elif isinstance(path, Circle):
        ax.add_patch(
            CirclePatch(path.center, path.radius, fill=False, color="tab:red", linewidth=0.8)
        )
    ax.set_title(title, fontsize=9)
    ax.set_aspect("equal")


def plot_grids(panels, out: str | Path, ncols: int = 2, panel_size: float = 3.2) -> Path:
    """Save a figure of ``(grid, path, title)`` panels to ``out``."""
    nrows = -(-len(panels) // ncols)
    fig, axes = plt.subplots(
        nrows, ncols, figsize=(panel_size * ncols, panel_size * nrows), squeeze=False
    )
    for ax in axes.flat[len(panels) :]:
        ax.axis("off")
    for ax, (grid, path, title) in zip(axes.flat, panels):
        _draw_grid(ax, grid, path, title)
    fig.tight_layout()
    out = Path(out)
    fig.savefig(out, dpi=120, metadata=_PNG_META)
    plt.close(fig)
    return out


def plot_gap_values(word: str, gaps, breaks, out: str | Path) -> Path:
    fig, ax = plt.subplots(figsize=(0.45 * len(word) + 1, 2.4))
    xs = [i + 1 for i in range(len(gaps))]
    colors = ["tab:red" if i + 1 in breaks else "0.6" for i in range(len(gaps))]
    ax.bar(xs, gaps, width=0.5, color=colors)
    ax.set_xticks(range(len(word) + 1))
    ax.set_xticklabels([""] * (len(word) + 1))
    for i, ch in enumerate(word):
        ax.text(i + 0.5, -0.6, ch, ha="center", va="top", fontsize=11)
    ax.set_xlim(0, len(word))
    ax.set_ylim(-1.6, max([*gaps, 1]) + 0.5)
    ax.axhline(0, color="black", linewidth=0.5)
    ax.set_ylabel("value")
    ax.spines[["top", "right"]].set_visible(False)
    fig.tight_layout()
    out = Path(out)
    fig.savefig(out, dpi=120, metadata=_PNG_META)
    plt.close(fig)
    return out
