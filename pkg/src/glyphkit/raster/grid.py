"""Pixel grids, digitization of swept pens, and uniformity metrics."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .pens import PenShape, StrokePath
from .sweep import member_mask

# Pixel centers are tested at center + (EPS, EPS**2) so that centers lying
# exactly on the region boundary resolve the same way every time.
EPS = 2.0**-20


@dataclass(eq=False)
class PixelGrid:
    """Binary raster; pixel (i, j) covers [i, i+1] x [j, j+1].

    ``bits[r, c]`` is pixel ``(x0 + c, y0 + r)``: row 0 is the bottom row.
    """

    x0: int
    y0: int
    bits: np.ndarray

    @classmethod
    def empty(cls, x0: int, y0: int, width: int, height: int) -> "PixelGrid":
        if width < 1 or height < 1:
            raise ValueError(f"degenerate grid {width}x{height}")
        return cls(x0, y0, np.zeros((height, width), dtype=bool))

    @property
    def width(self) -> int:
        return self.bits.shape[1]

    @property
    def height(self) -> int:
        return self.bits.shape[0]

    def __getitem__(self, ij) -> bool:
        i, j = ij
        c, r = i - self.x0, j - self.y0
        if 0 <= c < self.width and 0 <= r < self.height:
            return bool(self.bits[r, c])
        return False

    def __eq__(self, other):
        if not isinstance(other, PixelGrid):
            return NotImplemented
        return (
            self.x0 == other.x0
            and self.y0 == other.y0
            and np.array_equal(self.bits, other.bits)
        )

    def centers(self):
        xs = self.x0 + np.arange(self.width) + 0.5
        ys = self.y0 + np.arange(self.height) + 0.5
        return np.meshgrid(xs, ys)

    def dark(self) -> int:
        return int(self.bits.sum())

    def rows_top_down(self) -> np.ndarray:
        return self.bits[::-1]


def sweep_bbox(path: StrokePath, pen: PenShape):
    px0, py0, px1, py1 = path.bbox()
    qx0, qy0, qx1, qy1 = pen.bbox()
    return px0 + qx0, py0 + qy0, px1 + qx1, py1 + qy1


def auto_bounds(path: StrokePath, pen: PenShape):
    """Integer (x0, y0, width, height): the sweep's box grown by one pixel."""
    ax, ay, bx, by = sweep_bbox(path, pen)
    x0, y0 = math.floor(ax) - 1, math.floor(ay) - 1
    x1, y1 = math.ceil(bx) + 1, math.ceil(by) + 1
    return x0, y0, x1 - x0, y1 - y0


def column_bounds(path: StrokePath, pen: PenShape, x0: int, cols: int):
    """Exactly columns x0..x0+cols-1; rows as in :func:`auto_bounds`."""
    _, y0, _, height = auto_bounds(path, pen)
    return x0, y0, cols, height


def digitize(
    path: StrokePath,
    pen: PenShape,
    bounds: tuple[int, int, int, int] | None = None,
    tie_break: bool = True,
) -> PixelGrid:
    """Darken the pixels whose (nudged) centers lie in the swept region."""
    if bounds is None:
        bounds = auto_bounds(path, pen)
    grid = PixelGrid.empty(*bounds)
    x, y = grid.centers()
    if tie_break:
        x = x + EPS
        y = y + EPS * EPS
    grid.bits[:] = member_mask(x, y, path, pen)
    return grid


def column_profile(grid: PixelGrid) -> list[int]:
    return [int(n) for n in grid.bits.sum(axis=0)]


def octant_of(dx: float, dy: float) -> int:
    """Sector 0..7 of a direction; sector k spans [45k - 22.5, 45k + 22.5) degrees.

    Even sectors are centered on the axes, odd ones on the diagonals.  The
    zero vector goes to sector 0.
    """
    if dx == 0 and dy == 0:
        return 0
    angle = math.degrees(math.atan2(dy, dx)) % 360.0
    return int(((angle + 22.5) // 45.0) % 8)


def octant_profile(grid: PixelGrid, center: tuple[float, float]) -> list[int]:
    counts = [0] * 8
    cx, cy = center
    rows, cols = np.nonzero(grid.bits)
    for r, c in zip(rows, cols):
        counts[octant_of(grid.x0 + c + 0.5 - cx, grid.y0 + r + 0.5 - cy)] += 1
    return counts


def grid_center(grid: PixelGrid) -> tuple[float, float]:
    return grid.x0 + grid.width / 2, grid.y0 + grid.height / 2


@dataclass(frozen=True)
class UniformityReport:
    columns: tuple[int, ...]
    octants: tuple[int, ...]

    @classmethod
    def of(cls, grid: PixelGrid, center=None) -> "UniformityReport":
        if center is None:
            center = grid_center(grid)
        return cls(tuple(column_profile(grid)), tuple(octant_profile(grid, center)))

    @property
    def min(self) -> int:
        return min(self.columns)

    @property
    def max(self) -> int:
        return max(self.columns)

    @property
    def mean(self) -> float:
        return sum(self.columns) / len(self.columns)

    def axis_octants(self) -> tuple[int, ...]:
        return self.octants[0::2]

    def diagonal_octants(self) -> tuple[int, ...]:
        return self.octants[1::2]

    def octant_spread(self) -> int:
        return max(self.octants) - min(self.octants)

    def to_dict(self) -> dict:
        return {
            "columns": list(self.columns),
            "octants": list(self.octants),
            "min": self.min,
            "max": self.max,
            "mean": self.mean,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())
