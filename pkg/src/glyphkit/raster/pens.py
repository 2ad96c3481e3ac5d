"""Pen nibs and the paths they sweep."""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence, Union

import numpy as np


class PenError(ValueError):
    pass


@dataclass(frozen=True)
class Disk:
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise PenError("disk radius must be positive")

    def bbox(self):
        r = self.radius
        return (-r, -r, r, r)


@dataclass(frozen=True)
class ConvexPolygon:
    """Counter-clockwise convex polygon strictly containing the origin."""

    vertices: tuple[tuple[float, float], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "vertices", tuple((float(x), float(y)) for x, y in self.vertices)
        )
        _validate(self.vertices)

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.vertices, dtype=float)

    def halfplanes(self):
        """Outward normals ``n`` and offsets ``c`` with the pen = {y : n.y <= c}."""
        v = self.array
        edges = np.roll(v, -1, axis=0) - v
        normals = np.stack([edges[:, 1], -edges[:, 0]], axis=1)
        offsets = np.einsum("ij,ij->i", normals, v)
        return normals, offsets

    def reflected(self) -> "ConvexPolygon":
        return ConvexPolygon(tuple((-x, -y) for x, y in self.vertices))

    def bbox(self):
        v = self.array
        return (*v.min(axis=0), *v.max(axis=0))


PenShape = Union[Disk, ConvexPolygon]


def _validate(vertices: Sequence[tuple[float, float]]) -> None:
    n = len(vertices)
    if n < 3:
        raise PenError("a polygon pen needs at least 3 vertices")
    for i in range(n):
        (ax, ay), (bx, by), (cx, cy) = vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]
        turn = (bx - ax) * (cy - by) - (by - ay) * (cx - bx)
        if turn == 0:
            raise PenError(f"vertices {i}, {i + 1}, {i + 2} are collinear")
        if turn < 0:
            raise PenError("polygon must be convex with vertices counter-clockwise")
    for i in range(n):
        (ax, ay), (bx, by) = vertices[i], vertices[(i + 1) % n]
        if ax * by - ay * bx <= 0:
            raise PenError("origin must lie strictly inside the pen")
    # Convex turns at every corner can still wind twice; the angles must sum to 2*pi.
    total = 0.0
    for i in range(n):
        (ax, ay), (bx, by) = vertices[i], vertices[(i + 1) % n]
        total += math.atan2(ax * by - ay * bx, ax * bx + ay * by)
    if abs(total - 2 * math.pi) > 1e-9:
        raise PenError("polygon must wind once around the origin")


DIAMOND = ConvexPolygon(((0.5, 0.0), (0.0, 0.5), (-0.5, 0.0), (0.0, -0.5)))
DISK = Disk(0.5)
OCTAGON = ConvexPolygon(
    (
        (1.5, -0.5),
        (1.5, 0.5),
        (0.5, 1.5),
        (-0.5, 1.5),
        (-1.5, 0.5),
        (-1.5, -0.5),
        (-0.5, -1.5),
        (0.5, -1.5),
    )
)

PENS = {"diamond": DIAMOND, "disk": DISK, "octagon": OCTAGON}


def parse_pen(text: str) -> ConvexPolygon:
    """Read ``x y`` vertex lines; '%' starts a comment."""
    vertices = []
    for lineno, line in enumerate(text.splitlines(), 1):
        fields = line.split("%", 1)[0].split()
        if not fields:
            continue
        try:
            x, y = (float(f) for f in fields)
        except ValueError:
            raise PenError(f"line {lineno}: expected 'x y', got {line.strip()!r}") from None
        vertices.append((x, y))
    return ConvexPolygon(tuple(vertices))


def make_pen(spec: str | Path | Sequence[tuple[float, float]]) -> PenShape:
    """A bundled pen by name, a vertex file, or a vertex list."""
    if isinstance(spec, str) and spec in PENS:
        return PENS[spec]
    if isinstance(spec, (str, Path)):
        path = Path(spec)
        if not path.is_file():
            raise PenError(f"unknown pen {str(spec)!r}; expected one of {sorted(PENS)} or a file")
        return parse_pen(path.read_text(encoding="utf-8"))
    return ConvexPolygon(tuple(spec))


@dataclass(frozen=True)
class Segment:
    """Straight track from ``p0`` to ``p1``; ``p0 == p1`` stamps the pen once."""

    p0: tuple[float, float]
    p1: tuple[float, float]

    def bbox(self):
        (x0, y0), (x1, y1) = self.p0, self.p1
        return (min(x0, x1), min(y0, y1), max(x0, x1), max(y0, y1))


@dataclass(frozen=True)
class Circle:
    center: tuple[float, float]
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("circle radius must be positive")

    def bbox(self):
        (cx, cy), r = self.center, self.radius
        return (cx - r, cy - r, cx + r, cy + r)


StrokePath = Union[Segment, Circle]
