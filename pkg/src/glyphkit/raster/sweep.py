"""Membership in the region a pen sweeps along a path.

A point ``x`` is covered when some point ``q`` of the path has ``x - q``
inside the (closed) pen.  All functions take coordinate arrays and return
boolean arrays of the same shape.
"""

from __future__ import annotations

import numpy as np

from .pens import Circle, ConvexPolygon, Disk, PenShape, Segment, StrokePath


def _segment_polygon(x, y, seg: Segment, pen: ConvexPolygon):
    # Clip t in [0, 1] against every pen half-plane n.(x - p0 - t d) <= c.
    (x0, y0), (x1, y1) = seg.p0, seg.p1
    dx, dy = x1 - x0, y1 - y0
    lo = np.zeros(np.shape(x))
    hi = np.ones(np.shape(x))
    ok = np.ones(np.shape(x), dtype=bool)
    normals, offsets = pen.halfplanes()
    for (nx, ny), c in zip(normals, offsets):
        a = nx * dx + ny * dy
        b = c - (nx * (x - x0) + ny * (y - y0))
        # constraint: -a t <= b
        if a > 0:
            lo = np.maximum(lo, -b / a)
        elif a < 0:
            hi = np.minimum(hi, -b / a)
        else:
            ok &= b >= 0
    return ok & (lo <= hi)


def _segment_disk(x, y, seg: Segment, pen: Disk):
    (x0, y0), (x1, y1) = seg.p0, seg.p1
    dx, dy = x1 - x0, y1 - y0
    length2 = dx * dx + dy * dy
    if length2 == 0:
        t = np.zeros(np.shape(x))
    else:
        t = np.clip(((x - x0) * dx + (y - y0) * dy) / length2, 0.0, 1.0)
    ex = x - (x0 + t * dx)
    ey = y - (y0 + t * dy)
    return ex * ex + ey * ey <= pen.radius * pen.radius


def polygon_distance_range(px, py, vertices: np.ndarray):
    """Nearest and farthest distance from points to a convex CCW polygon.

    ``vertices`` has shape (..., n, 2) broadcasting against the points; the
    nearest distance is 0 inside the polygon.
    """
    vx = vertices[..., 0] - px[..., None]
    vy = vertices[..., 1] - py[..., None]
    far = np.sqrt(vx * vx + vy * vy).max(axis=-1)
    wx = np.roll(vx, -1, axis=-1)
    wy = np.roll(vy, -1, axis=-1)
    ex, ey = wx - vx, wy - vy
    # point is the origin in these shifted coordinates
    inside = np.all(vx * ey - vy * ex >= 0, axis=-1)
    t = np.clip(-(vx * ex + vy * ey) / (ex * ex + ey * ey), 0.0, 1.0)
    cx = vx + t * ex
    cy = vy + t * ey
    near = np.sqrt(cx * cx + cy * cy).min(axis=-1)
    return np.where(inside, 0.0, near), far


def _circle(x, y, circle: Circle, pen: PenShape):
    # q on the circle with x - q in the pen  <=>  q in x - pen, a convex set;
    # distances from the center to that set fill [near, far].
    cx, cy = circle.center
    r = circle.radius
    if isinstance(pen, Disk):
        d = np.hypot(x - cx, y - cy)
        near = np.maximum(d - pen.radius, 0.0)
        far = d + pen.radius
    else:
        reflected = pen.reflected().array
        verts = np.stack(
            [
                np.asarray(x)[..., None] + reflected[:, 0],
                np.asarray(y)[..., None] + reflected[:, 1],
            ],
            axis=-1,
        )
        near, far = polygon_distance_range(np.full(np.shape(x), cx), np.full(np.shape(y), cy), verts)
    return (near <= r) & (r <= far)


def member_mask(x, y, path: StrokePath, pen: PenShape) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if isinstance(path, Segment):
        if isinstance(pen, Disk):
            return _segment_disk(x, y, path, pen)
        return _segment_polygon(x, y, path, pen)
    if isinstance(path, Circle):
        return _circle(x, y, path, pen)
    raise TypeError(f"unsupported path {path!r}")


def member(point, path: StrokePath, pen: PenShape) -> bool:
    """Whether ``point`` lies in the closed region swept by ``pen`` along ``path``."""
    return bool(member_mask(point[0], point[1], path, pen))
