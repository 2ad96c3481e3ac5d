"""Byte-exact writers (and a PBM reader) for pixel grids."""

from __future__ import annotations

import re

import numpy as np

from .grid import PixelGrid, UniformityReport

FORMATS = ("pbm-ascii", "pbm-binary", "txt", "svg", "json-metrics")
BINARY_FORMATS = frozenset({"pbm-binary"})


def _pbm_ascii(grid: PixelGrid) -> bytes:
    lines = [f"P1\n{grid.width} {grid.height}"]
    lines += [" ".join("1" if b else "0" for b in row) for row in grid.rows_top_down()]
    return ("\n".join(lines) + "\n").encode("ascii")


def _pbm_binary(grid: PixelGrid) -> bytes:
    header = f"P4\n{grid.width} {grid.height}\n".encode("ascii")
    packed = np.packbits(grid.rows_top_down(), axis=1)
    return header + packed.tobytes()


def _txt(grid: PixelGrid) -> bytes:
    rows = ("".join("#" if b else "." for b in row) for row in grid.rows_top_down())
    return "\n".join(rows).encode("ascii")


def _svg(grid: PixelGrid) -> bytes:
    w, h = grid.width, grid.height
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}" shape-rendering="crispEdges">'
    ]
    for r, row in enumerate(grid.rows_top_down()):
        for c in np.flatnonzero(row):
            out.append(f'<rect x="{c}" y="{r}" width="1" height="1"/>')
    out.append("</svg>\n")
    return "\n".join(out).encode("ascii")


def emit(grid: PixelGrid, fmt: str, center=None) -> bytes:
    """Serialize ``grid``; ``center`` only matters for json-metrics octants."""
    if fmt == "pbm-ascii":
        return _pbm_ascii(grid)
    if fmt == "pbm-binary":
        return _pbm_binary(grid)
    if fmt == "txt":
        return _txt(grid)
    if fmt == "svg":
        return _svg(grid)
    if fmt == "json-metrics":
        return (UniformityReport.of(grid, center).to_json() + "\n").encode("ascii")
    raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def parse_pbm(data: bytes, x0: int = 0, y0: int = 0) -> PixelGrid:
    """Read a P1 or P4 image; ``x0, y0`` place its bottom-left pixel."""
    m = re.match(rb"(P[14])\s+(?:#[^\n]*\n\s*)*(\d+)\s+(?:#[^\n]*\n\s*)*(\d+)\s", data)
    if not m:
        raise ValueError("not a P1/P4 bitmap")
    magic, w, h = m.group(1), int(m.group(2)), int(m.group(3))
    body = data[m.end() :]
    if magic == b"P1":
        digits = re.sub(rb"#[^\n]*|\s", b"", body)
        if len(digits) != w * h or digits.strip(b"01"):
            raise ValueError("bad P1 raster")
        rows = np.frombuffer(digits, dtype=np.uint8).reshape(h, w) == ord("1")
    else:
        stride = (w + 7) // 8
        if len(body) < stride * h:
            raise ValueError("short P4 raster")
        packed = np.frombuffer(body[: stride * h], dtype=np.uint8).reshape(h, stride)
        rows = np.unpackbits(packed, axis=1)[:, :w].astype(bool)
    return PixelGrid(x0, y0, rows[::-1].copy())
