from .formats import BINARY_FORMATS, FORMATS, emit, parse_pbm
from .grid import (
    EPS,
    PixelGrid,
    UniformityReport,
    auto_bounds,
    column_bounds,
    column_profile,
    digitize,
    octant_of,
    octant_profile,
)
from .pens import (
    DIAMOND,
    DISK,
    OCTAGON,
    PENS,
    Circle,
    ConvexPolygon,
    Disk,
    PenError,
    PenShape,
    Segment,
    StrokePath,
    make_pen,
    parse_pen,
)
from .sweep import member, member_mask

__all__ = [
    "BINARY_FORMATS",
    "Circle",
    "ConvexPolygon",
    "DIAMOND",
    "DISK",
    "Disk",
    "EPS",
    "FORMATS",
    "OCTAGON",
    "PENS",
    "PenError",
    "PenShape",
    "PixelGrid",
    "Segment",
    "StrokePath",
    "UniformityReport",
    "auto_bounds",
    "column_bounds",
    "column_profile",
    "digitize",
    "emit",
    "make_pen",
    "member",
    "member_mask",
    "octant_of",
    "octant_profile",
    "parse_pbm",
    "parse_pen",
]
