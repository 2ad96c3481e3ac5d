"""Pinned recipes that regenerate the demonstration figures and check them."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from . import data_path
from .hyphenation import build_trie, hyphenate, interletter_values, parse_patterns
from .ligature import StepLimitExceeded, check_loops, parse_program, simulate
from .raster import (
    DIAMOND,
    DISK,
    OCTAGON,
    Circle,
    Segment,
    UniformityReport,
    column_bounds,
    digitize,
    emit,
)

SLOPE = 0.5
COLUMNS = 20
OFFSETS = (0.0, 0.25)
CIRCLE_RADIUS = 7.52
# Centered on a pixel center; with a corner center the two pens tie on
# octant spread.
CIRCLE_CENTER = (0.5, 0.5)

DEMO_WORD = "hyphenation"
DEMO_GAPS = [0, 3, 0, 0, 2, 5, 4, 2, 0, 2]


@dataclass
class Outcome:
    figure: str
    checks: list[tuple[str, bool]] = field(default_factory=list)
    artifacts: list[Path] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def check(self, name: str, ok: bool) -> None:
        self.checks.append((name, bool(ok)))


def slope_segment(offset: float, slope: float = SLOPE, cols: int = COLUMNS) -> Segment:
    return Segment((0.0, offset), (float(cols), offset + slope * cols))


def line_grid(pen, offset: float, slope: float = SLOPE, cols: int = COLUMNS):
    seg = slope_segment(offset, slope, cols)
    return seg, digitize(seg, pen, column_bounds(seg, pen, 0, cols))


def circle_grid(pen, center=CIRCLE_CENTER, radius=CIRCLE_RADIUS):
    path = Circle(center, radius)
    return path, digitize(path, pen)


def _write(out_dir: Path, name: str, data: bytes | str, outcome: Outcome) -> None:
    path = out_dir / name
    path.write_bytes(data.encode("utf-8") if isinstance(data, str) else data)
    outcome.artifacts.append(path)


def slide16(out_dir: Path) -> Outcome:
    from .plotting import plot_gap_values

    out = Outcome("slide16")
    trie = build_trie(parse_patterns(data_path("demo.pat").read_text(encoding="utf-8")))
    gaps = interletter_values(DEMO_WORD, trie)
    result = hyphenate(DEMO_WORD, trie)
    out.check(f"gap values {gaps} == {DEMO_GAPS}", gaps == DEMO_GAPS)
    out.check(f"{result.marked()} == hy-phen-ation", result.marked() == "hy-phen-ation")
    doc = {"word": DEMO_WORD, "gap_values": gaps, "hyphenated": result.marked()}
    _write(out_dir, "slide16.json", json.dumps(doc) + "\n", out)
    out.artifacts.append(
        plot_gap_values(DEMO_WORD, gaps, result.breaks, out_dir / "slide16.png")
    )
    return out


def slide17(out_dir: Path) -> Outcome:
    from .plotting import plot_grids

    out = Outcome("slide17")
    panels = []
    means = {}
    for pen_name, pen in (("disk", DISK), ("diamond", DIAMOND)):
        for offset in OFFSETS:
            seg, grid = line_grid(pen, offset)
            report = UniformityReport.of(grid)
            means[pen_name, offset] = report.mean
            stem = f"slide17-{pen_name}-{offset:g}"
            _write(out_dir, stem + ".txt", emit(grid, "txt") + b"\n", out)
            _write(out_dir, stem + ".json", emit(grid, "json-metrics"), out)
            panels.append((grid, seg, f"{pen_name} pen, offset {offset:g}: mean {report.mean:g}"))
    disk_low, disk_high = means["disk", 0.0], means["disk", 0.25]
    out.check(f"disk pen means {disk_low:g} and {disk_high:g} == 1 and 1.5",
              disk_low == 1.0 and disk_high == 1.5)
    out.check(f"darkness ratio {disk_high / disk_low:g} == 1.5", disk_high / disk_low == 1.5)
    out.check(
        "diamond pen mean 1 at both offsets",
        means["diamond", 0.0] == 1.0 and means["diamond", 0.25] == 1.0,
    )
    out.artifacts.append(plot_grids(panels, out_dir / "slide17.png"))
    return out


def slide20(out_dir: Path) -> Outcome:
    from .plotting import plot_grids

    out = Outcome("slide20")
    reports = {}
    panels = []
    for pen_name, pen in (("disk", DISK), ("diamond", DIAMOND), ("octagon", OCTAGON)):
        path, grid = circle_grid(pen)
        report = UniformityReport.of(grid, CIRCLE_CENTER)
        reports[pen_name] = report
        stem = f"slide20-{pen_name}"
        _write(out_dir, stem + ".pbm", emit(grid, "pbm-ascii"), out)
        _write(out_dir, stem + ".txt", emit(grid, "txt") + b"\n", out)
        _write(out_dir, stem + ".json", emit(grid, "json-metrics", CIRCLE_CENTER), out)
        panels.append((grid, path, f"{pen_name} pen\noctants {list(report.octants)}"))
    disk, diamond = reports["disk"], reports["diamond"]
    out.check(
        f"disk pen: min diagonal {min(disk.diagonal_octants())} > max axis {max(disk.axis_octants())}",
        min(disk.diagonal_octants()) > max(disk.axis_octants()),
    )
    out.check(
        f"octant spread diamond {diamond.octant_spread()} < disk {disk.octant_spread()}",
        diamond.octant_spread() < disk.octant_spread(),
    )
    out.artifacts.append(plot_grids(panels, out_dir / "slide20.png", ncols=3))
    return out


LOOP_WORD = "az"


def slide25(out_dir: Path) -> Outcome:
    out = Outcome("slide25")
    program = parse_program(data_path("loop.lig").read_text(encoding="utf-8"))
    report = check_loops(program)
    out.check(f"loop check status {report.status} == CYCLE", not report.ok)
    try:
        simulate(LOOP_WORD, program, step_limit=1000)
        out.check("rewriting 'az' hits the step limit", False)
    except StepLimitExceeded as exc:
        out.check(f"rewriting 'az' hits the step limit at {exc.pair}", True)
    _write(out_dir, "slide25.json", report.to_json() + "\n", out)
    return out


RECIPES = {"slide16": slide16, "slide17": slide17, "slide20": slide20, "slide25": slide25}


def run(figure: str, out_dir: str | Path) -> list[Outcome]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    names = list(RECIPES) if figure == "all" else [figure]
    return [RECIPES[name](out_dir) for name in names]
