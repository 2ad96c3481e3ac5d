"""Rebuild tests/golden/ from the sampling oracle (not from digitize).

Run from the repository root: python tests/regen_golden.py
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from oracles import oracle_digitize  # noqa: E402

from glyphkit.raster import DIAMOND, DISK, Circle, auto_bounds, emit  # noqa: E402

GOLDEN = Path(__file__).parent / "golden"

CASES = {
    "circle-7.52-disk": (Circle((0.5, 0.5), 7.52), DISK),
    "circle-7.52-diamond": (Circle((0.5, 0.5), 7.52), DIAMOND),
    "circle-origin-7.52-diamond": (Circle((0.0, 0.0), 7.52), DIAMOND),
}


def main():
    GOLDEN.mkdir(exist_ok=True)
    for name, (path, pen) in CASES.items():
        grid, unsure = oracle_digitize(path, pen, auto_bounds(path, pen))
        if unsure.any():
            raise SystemExit(f"{name}: pixel centers on the boundary; pick another radius")
        (GOLDEN / f"{name}.pbm").write_bytes(emit(grid, "pbm-ascii"))
        (GOLDEN / f"{name}.txt").write_bytes(emit(grid, "txt"))
        print(f"wrote {name}")


if __name__ == "__main__":
    main()
