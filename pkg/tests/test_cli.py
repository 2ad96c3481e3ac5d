import json
import subprocess
import sys
from pathlib import Path

import pytest

from glyphkit import data_path
from glyphkit.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "glyphkit", *args],
        input=stdin,
        capture_output=True,
        env={"GLYPHKIT_NO_COLOR": "1", "PATH": ""},
    )


def test_hyphenate_demo(capsys):
    assert main(["hyphenate", "--patterns", str(data_path("demo.pat")), "hyphenation"]) == 0
    assert capsys.readouterr().out == "hy-phen-ation\n"


def test_hyphenate_marker_and_bundled_name(capsys):
    assert main(["hyphenate", "--patterns", "demo", "--marker", "=", "hyphenation"]) == 0
    assert capsys.readouterr().out == "hy=phen=ation\n"


def test_hyphenate_empty_patterns(tmp_path, capsys):
    empty = tmp_path / "empty.pat"
    empty.write_text("")
    assert main(["hyphenate", "--patterns", str(empty), "foo"]) == 0
    assert capsys.readouterr().out == "foo\n"


def test_hyphenate_missing_file(tmp_path, capsys):
    assert main(["hyphenate", "--patterns", str(tmp_path / "nope.pat"), "foo"]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_hyphenate_bad_pattern(tmp_path, capsys):
    bad = tmp_path / "bad.pat"
    bad.write_text("a12b\n")
    assert main(["hyphenate", "--patterns", str(bad), "ab"]) == 2
    assert capsys.readouterr().err


def test_hyphenate_exceptions_and_stdin(tmp_path):
    exc = tmp_path / "exc.txt"
    exc.write_text("ta-ble\n")
    proc = run("hyphenate", "--patterns", "demo", "--exceptions", str(exc), stdin=b"table\nhyphenation\n")
    assert proc.returncode == 0
    assert proc.stdout == b"ta-ble\nhy-phen-ation\n"


def test_hyphenate_stats(capsys):
    assert main(["hyphenate", "--patterns", "demo", "--stats"]) == 0
    stats = json.loads(capsys.readouterr().out)
    assert stats["patterns"] == 9


def test_lig_check_loop(capsys):
    assert main(["lig", "check", str(data_path("loop.lig"))]) == 1
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "CYCLE"
    assert "(a,z)" in out and "(a,b)" in out


def test_lig_check_json(capsys):
    assert main(["lig", "check", str(data_path("loop.lig")), "--json"]) == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["status"] == "CYCLE"
    assert {tuple(p) for p in doc["cycles"][0]} == {("a", "z"), ("a", "b")}


def test_lig_check_ok(capsys):
    assert main(["lig", "check", str(data_path("fi.lig"))]) == 0
    assert capsys.readouterr().out == "OK\n"


def test_lig_apply_fi(capsys):
    assert main(["lig", "apply", str(data_path("fi.lig")), "fi"]) == 0
    assert capsys.readouterr().out == "ﬁ\n"


def test_lig_apply_loop_hits_limit(capsys):
    assert main(["lig", "apply", str(data_path("loop.lig")), "az", "--step-limit", "50"]) == 3
    assert "no termination after 50 steps" in capsys.readouterr().err


def test_lig_table_empty(tmp_path, capsys):
    empty = tmp_path / "empty.lig"
    empty.write_text("")
    assert main(["lig", "table", str(empty), "--json"]) == 0
    assert capsys.readouterr().out == "{}\n"


def test_lig_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.lig"
    bad.write_text("a b ?? c\n")
    assert main(["lig", "check", str(bad)]) == 2


def test_lig_apply_needs_word(capsys):
    assert main(["lig", "apply", str(data_path("fi.lig"))]) == 2


@pytest.mark.parametrize(
    "pen, columns",
    [("disk", [1, 2] * 10), ("diamond", [1] * 20)],
)
def test_raster_line_metrics(pen, columns, capsys):
    args = ["raster", "line", "--slope", "0.5", "--offset", "0.25", "--cols", "20"]
    assert main([*args, "--pen", pen, "--metrics"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["columns"] == columns
    assert doc["mean"] == sum(columns) / 20


def test_raster_circle_golden():
    proc = run(
        "raster", "circle", "--center", "0,0", "--radius", "7.52",
        "--pen", "diamond", "--format", "pbm-ascii",
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "circle-origin-7.52-diamond.pbm").read_bytes()


def test_raster_out_file(tmp_path):
    out = tmp_path / "c.pbm"
    args = ["raster", "circle", "--center", "0,0", "--radius", "7.52", "--pen", "diamond"]
    assert main([*args, "--format", "pbm-binary", "--out", str(out)]) == 0
    assert out.read_bytes().startswith(b"P4\n")


def test_raster_pen_file(tmp_path, capsys):
    assert main(["raster", "line", "--from", "0,0", "--to", "5,1",
                 "--pen-file", str(data_path("octagon.pen"))]) == 0
    assert "#" in capsys.readouterr().out


@pytest.mark.parametrize(
    "args",
    [
        ["raster", "circle", "--radius", "-1"],
        ["raster", "circle"],
        ["raster", "line", "--from", "1,1", "--to", "1,1"],
        ["raster", "line"],
        ["raster", "line", "--slope", "0.5"],
        ["raster", "line", "--slope", "0.5", "--cols", "4", "--pen", "blob"],
    ],
)
def test_raster_usage_errors(args, capsys):
    assert main(args) == 2


def test_raster_bad_pen_file(tmp_path, capsys):
    pen = tmp_path / "bad.pen"
    pen.write_text("0 0\n1 0\n0 1\n")  # origin on the boundary
    assert main(["raster", "circle", "--radius", "3", "--pen-file", str(pen)]) == 2


def test_unknown_flag_is_usage_error():
    proc = run("raster", "circle", "--bogus")
    assert proc.returncode == 2


@pytest.mark.parametrize("figure", ["slide16", "slide17", "slide20", "slide25"])
def test_reproduce(figure, tmp_path, capsys):
    assert main(["reproduce", figure, "--out-dir", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out and "PASS" in out
    assert any(p.name.startswith(figure) for p in tmp_path.iterdir())


def test_outputs_deterministic(tmp_path):
    a = run("reproduce", "slide20", "--out-dir", str(tmp_path / "a"))
    b = run("reproduce", "slide20", "--out-dir", str(tmp_path / "b"))
    assert a.returncode == b.returncode == 0
    for path in sorted((tmp_path / "a").iterdir()):
        assert path.read_bytes() == (tmp_path / "b" / path.name).read_bytes(), path.name
