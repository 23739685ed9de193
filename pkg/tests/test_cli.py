import json
import subprocess
import sys

import pytest

from shiftellipse.cli import build_pie, cmd_convert, main, parse_point
from shiftellipse.errors import NotAnEllipseError
from shiftellipse.fixed import PointFx

CIRCLE = ["--center", "200,200", "--p", "300,200", "--q", "200,300"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_point():
    assert parse_point("1.5,-2") == PointFx.from_floats(1.5, -2.0)
    with pytest.raises(ValueError):
        parse_point("1;2")


def test_ellipse_json_meta(capsys):
    code, out, _ = run(capsys, "ellipse", *CIRCLE, "--flatness", "0.25", "--format", "json")
    assert code == 0
    meta = json.loads(out)["meta"]
    assert meta["k"] == 3
    assert meta["aux_radius"] == 106.25
    assert meta["aux_radius_raw"] == int(106.25 * 65536)
    assert meta["points"] == (411775 >> 13) + 1


def test_ellipse_svg_default(capsys):
    code, out, _ = run(capsys, "ellipse", *CIRCLE)
    assert code == 0 and out.startswith("<?xml") and out.count("<path") == 1


def test_arc_and_negative_coordinates(capsys):
    code, out, _ = run(capsys, "arc", "--center=-10,-20", "--p=90,-20", "--q=-10,30",
                       "--start", "0.5", "--sweep=-2", "--k", "4", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "curve,index,x,y,x_raw,y_raw"


def test_hyperbola_needs_k(capsys):
    code, _, err = run(capsys, "hyperbola", *CIRCLE, "--sweep", "1")
    assert code == 2 and json.loads(err)["error"] == "usage"
    code, out, _ = run(capsys, "hyperbola", *CIRCLE, "--sweep", "1", "--k", "4", "--format", "json")
    assert code == 0 and json.loads(out)["meta"]["k"] == 4


def test_error_codes(capsys):
    code, _, err = run(capsys, "arc", *CIRCLE, "--sweep", "0")
    assert code == 2 and json.loads(err)["error"] == "empty-arc"
    code, _, err = run(capsys, "ellipse", "--center", "0,0", "--p", "1,1", "--q", "2,2")
    assert code == 3 and json.loads(err)["error"] == "degenerate"
    code, _, err = run(capsys, "arc", *CIRCLE, "--sweep", "7")
    assert code == 2 and json.loads(err)["error"] == "sweep-range"
    code, _, err = run(capsys, "ellipse", "--center", "0,0", "--p", "20000,0", "--q", "0,1")
    assert code == 2 and json.loads(err)["error"] == "fixed-range"


def test_flatness_and_k_conflict():
    with pytest.raises(SystemExit) as exc:
        main(["ellipse", *CIRCLE, "--flatness", "1", "--k", "3"])
    assert exc.value.code == 2


def test_config_precedence(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"flatness": 0.5, "kmax": 2}))
    _, out, _ = run(capsys, "ellipse", *CIRCLE, "--config", str(cfg), "--format", "json")
    meta = json.loads(out)["meta"]
    assert (meta["flatness"], meta["kmax"], meta["k"]) == (0.5, 2, 2)
    _, out, _ = run(capsys, "ellipse", *CIRCLE, "--config", str(cfg), "--flatness", "0.25",
                    "--kmax", "6", "--format", "json")
    meta = json.loads(out)["meta"]
    assert (meta["flatness"], meta["kmax"], meta["k"]) == (0.25, 6, 3)
    _, out, _ = run(capsys, "ellipse", *CIRCLE, "--format", "json")
    meta = json.loads(out)["meta"]
    assert (meta["flatness"], meta["kmax"]) == (0.25, 6)
    bad = tmp_path / "bad.json"
    bad.write_text('{"colour": 1}')
    code, _, err = run(capsys, "ellipse", *CIRCLE, "--config", str(bad))
    assert code == 2 and json.loads(err)["error"] == "usage"


def test_convert_both_ways(capsys):
    code, out, _ = run(capsys, "convert", "--json", '{"A": 4, "B": 0, "C": 25, "F": -100}')
    assert code == 0
    doc = json.loads(out)
    assert doc["p"] == pytest.approx([5.0, 0.0]) and doc["q"] == pytest.approx([0.0, 2.0])
    assert doc["calibration_number"] == pytest.approx(1.0)
    code, out, _ = run(capsys, "convert", "--json", json.dumps({"center": [0, 0], **{k: doc[k] for k in "pq"}}))
    imp = json.loads(out)["implicit"]
    assert [imp[k] for k in "ABCDEF"] == pytest.approx([4.0, 0.0, 25.0, 0.0, 0.0, -100.0])


def test_convert_errors(capsys):
    with pytest.raises(NotAnEllipseError):
        cmd_convert({"A": 1, "B": 0, "C": -1, "F": -1})
    code, _, err = run(capsys, "convert", "--json", '{"A": 1, "B": 3, "C": 1, "F": -1}')
    assert code == 2 and json.loads(err)["error"] == "not-an-ellipse"
    code, _, err = run(capsys, "convert", "--strict-calibration", "--json", '{"A": 4, "C": 4, "F": -4}')
    assert code == 2 and json.loads(err)["error"] == "uncalibrated"
    code, _, err = run(capsys, "convert", "--json", "[1, 2]")
    assert code == 2


def test_convert_file_input(tmp_path, capsys):
    f = tmp_path / "in.json"
    f.write_text('{"a": 1, "b": 0, "c": 1, "d": -2, "e": 0, "f": 0}')
    code, out, _ = run(capsys, "convert", "--input", str(f))
    assert code == 0 and json.loads(out)["center"] == pytest.approx([1.0, 0.0])


def test_demo_pie():
    curves, meta = build_pie(k=4)
    assert len(curves) == 6 * 5
    wedges = [c for c in curves if c.hub is not None]
    assert len(wedges) == 24
    assert meta["k_source"] == "explicit"


def test_verify_subcommand(capsys, tmp_path):
    fig = tmp_path / "kmax.png"
    code, out, _ = run(capsys, "verify", "kmax", "--figure", str(fig))
    assert code == 0 and json.loads(out)["stats"]["kmax"] == 6
    assert fig.stat().st_size > 0
    code, out, _ = run(capsys, "verify", "vlen-band", "--samples", "5000", "--seed", "1")
    assert code == 0 and json.loads(out)["pass"] is True


def test_output_and_figure_files(tmp_path, capsys):
    doc, fig = tmp_path / "e.svg", tmp_path / "e.png"
    code, out, _ = run(capsys, "ellipse", *CIRCLE, "--output", str(doc), "--figure", str(fig))
    assert code == 0 and out == ""
    assert doc.read_text().startswith("<?xml")
    assert fig.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


@pytest.mark.parametrize("fmt", ["svg", "csv", "json"])
def test_repeated_runs_are_byte_identical(fmt):
    argv = [sys.executable, "-m", "shiftellipse.cli", "demo-pie", "--format", fmt]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first
