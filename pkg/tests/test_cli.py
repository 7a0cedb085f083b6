from __future__ import annotations

import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from rfuchsian.cli import RunConfig, main, parse_matrix, parse_primes
from rfuchsian.exactnum import Field
from rfuchsian.report import ClassReport, decode_matrix, dumps
from rfuchsian.svg import Viewport, clip_line, fmt, render_svg

SVG_NS = "{http://www.w3.org/2000/svg}"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_text_and_json(capsys):
    code, out, _ = run(capsys, "classify", "--d", "5", "--delta", "6")
    assert code == 0 and "{2, 3}" in out
    code, out, _ = run(capsys, "classify", "--d", "5", "--delta", "6", "--json")
    obj = json.loads(out)
    assert obj["report"]["ramification"] == {"finite": [2, 3], "infinite": False}
    assert obj["report"]["algebra"] == {"a": 6, "b": 5}


def test_report_round_trip_is_byte_identical(capsys):
    for d, delta in [(5, "6"), (1, "sqrt(-1)"), (3, "3"), (2, "1+sqrt(-2)")]:
        code, out, _ = run(capsys, "classify", "--d", str(d), "--delta", delta, "--json")
        assert code == 0
        report = json.loads(out)["report"]
        again = ClassReport.from_dict(report).to_dict()
        assert dumps(again) == dumps(report)


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "--d", "5", "--matrix", "0,0,1/3;0,1,0;3,0,0", "--json")
    obj = json.loads(out)
    assert code == 0 and obj["report"]["canonical_delta"]["literal"] == "3"
    assert decode_matrix(Field(5), obj["conjugator"]).det() != 0


def test_reduce_rejects_non_unitary(capsys):
    code, _, err = run(capsys, "reduce", "--d", "1", "--matrix", "2,0,0;0,1,0;0,0,1")
    assert code == 2 and "unitarity identity fails" in err


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "--d", "5", "--primes", "2,3", "--json")
    assert code == 0 and json.loads(out)["delta"] == 6
    code, out, _ = run(capsys, "construct", "--d", "5", "--primes", "2,3", "--method", "recipe", "--json")
    obj = json.loads(out)
    assert (obj["delta"], obj["recipe_q"]) == (66, 11)
    code, out, _ = run(capsys, "construct", "--d", "2", "--json")
    assert code == 0 and json.loads(out)["delta"] == 1


@pytest.mark.parametrize(
    "argv,needle",
    [
        (["construct", "--d", "5", "--primes", "11"], "11 splits"),
        (["construct", "--d", "5", "--primes", "2"], "odd"),
        (["construct", "--d", "5", "--primes", "2,x"], "comma-separated"),
        (["classify", "--d", "5", "--delta", "0"], "nonzero"),
        (["classify", "--d", "4", "--delta", "1"], "squarefree"),
        (["classify", "--d", "5", "--delta", "1/2"], "O_K"),
        (["reduce", "--d", "1", "--matrix", "1,0;0,1,0;0,0,1"], "entries"),
    ],
)
def test_input_errors_exit_2(capsys, argv, needle):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert needle in err


def test_commensurable(capsys):
    code, out, _ = run(capsys, "commensurable", "--d", "5", "--delta", "6", "--delta", "1", "--json")
    assert code == 0 and json.loads(out)["commensurable"] is False
    code, out, _ = run(capsys, "commensurable", "--d", "5", "--delta", "1", "--delta", "4")
    assert "commensurable" in out and "not" not in out
    code, _, err = run(capsys, "commensurable", "--d", "5", "--delta", "1")
    assert code == 2


def test_orbit_svg(tmp_path, capsys):
    out = tmp_path / "orbit.svg"
    code, text, _ = run(capsys, "orbit-svg", "--d", "1", "--radius", "2", "--density", "32", "--out", str(out), "--json")
    assert code == 0
    obj = json.loads(text)
    root = ET.fromstring(out.read_text())
    assert root.tag == SVG_NS + "svg"
    assert {el.tag for el in root.iter()} == {SVG_NS + "svg", SVG_NS + "polyline"}
    assert obj["polylines"] == len(root.findall(SVG_NS + "polyline"))
    first = out.read_bytes()
    run(capsys, "orbit-svg", "--d", "1", "--radius", "2", "--density", "32", "--out", str(out))
    assert out.read_bytes() == first


def test_orbit_svg_radius_zero(tmp_path, capsys):
    out = tmp_path / "zero.svg"
    code, _, _ = run(capsys, "orbit-svg", "--d", "1", "--radius", "0", "--out", str(out))
    root = ET.fromstring(out.read_text())
    lines = root.findall(SVG_NS + "polyline")
    assert code == 0 and len(lines) == 1


def test_orbit_svg_bounds(tmp_path, capsys):
    out = tmp_path / "x.svg"
    assert run(capsys, "orbit-svg", "--radius", "5", "--out", str(out))[0] == 2
    assert run(capsys, "orbit-svg", "--density", "4", "--out", str(out))[0] == 2
    assert run(capsys, "orbit-svg", "--out", str(tmp_path / "missing" / "x.svg"))[0] == 2


def test_orbit_png(tmp_path, capsys):
    pytest.importorskip("matplotlib")
    svg, png = tmp_path / "o.svg", tmp_path / "o.png"
    code, _, _ = run(capsys, "orbit-svg", "--d", "1", "--radius", "1", "--out", str(svg), "--png", str(png))
    assert code == 0 and png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_selfcheck(capsys):
    code, out, _ = run(capsys, "selfcheck", "--seed", "3")
    assert code == 0 and out.strip().endswith("PASS")
    code, out, _ = run(capsys, "selfcheck", "--corrupt", "--json")
    obj = json.loads(out)
    assert code == 3 and not obj["ok"]
    assert [s["name"] for s in obj["suites"] if not s["ok"]] == ["hermitian"]


def test_console_script_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "rfuchsian.cli", "classify", "--d", "1", "--delta", "sqrt(-1)"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert res.returncode == 0 and "(1, 1)" in res.stdout


# -- helpers -----------------------------------------------------------------------


def test_parse_helpers():
    F = Field(2)
    M = parse_matrix(F, "1,0,0; 0,1,0; 0,0,1")
    assert M.det() == 1
    assert parse_primes("") == [] and parse_primes("3, 5") == [3, 5]
    with pytest.raises(ValueError):
        RunConfig(1, "orbit-svg", radius=9)


def test_svg_helpers():
    assert fmt(-0.0) == "0" and fmt(1 / 3) == "0.333333333"
    vp = Viewport.fit([])
    assert (vp.xmin, vp.xmax, vp.ymin, vp.ymax) == (-2, 2, -2, 2)
    seg = clip_line((0.0, 0.0), (1.0, 0.0), vp)
    assert seg is not None and seg[0][0] == pytest.approx(-2) and seg[1][0] == pytest.approx(2)
    svg = render_svg([[(0.0, 0.0), (1.0, 1.0), (1.0, 0.0)]], [((0.0, 0.0), (0.0, 1.0))], title="t")
    root = ET.fromstring(svg)
    assert root.get("aria-label") == "t" and len(root.findall(SVG_NS + "polyline")) == 2
