"""Command-line surface: flags, exit codes, text formats, JSON documents."""

import json

import pytest

from oscurve.cli import format_ideal, main, read_ideal_text
from oscurve.errors import ParseError
from oscurve.rings import PolyRing


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- ideal text format -------------------------------------------------------------


def test_ideal_text_round_trip():
    text = "ring: QQ[x,y,z]\nx^2 - y*z\nx*y - z^2"
    ideal = read_ideal_text(text)
    assert ideal.ring == PolyRing(("x", "y", "z"))
    assert format_ideal(ideal) == text


def test_ideal_text_rejects_missing_header():
    with pytest.raises(ParseError):
        read_ideal_text("x^2 - y*z")


# -- classify -----------------------------------------------------------------------


def test_classify_cusp(capsys):
    code, out, _ = run_cli(capsys, "classify", "--curve", "x1^2*x2 - x0^3", "--point", "0,0,1")
    assert code == 0
    assert "verdict: A2" in out


def test_classify_json_round_trips(capsys):
    code, out, _ = run_cli(
        capsys,
        "classify",
        "--curve",
        "x1^2*x2^2 - 2*x0^2*x1*x2 + x0^4 + x0^2*x1^2",
        "--point",
        "0,0,1",
        "--json",
    )
    assert code == 0
    doc = json.loads(out)
    assert json.loads(json.dumps(doc)) == doc
    assert doc["label"] == "A5"
    assert doc["witnesses"][0]["field"] == {"quadext": -1}
    assert [step["branch"] for step in doc["trace"]] == ["b2", "b2", "a"]
    assert doc["trace"][0]["i"] == 4


def test_classify_rejects_garbage(capsys):
    code, _, err = run_cli(capsys, "classify", "--curve", "x1^2*x2 - q^3", "--point", "0,0,1")
    assert code == 2
    assert "input error" in err


def test_classify_refuses_non_reduced(capsys):
    code, _, err = run_cli(
        capsys, "classify", "--curve", "(x1*x2 - x0^2)^2", "--point", "0,0,1"
    )
    assert code == 1
    assert "refused" in err


def test_classify_refuses_point_off_curve(capsys):
    code, _, err = run_cli(capsys, "classify", "--curve", "x1^2*x2 - x0^3", "--point", "1,1,0")
    assert code == 1


# -- parameterization commands --------------------------------------------------------


def test_implicitize_command(capsys):
    code, out, _ = run_cli(capsys, "implicitize", "--param", "s^2; s*t; t^2", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["polynomial"] == "x*z - y^2"
    assert doc["map_degree"] == 1


def test_implicitize_refuses_base_points(capsys):
    code, _, err = run_cli(capsys, "implicitize", "--param", "s^2; s*t; s^2 + 2*s*t")
    assert code == 1


def test_analyze_param_json_schema(capsys):
    code, out, _ = run_cli(
        capsys,
        "analyze-param",
        "--param",
        "(s^2 - t^2)*t; s*(s^2 - t^2); t^3",
        "--classify",
        "--json",
    )
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"n", "x2_length", "points"}
    assert doc["n"] == 3 and doc["x2_length"] == 1
    (point,) = doc["points"]
    assert point["delta"] == 1 and point["cusp"] is False
    assert point["label"] == "A1" and point["s"] == 1


# -- ideal commands --------------------------------------------------------------------


@pytest.fixture()
def ideal_file(tmp_path):
    def write(text):
        path = tmp_path / "ideal.txt"
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


def test_gb_command(capsys, ideal_file):
    path = ideal_file("ring: QQ[x,y]\nx - y\nx + y")
    code, out, _ = run_cli(capsys, "gb", "--ideal", path, "--order", "lex", "--json")
    assert code == 0
    assert json.loads(out)["basis"] == ["y", "x"]


def test_hilbert_command(capsys, ideal_file):
    path = ideal_file("ring: QQ[x,y,z]\nx^2\nx*y\ny^2")
    code, out, _ = run_cli(capsys, "hilbert", "--ideal", path, "--upto", "4", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["values"] == [1, 3, 3, 3, 3]
    assert doc["stable_value"] == 3


def test_eliminate_command(capsys, ideal_file):
    path = ideal_file("ring: QQ[x,y,z]\ny - x^2\nz - x^3")
    code, out, _ = run_cli(capsys, "eliminate", "--ideal", path, "--drop", "x")
    assert code == 0
    assert out.strip() == "ring: QQ[y,z]\ny^3 - z^2"


def test_saturate_command(capsys, ideal_file):
    path = ideal_file("ring: QQ[x,y,z]\nx^2*y")
    code, out, _ = run_cli(capsys, "saturate", "--ideal", path, "--by", "x", "--json")
    assert code == 0
    assert json.loads(out)["ideal"] == ["y"]


def test_radical_command(capsys, ideal_file):
    path = ideal_file("ring: QQ[x,y,z]\nx^2\ny")
    code, out, _ = run_cli(capsys, "radical", "--ideal", path, "--json")
    assert code == 0
    assert json.loads(out)["ideal"] == ["y", "x"]


def test_radical_refuses_positive_dimensional(capsys, ideal_file):
    path = ideal_file("ring: QQ[x,y,z]\nx*z - y^2")
    code, _, err = run_cli(capsys, "radical", "--ideal", path)
    assert code == 1


def test_missing_file_is_input_error(capsys):
    code, _, err = run_cli(capsys, "gb", "--ideal", "/nonexistent/ideal.txt")
    assert code == 2


# -- projection --------------------------------------------------------------------------


def test_project_command(capsys, ideal_file):
    path = ideal_file(
        "ring: QQ[a,b,c,d,e,f,g]\na - b\nb - c\nc - d\nd - e\ne - f\nf - g"
    )
    code, out, _ = run_cli(
        capsys,
        "project",
        "--n",
        "6",
        "--center",
        "a + g; 3*f - b - d; 9*e + c - d",
        "--scheme",
        path,
        "--names",
        "a,b,c,d,e,f,g",
        "--json",
    )
    assert code == 0
    assert json.loads(out)["image_ideal"] == ["v - 1/9*w", "u - 2/9*w"]


# -- repro --------------------------------------------------------------------------------


def test_repro_list(capsys):
    code, out, _ = run_cli(capsys, "repro", "--list")
    assert code == 0
    names = [line.split(":")[0] for line in out.strip().splitlines()]
    assert "example-4.1" in names
    assert "example-6.1-part1" in names and "example-6.1-part2" in names
    assert "remark-3.2" in names and "remark-3.3" in names
    assert all(f"normal-forms-{s}" in names for s in range(1, 13))


def test_repro_single_case(capsys):
    code, out, _ = run_cli(capsys, "repro", "remark-3.3")
    assert code == 0
    assert out.strip().endswith("PASS")


def test_repro_case_json(capsys):
    code, out, _ = run_cli(capsys, "repro", "example-4.1", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True and doc["mismatches"] == []
