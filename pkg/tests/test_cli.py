import csv
import io
import json

import pytest

from ptcoxeter.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_roots_json():
    code, out, _ = call("roots", "--group", "g2")
    assert code == 0
    rep = json.loads(out)
    assert set(rep) == {"meta", "data", "checks"}
    assert len(rep["data"]) == 12
    assert rep["meta"]["flags"]["group"] == "g2"


def test_deform_a2():
    code, out, _ = call("deform", "--group", "a2", "--scheme", "typeA", "--epsilon", "0.3")
    assert code == 0
    rep = json.loads(out)
    assert len(rep["data"]) == 6
    checks = {c["name"]: c for c in rep["checks"]}
    assert checks["closure"]["pass"]
    assert checks["inner_products"]["residual"] <= 1e-12


def test_deform_typeB_reports_closure_only():
    code, out, _ = call("deform", "--group", "g2", "--scheme", "typeB", "--epsilon", "0.5")
    assert code == 0
    assert [c["name"] for c in json.loads(out)["checks"]] == ["closure"]


def test_spectrum_table():
    code, out, _ = call("spectrum", "--group", "g2", "--gs", "2", "--gl", "2", "--omega", "1",
                        "--profile", "phi-shift", "--nmax", "2", "--lmax", "2")
    assert code == 0
    rows = json.loads(out)["data"]
    levels = {(r["branch"], r["n"], r["ell"]): r["energy"] for r in rows if r["kind"] == "level"}
    assert levels[("++", 0, 0)] == 26.0
    assert levels[("--", 0, 0)] == -10.0


def test_figure_csv():
    code, out, _ = call("figure", "--group", "g2", "--epsilon", "0.5", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["label", "re_coef", "im_coef", "re1", "re2", "im1", "im2"]
    assert len(rows) == 13
    for row in rows[1:]:
        for x in row[3:]:
            float(x)


def test_potential_points():
    code, out, _ = call("potential", "--group", "a2", "--epsilon", "0.2",
                        "--point", "0.7,-0.2,-0.5", "--polar", "1.0,0.3", "--format", "csv")
    assert code == 0
    assert len(out.strip().splitlines()) == 3


@pytest.mark.parametrize("argv", [
    ("deform", "--epsilon", "-1"),
    ("deform", "--epsilon", "nan"),
    ("roots", "--group", "b2"),
    ("potential",),
    ("potential", "--point", "1,2"),
    ("spectrum", "--nmax", "-3"),
    ("nonsense",),
    (),
])
def test_usage_errors(argv):
    code, _, _ = call(*argv)
    assert code == 2


def test_singular_point_is_usage_error():
    code, _, err = call("potential", "--point", "1,1,0")
    assert code == 2 and "pole" in err


def test_output_file_and_determinism(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert call("spectrum", "--profile", "r-shift", "--output", str(p))[0] == 0
    assert a.read_bytes() == b.read_bytes()
