import json
import subprocess
import sys
import time

import pytest

from treeseries import trees as T
from treeseries.cli import main, parse_inputs
from treeseries.coeff import ParseError, Poly
from treeseries.series import Carrier, GradedSeries, series_to_json
from treeseries.verify import NAMED, composition_example


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_example_inputs(tmp_path):
    a, b, c, d = (Poly.var(v) for v in "abcd")
    car = Carrier.operad("dup")
    paths = []
    for name, (x, y) in (("phi", (a, b)), ("psi", (c, d))):
        s = GradedSeries(car, 3, {NAMED["vtx"]: 1, NAMED["AB"]: x, NAMED["BA"]: y})
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(series_to_json(s)))
        paths.append(str(path))
    return paths


def test_trees_order_3(capsys):
    code, out, _ = run(capsys, "trees", "--order", "3")
    assert code == 0
    codes = out.split()
    assert len(codes) == 5 and codes == sorted(codes)
    assert set(codes) == {t.code for t in T.enumerate_trees(3)}


def test_coproduct_dif_aca(capsys):
    code, out, _ = run(capsys, "coproduct", "--algebra", "dif", "--tree", "1100100")
    assert code == 0
    assert out.strip() == "1 (x) 1100100 + 10100 (x) 11000 + 11000 (x) 10100 + 1100100 (x) 1"


def test_compose_json_files(capsys, tmp_path):
    phi, psi = write_example_inputs(tmp_path)
    code, out, _ = run(capsys, "compose", "--lhs", phi, "--rhs", psi, "-N", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["terms"]) == 16
    assert doc == series_to_json(composition_example())


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.txt"
    code, out, _ = run(capsys, "trees", "--order", "2", "-o", str(target))
    assert code == 0 and out == ""
    assert target.read_text().split() == ["10100", "11000"]


def test_text_inputs_and_truncation(capsys):
    code, out, _ = run(capsys, "multiply", "--lhs", "x^{0} + x^{100}", "--rhs", "x^{0} + x^{100}", "-N", "2")
    assert code == 0
    assert out.strip() == "x^{0} + 2*x^{100} + x^{11000}"
    code, out, _ = run(capsys, "comp-invert", "--instance", "as", "--input", "x + x^2", "-N", "3")
    assert code == 0
    assert out.strip() == "x^{1} - x^{2} + 2*x^{3} - 5*x^{4}"


def test_factor_command(capsys):
    code, out, _ = run(capsys, "factor", "--input", "x^{100} + a*x^{11000} + b*x^{10100}", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert [r["key"] for r in doc["g"]["terms"]] == ["0", "100"]


def test_antipode_command(capsys):
    code, out, _ = run(capsys, "antipode", "--algebra", "sym", "--tree", "b2")
    assert code == 0
    assert out.strip() == "-b2 + b1*b1"


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "compose", "--lhs", "x^{100} + (a", "--rhs", "x^{100}")
    assert code == 2
    assert err.startswith("parse error:") and "column" in err


def test_carrier_mismatch_reports_both(capsys, tmp_path):
    phi, _ = write_example_inputs(tmp_path)
    code, _, err = run(capsys, "multiply", "--lhs", phi, "--rhs", phi)
    assert code == 2
    assert "monoid" in err and "operad(dup)" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["compose", "--rhs", "x^{100}"])
    assert info.value.code == 2


def test_parse_inputs_examples():
    assert parse_inputs("v/v", "tree") == NAMED["AB"]
    assert parse_inputs("10100", "tree") == NAMED["BA"]
    with pytest.raises(ParseError) as info:
        parse_inputs("((v", "tree")
    assert info.value.column == 3
    chi = parse_inputs("x^{100} + 3*x^{11000}", "character", Carrier.operad("dup"))
    assert chi == {NAMED["vtx"]: 1, NAMED["AB"]: 3}


def test_parse_inputs_checks_carrier():
    doc = json.dumps(series_to_json(composition_example()))
    with pytest.raises(ValueError, match="carrier mismatch"):
        parse_inputs(doc, "series", Carrier.monoid("dup", "over"))


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "trees", "-N", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["failures"] == [] and doc["seed"] == 42
    assert all(r["passed"] for r in doc["results"])


def test_verify_all_smoke():
    t0 = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "treeseries", "verify", "--suite", "all", "-N", "3"],
        capture_output=True, text=True, timeout=120,
    )
    elapsed = time.perf_counter() - t0
    assert proc.returncode == 0, proc.stdout + proc.stderr
    lines = proc.stdout.strip().splitlines()
    assert lines[0] == "# suite=all seed=42 N=3"
    assert lines[-1].endswith(" 0 failed")
    assert elapsed < 60
