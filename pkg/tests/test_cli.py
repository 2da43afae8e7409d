import io
import json

import pytest

from antibidiag.cli import main


def run(args):
    out = io.StringIO()
    code = main(args, out=out)
    return code, out.getvalue()


def test_solve_worked_example():
    code, text = run(["solve", "--spectrum", "3,-2,1"])
    assert code == 0
    report = json.loads(text)
    assert report["a"] == pytest.approx([2.0, 2**0.5, 3**0.5], abs=1e-12)
    assert report["a_squared"] == pytest.approx([2.0, 2.0, 3.0], abs=1e-12)
    assert report["jacobi"][0][0] == pytest.approx(2.0)
    assert report["diagnostics"]["min_modulus_gap"] == 1.0
    assert report["warnings"] == []


def test_solve_rejects_with_exit_1(capsys):
    for args in (["solve", "--spectrum", "1,2"],
                 ["solve", "--spectrum", "2,-2"],
                 ["solve", "--spectrum", "-1"],
                 ["solve", "--spectrum", ""]):
        code, text = run(args)
        assert code == 1
        assert text == ""  # no partial report


def test_usage_error_exit_3():
    code, _ = run(["solve"])  # neither --spectrum nor --input
    assert code == 3
    code, _ = run(["bogus-command"])
    assert code == 3


def test_json_report_roundtrips():
    code, text = run(["solve", "--spectrum", "5,-3.5,2,-0.25"])
    assert code == 0
    report = json.loads(text)
    assert json.loads(json.dumps(report)) == report


def test_rational_solve_exact_strings():
    code, text = run(["solve", "--spectrum", "3,-2,1", "--backend", "rational"])
    assert code == 0
    report = json.loads(text)
    assert report["a"] is None
    assert report["a_squared"] == ["2", "2", "3"]
    assert report["antibidiagonal"] is None


def test_rational_rejects_root_extraction_commands():
    code, _ = run(["roundtrip", "--spectrum", "3,-2,1", "--backend", "rational"])
    assert code == 3
    code, _ = run(["sqrt", "--mus", "9,4,1", "--backend", "rational"])
    assert code == 3


def test_roundtrip_command():
    code, text = run(["roundtrip", "--spectrum", "3,-2,1"])
    assert code == 0
    report = json.loads(text)
    assert report["max_error"] <= 1e-10
    assert sorted(report["recovered"]) == pytest.approx([-2.0, 1.0, 3.0], abs=1e-10)


def test_sqrt_command():
    code, text = run(["sqrt", "--mus", "9,4,1"])
    assert code == 0
    report = json.loads(text)
    want = [[3.0, 6**0.5, 0.0], [6**0.5, 6.0, 2 * 2**0.5], [0.0, 2 * 2**0.5, 5.0]]
    for got_r, want_r in zip(report["jacobi"], want):
        assert got_r == pytest.approx(want_r, abs=1e-12)


def test_forward_command():
    code, text = run(["forward", "--a", "2,1.4142135623730951,1.7320508075688772", "--eigs"])
    assert code == 0
    report = json.loads(text)
    assert report["systems_match"]
    assert report["p_coeffs"] == pytest.approx([6.0, -5.0, -2.0, 1.0], abs=1e-12)
    assert report["eigenvalues"] == pytest.approx([-2.0, 1.0, 3.0], abs=1e-10)


def test_forward_rejects_nonpositive():
    code, _ = run(["forward", "--a", "1,-2"])
    assert code == 1


def test_signreg_command():
    code, text = run(["signreg", "--spectrum", "3,-2,1"])
    assert code == 0
    report = json.loads(text)
    assert report["all_minors_conforming"]
    assert report["signature"] == [1, -1, -1]
    assert report["class_plus_power"] is not None and report["class_plus_power"] <= 2


def test_file_inputs(tmp_path):
    doc = tmp_path / "spec.json"
    doc.write_text(json.dumps({"spectrum": [3, -2, 1]}))
    code, text = run(["solve", "--input", str(doc)])
    assert code == 0
    assert json.loads(text)["a_squared"] == pytest.approx([2.0, 2.0, 3.0], abs=1e-12)
    csvdoc = tmp_path / "spec.csv"
    csvdoc.write_text("3\n-2\n1\n")
    code2, text2 = run(["solve", "--input", str(csvdoc)])
    assert code2 == 0 and json.loads(text2)["a_squared"] == json.loads(text)["a_squared"]


def test_csv_and_pretty_formats():
    code, text = run(["solve", "--spectrum", "3,-2,1", "--format", "csv"])
    assert code == 0
    assert any(line.startswith("a,") for line in text.splitlines())
    code, text = run(["solve", "--spectrum", "3,-2,1", "--format", "pretty"])
    assert code == 0
    assert "jacobi" in text


def test_conditioning_warning():
    code, text = run(["solve", "--spectrum", "1.0000000001,-1"])
    assert code == 0
    report = json.loads(text)
    assert any("modulus gap" in w for w in report["warnings"])


def test_verify_all_deterministic():
    args = ["verify-all", "--sizes", "1,2,3", "--cases", "3", "--seed", "7"]
    code1, text1 = run(args)
    code2, text2 = run(args)
    assert code1 == code2 == 0
    assert text1 == text2
    assert json.loads(text1)["passed"]
