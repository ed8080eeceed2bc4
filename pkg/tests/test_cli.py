from __future__ import annotations

import json
import subprocess
import sys

import pytest

from fixedperim.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_r4(capsys):
    assert run(capsys, "count", "--family", "r", "--n", "4") == (0, "8\n", "")


def test_count_ell2_full_set(capsys):
    code, out, _ = run(capsys, "count", "--family", "ell2", "--d", "2", "--a", "1", "--b", "2", "--n", "10")
    assert (code, out) == (0, "512\n")


def test_count_csv_range(capsys):
    code, out, _ = run(capsys, "count", "--family", "f", "--d", "1", "--a", "1", "--n-min", "3", "--n-max", "5", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["family,params,n,value", "f,d=1;a=1,3,2", "f,d=1;a=1,4,3", "f,d=1;a=1,5,5"]


def test_count_json_uses_decimal_strings(capsys):
    code, out, _ = run(capsys, "count", "--family", "r", "--n", "80", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["values"] == [{"n": 80, "value": str(2**79)}]


def test_output_is_deterministic(capsys, tmp_path):
    argv = ["count", "--family", "beck", "--d", "2", "--a", "1", "--n-max", "12", "--format", "json"]
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        assert main(argv + ["--output", str(p)]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_enumerate_renderings(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "h", "--d", "1", "--a", "1", "--n", "4")
    assert code == 0 and out.split() == ["4", "3+2", "3+1"]
    code, out, _ = run(capsys, "enumerate", "--family", "f", "--d", "1", "--a", "1", "--n", "3", "--render", "profile")
    assert sorted(out.split()) == ["EEEN", "ENNN"]
    code, out, _ = run(capsys, "enumerate", "--family", "r", "--n", "2", "--render", "ferrers")
    assert out.split("\n\n") == ["• •", "•\n•\n"]


def test_verify_pass_and_summary(capsys):
    code, out, _ = run(capsys, "verify", "theorem-k2", "--max-n", "8", "--oracle-max-n", "8")
    obj = json.loads(out)
    assert code == 0 and obj["passed"] and obj["summary"] == "FO=FD for all j, n <= 8"


def test_verify_rejects_foreign_option(capsys):
    code, _, err = run(capsys, "verify", "straub", "--pairs", "3")
    assert code == 3 and json.loads(err)["field"] == "pairs"


def test_scan_exit_codes(capsys):
    code, out, _ = run(capsys, "scan", "kangkim", "--d", "1", "--a", "1", "--m", "4", "--m1", "1", "--m2", "3", "--n-max", "20")
    assert code == 0 and json.loads(out)["verdict"] == "all-zero"
    code, out, err = run(capsys, "scan", "fofd", "--j", "2", "--k", "3", "--n-max", "10")
    assert code == 1
    assert json.loads(err)["failures"][0]["n"] == json.loads(out)["violations"][0]


def test_scan_missing_param(capsys):
    code, _, err = run(capsys, "scan", "prop17", "--d", "3", "--n-max", "10")
    assert code == 3 and json.loads(err)["field"] == "a1"


def test_constants(capsys):
    code, out, _ = run(capsys, "constants", "--d", "1", "--format", "json")
    row = json.loads(out)[0]
    assert code == 0 and row["tipping"] == 4 and float(row["alpha_d"]) == 0.5


def test_validation_error_exit_3(capsys):
    code, _, err = run(capsys, "count", "--family", "f", "--d", "1", "--a", "9", "--n", "3")
    assert code == 3 and json.loads(err) == {"error": "validation", "field": "a", "message": "need 1 <= a <= d + 1"}


@pytest.mark.parametrize(
    "argv",
    [["bogus"], ["count", "--family", "nope", "--n", "3"], ["verify", "nope"], ["scan", "other", "--n-max", "3"]],
)
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as e:
        main(argv)
    assert e.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fixedperim", "count", "--family", "r", "--n", "4"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "8\n"
