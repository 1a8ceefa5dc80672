import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from centralbell.cli import main
from centralbell.exact import poly_from_strings
from centralbell.moments import parse_rv, sum_power_moment
from centralbell.probabilistic import central_bell_Y, central_fubini_Y

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_csv_row(capsys):
    code, out, _ = run(capsys, "table", "--rv", "constant:1", "--order", "4", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n\\k", "0", "1", "2", "3", "4"]
    assert rows[4] == ["3", "0", "1/4", "0", "1"]
    for n, row in enumerate(rows[1:]):
        assert len(row) - 1 == n + 1


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_table_golden(capsys, fmt):
    code, out, _ = run(capsys, "table", "--rv", "constant:1", "--order", "6", "--format", fmt)
    assert code == 0
    assert out == (GOLDEN / f"table_constant1_order6.{fmt}").read_text()


def test_poly_order_zero(capsys):
    code, out, _ = run(capsys, "poly", "--rv", "bernoulli:1/3", "--order", "0")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"rv": "bernoulli:1/3", "order": 0, "polys": [{"n": 0, "coeffs": ["1"]}]}


@pytest.mark.parametrize("command, fn", [("poly", central_bell_Y), ("fubini", central_fubini_Y)])
def test_poly_json_round_trip(capsys, command, fn):
    spec = "discrete:1=1/2,2=1/2"
    code, out, _ = run(capsys, command, "--rv", spec, "--order", "7")
    assert code == 0
    model = parse_rv(spec)
    for item in json.loads(out)["polys"]:
        p = poly_from_strings(item["coeffs"])
        assert p == fn(model, item["n"])
        assert p(3) == fn(model, item["n"])(3)


def test_poly_csv(capsys):
    code, out, _ = run(capsys, "poly", "--rv", "constant:1", "--order", "3", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][0] == "n\\power"
    assert rows[4] == ["3", "0", "1/4", "0", "1"]


def test_moments(capsys):
    code, out, _ = run(capsys, "moments", "--rv", "bernoulli:1/2", "--order", "3")
    doc = json.loads(out)
    assert doc["moments"] == ["1", "1/2", "1/2", "1/2"]
    assert doc["sum_moments"][2][2] == "3/2"
    code, out, _ = run(capsys, "moments", "--rv", "poisson:2", "--order", "4", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["k\\m", "0", "1", "2", "3", "4"]
    assert rows[2][1:] == ["1", "2", "6", "22", "94"]
    assert rows[3][4] == str(sum_power_moment(parse_rv("poisson:2"), 2, 3))


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--rv", "poisson:2", "--order", "8")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert len(lines) == 27 and all(d["status"] == "pass" for d in lines)
    code, _, _ = run(capsys, "verify", "--order", "6")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--order", "6", "--inject-fault", "4,2")
    assert code == 1
    assert any(json.loads(line)["status"] == "fail" for line in out.splitlines())


def test_verify_csv(capsys):
    code, out, _ = run(capsys, "verify", "--rv", "bernoulli:1/3", "--order", "4", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["id", "model", "order", "status"]
    assert ["BERNOULLI_PK", "bernoulli:1/3", "4", "pass"] in rows


@pytest.mark.parametrize("argv", [
    ["table", "--rv", "weird:1"],
    ["table", "--rv", "constant:1", "--order", "33"],
    ["table", "--rv", "constant:1", "--order", "-1"],
    ["table", "--rv", "bernoulli:2"],
    ["table", "--rv", "constant:1", "--format", "xml"],
    ["table"],
    ["verify", "--inject-fault", "2,5"],
    [],
])
def test_argument_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_raw_model_too_short_exits_2(capsys):
    code, _, err = run(capsys, "table", "--rv", "raw:1,2", "--order", "5")
    assert code == 2 and "order" in err


def test_out_file(tmp_path, capsys):
    target = tmp_path / "t.csv"
    code, out, _ = run(capsys, "table", "--rv", "constant:1", "--order", "6", "--format", "csv",
                       "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == (GOLDEN / "table_constant1_order6.csv").read_text()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "centralbell", "table", "--rv", "constant:1",
                           "--order", "6", "--format", "json"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "table_constant1_order6.json").read_text()
