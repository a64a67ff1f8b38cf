import csv
import io
import json
import subprocess
import sys

import pytest

from qsc.cli import main
from qsc.partitions import GrassmannFrame, enumerate_partitions_in_frame
from qsc.quantum import qproduct_rimhook
from qsc.tables import export_table


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["product", "--gr", "2,4", "s[2,1]*s[2,1]"], "q*s[2] + q*s[1,1]"),
        (["reduce", "--gr", "2,4", "[4,2]"], "q*s[1,1]"),
        (["reduce", "--gr", "2,4", "[3]"], "0"),
        (["gw", "--gr", "2,4", "--deg", "1", "[2,1]", "[2,1]", "[2]"], "1"),
        (["mindeg", "--gr", "2,4", "[2,2]", "[2,2]"], "formula=2 observed=2"),
        (["product", "--gr", "1,2", "s[1]*s[1]"], "q"),
    ],
)
def test_text_outputs(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out == expected


def test_json_outputs(capsys):
    code, out, _ = run(capsys, "product", "--gr", "2,4", "--json", "s[2,2]*s[2,2]")
    assert code == 0
    assert json.loads(out) == {"frame": {"l": 2, "n": 4}, "terms": [{"q": 2, "partition": [], "coeff": 1}]}
    code, out, _ = run(capsys, "mindeg", "--gr", "2,4", "--json", "[2,1]", "[2,1]")
    assert json.loads(out) == {"formula": 1, "observed": 1}
    code, out, _ = run(capsys, "gw", "--gr", "2,4", "--json", "--deg", "0", "[]", "[]", "[2,2]")
    assert json.loads(out)["value"] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["product", "--gr", "2,4", "s[1,2]"],
        ["product", "--gr", "4,4", "s[1]"],
        ["reduce", "--gr", "2,4", "[1,1,1]"],
        ["reduce", "--gr", "2,4", "[1,2]"],
        ["frobnicate"],
        ["verify"],
        ["verify", "--gr", "2,4", "--checks", "nope"],
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as info:
        sys.exit(main(argv))
    assert info.value.code == 1


def test_verify_pass_and_fail(capsys, monkeypatch):
    code, out, _ = run(capsys, "verify", "--gr", "2,4")
    assert code == 0 and out.endswith("19/19 checks passed over 1 frame(s)")
    code, out, _ = run(capsys, "verify", "--gr", "2,5", "--checks", "fulton-woodward", "--json")
    assert code == 0
    assert json.loads(out) == {
        "frame": {"l": 2, "n": 5},
        "check": "fulton-woodward",
        "status": "pass",
        "cases": 100,
        "counterexample": None,
    }

    from qsc import checks
    from qsc.quantum import QElement

    monkeypatch.setattr(checks, "giambelli_det", lambda lam, f: QElement.zero(f))
    code, out, _ = run(capsys, "verify", "--gr", "2,4", "--checks", "giambelli")
    assert code == 2 and out.startswith("FAIL")


def test_verify_duality_partner(capsys):
    code, out, _ = run(capsys, "verify", "--gr", "1,3", "--checks", "duality")
    assert code == 0 and "PASS Gr(1,3) duality" in out


def test_table_projective_line(capsys):
    code, out, _ = run(capsys, "table", "--gr", "1,2")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["l", "n", "lambda", "mu", "nu", "d", "coeff"]
    assert rows[1:] == [
        ["1", "2", "[]", "[]", "[]", "0", "1"],
        ["1", "2", "[]", "[1]", "[1]", "0", "1"],
        ["1", "2", "[1]", "[1]", "[]", "1", "1"],
    ]


def test_table_gr24_jsonl_counts():
    f = GrassmannFrame(2, 4)
    basis = enumerate_partitions_in_frame(f)
    expected = sum(len(qproduct_rimhook(a, b, f)) for i, a in enumerate(basis) for b in basis[i:])
    buf = io.StringIO()
    assert export_table(f, "jsonl", buf) == expected
    lines = buf.getvalue().splitlines()
    assert len(lines) == expected
    full = io.StringIO()
    assert export_table(f, "jsonl", full, full=True) == sum(
        len(qproduct_rimhook(a, b, f)) for a in basis for b in basis
    )
    records = [json.loads(x) for x in lines]
    assert {"l": 2, "n": 4, "lambda": [2, 1], "mu": [2, 1], "nu": [2], "d": 1, "coeff": 1} in records


def test_table_empty_range():
    buf = io.StringIO()
    assert export_table([], "csv", buf) == 0
    assert buf.getvalue() == "l,n,lambda,mu,nu,d,coeff\n"


def test_table_is_byte_stable(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["table", "--max-n", "5", "-o", str(a)]) == 0
    assert main(["table", "--max-n", "5", "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_table_io_failure(tmp_path, capsys):
    code, _, err = run(capsys, "table", "--gr", "2,4", "-o", str(tmp_path / "missing" / "x.csv"))
    assert code == 1 and "error" in err


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "qsc", "product", "--gr", "2,4", "s[1]*s[2,1]"], capture_output=True, text=True
    )
    assert res.returncode == 0 and res.stdout.strip() == "s[2,2] + q"
