import csv
import io
import json

import pytest

from qcongr import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "th-2", "--d", "2", "--n", "9")
    assert code == 0
    assert "PASS" in out


def test_verify_fail_and_hypothesis(capsys):
    assert run(capsys, "verify", "th-2", "--d", "3", "--n", "7")[0] == 1
    assert run(capsys, "verify", "th-2", "--d", "2", "--n", "7")[0] == 2


def test_scan_csv(capsys):
    code, out, err = run(capsys, "scan", "th-5", "--d", "1..3", "--n-max", "21", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 3 * 11          # odd n from 1 to 21 for each d
    assert {r["outcome"] for r in rows} == {"PASS"}


def test_limits(capsys):
    code, out, _ = run(capsys, "limits", "--van-hamme", "--p-max", "97", "--format", "json")
    reports = [json.loads(x) for x in out.splitlines()]
    assert len(reports) == 24
    # the as-written sign fails at p = 1 mod 4
    assert code == 1
    assert {r["params"]["p"] % 4 for r in reports if r["outcome"] == "FAIL"} == {1}
    code, _, _ = run(capsys, "limits", "--van-hamme", "--p-max", "97", "--classical-sign")
    assert code == 0


def test_json_is_deterministic(capsys):
    argv = ("scan", "th-2", "--d", "2,3", "--n-max", "25", "--format", "json")
    a = run(capsys, *argv)
    b = run(capsys, *argv)
    assert a == b
    assert all(json.loads(x)["millis"] is None for x in a[1].splitlines())


def test_threads_env(capsys, monkeypatch):
    argv = ("scan", "th-3", "--d", "2", "--n-max", "21", "--format", "json")
    serial = run(capsys, *argv)
    monkeypatch.setenv("QCONGR_THREADS", "4")
    assert run(capsys, *argv) == serial


@pytest.mark.parametrize("argv", [
    ["verify"], ["verify", "nope"], ["verify", "th-2", "--d", "2"], ["frobnicate"],
    ["scan", "th-2", "--d", "x..y", "--n-max", "9"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 64


def test_claim_files(capsys, tmp_path):
    good = tmp_path / "good.qcl"
    good.write_text("claim z params n : sum k=0..n-1 of q^k ~= 0 mod Phi(n)^1\n")
    code, out, _ = run(capsys, "verify", "z", "--file", str(good), "--n", "7")
    assert code == 0 and "PASS" in out
    bad = tmp_path / "bad.qcl"
    bad.write_text("claim bad : sum of\n")
    code, _, err = run(capsys, "parse-check", str(bad))
    assert code == 65
    assert f"{bad}:1:17" in err
    assert run(capsys, "parse-check", str(good), "--pretty")[0] == 0


def test_identities(capsys):
    code, out, _ = run(capsys, "identities", "--chu-max", "2", "--saal-max", "1", "--samples", "5")
    assert code == 0
    assert out.count("PASS") == 3 + 2 + 2


def test_parse_range():
    assert cli.parse_range("5") == [5]
    assert cli.parse_range("1..4") == [1, 2, 3, 4]
    assert cli.parse_range("-1,1") == [-1, 1]
