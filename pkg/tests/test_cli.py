from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from pseudotri.cli import main
from pseudotri.enumerator import CountTable
from pseudotri.harness import VerificationReport


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), buf)
    return code, buf.getvalue()


def test_ali_table():
    code, text = run("table", "--name", "ali", "--rows", "6")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "l,0,1,2,3,4,5,sum"
    assert [int(r.split(",")[-1]) for r in lines[1:]] == [1, 3, 13, 67, 381, 2307]
    assert lines[2] == "1,1,2,,,,,3"


def test_count_ppt_w_example():
    assert run("count", "--family", "single-chain", "--l", "3", "--kind", "ppt-w", "--w", "1,2") == (0, "9\n")


@pytest.mark.parametrize("argv,want", [
    (("--family", "convex", "--n", "7", "--kind", "t"), "42"),
    (("--family", "single-chain", "--l", "3", "--kind", "ppt"), "67"),
    (("--family", "single-chain", "--l", "3", "--kind", "pt"), "190"),
    (("--family", "double-chain", "--l", "2", "--m", "2", "--kind", "pt"), "6916"),
    (("--family", "double-chain", "--l", "2", "--m", "2", "--kind", "ppt"), "1476"),
    (("--family", "double-chain", "--l", "2", "--m", "2", "--kind", "t"), "80"),
])
def test_count_values(argv, want):
    assert run("count", *argv) == (0, want + "\n")


def test_count_is_decimal_string_for_big_values():
    code, text = run("count", "--family", "single-chain", "--l", "60", "--kind", "ppt")
    assert code == 0 and text.strip().isdigit() and len(text.strip()) > 20


@pytest.mark.parametrize("argv", [
    ("count", "--family", "single-chain", "--kind", "ppt"),
    ("count", "--family", "single-chain", "--l", "3", "--kind", "ppt", "--w", "1"),
    ("count", "--family", "single-chain", "--l", "3", "--kind", "ppt-w", "--w", "x"),
    ("count", "--family", "convex", "--n", "5", "--kind", "pt-w"),
    ("count", "--family", "square", "--n", "5", "--kind", "t"),
    ("table", "--name", "ali", "--bogus"),
    ("seq", "--name", "A062992", "--terms", "-1"),
    ("gen", "--family", "double-chain", "--params", "1"),
    ("enumerate", "--points", "/nonexistent/file.txt"),
    (),
])
def test_usage_errors_exit_2(argv, capsys):
    code, _ = run(*argv)
    assert code == 2
    assert "usage" in capsys.readouterr().err


def test_verify_monotonicity_example():
    code, text = run("verify", "--suite", "monotonicity", "--max-n", "8", "--seed", "7")
    assert code == 0 and "FAIL" not in text


def test_verify_json_round_trip():
    code, text = run("verify", "--suite", "bijection", "--max-n", "6", "--format", "json")
    assert code == 0
    obj = json.loads(text)
    assert VerificationReport.from_json(obj).to_json() == obj


def test_verify_failure_exits_1():
    # the stated normalisations of two constants fail; the shifted ones pass
    code, text = run("verify", "--suite", "asymptotics")
    assert code == 1
    assert "witness=" in text
    assert text.count("FAIL") == 2


def test_gen_enumerate_round_trip(tmp_path):
    pts = tmp_path / "sc3.txt"
    assert run("gen", "--family", "single-chain", "--params", "3", "--out", str(pts)) == (0, "")
    code, text = run("enumerate", "--points", str(pts), "--pointed")
    assert code == 0 and json.loads(text)["count"] == "67"
    code, text = run("enumerate", "--points", str(pts), "--by-tip", "--format", "json")
    tbl = CountTable.from_json(json.loads(text))
    assert tbl[(1, 2)] == 9 and tbl.total == 67
    code, text = run("enumerate", "--points", str(pts), "--stratify", "--format", "csv")
    lines = text.splitlines()
    assert lines[0] == "w,count" and lines[1].startswith(",") and len(lines) == 9
    assert sum(int(r.split(",")[1]) for r in lines[1:]) == 190


def test_by_tip_rejects_other_families(tmp_path):
    pts = tmp_path / "c5.txt"
    run("gen", "--family", "convex", "--params", "5", "--out", str(pts))
    assert run("enumerate", "--points", str(pts), "--by-tip")[0] == 2


def test_budget_exhaustion_exits_1(tmp_path, capsys):
    pts = tmp_path / "dc.txt"
    run("gen", "--family", "double-chain", "--params", "2", "2", "--out", str(pts))
    assert run("enumerate", "--points", str(pts), "--budget", "10")[0] == 1
    assert "budget" in capsys.readouterr().err


def test_workers_do_not_change_output(tmp_path):
    pts = tmp_path / "ac.txt"
    run("gen", "--family", "almost-convex", "--params", "5", "0,2", "--out", str(pts))
    one = run("enumerate", "--points", str(pts), "--stratify", "--workers", "1")
    two = run("enumerate", "--points", str(pts), "--stratify", "--workers", "2")
    assert one == two and one[0] == 0


@pytest.mark.parametrize("name,head", [
    ("A059346", [1, 0, 1, 1, 1, 2, 1, 2, 3, 5]),
    ("A062991", [1, 1, 2, 2, 6, 5]),
    ("A062992", [1, 3, 13, 67, 381, 2307]),
    ("A035002", [1, 1, 1, 2, 2, 2, 4, 5, 5, 4, 8, 12]),
    ("A051708", [1, 2, 14, 106, 838]),
])
def test_sequences(name, head):
    code, text = run("seq", "--name", name, "--terms", str(len(head)))
    assert code == 0 and text == ", ".join(map(str, head)) + "\n"


def test_seq_bfile():
    assert run("seq", "--name", "A062992", "--terms", "3", "--bfile") == (0, "0 1\n1 3\n2 13\n")


@pytest.mark.parametrize("name", ["t-array", "E", "F", "ratio"])
def test_tables_csv_and_json(name):
    code, text = run("table", "--name", name, "--rows", "4")
    assert code == 0
    header = text.splitlines()[0].split(",")
    code, js = run("table", "--name", name, "--rows", "4", "--format", "json")
    obj = json.loads(js)
    assert obj["header"] == header and len(obj["rows"]) == len(text.splitlines()) - 1


def test_f_table_first_row():
    _, text = run("table", "--name", "F", "--rows", "6")
    assert [int(x) for x in text.splitlines()[1].split(",")[1:]] == [2, 8, 30, 108, 378, 1296]


def test_module_entry_point_is_deterministic():
    argv = [sys.executable, "-m", "pseudotri", "verify", "--suite", "inequality", "--max-n", "6"]
    a = subprocess.run(argv, capture_output=True, text=True)
    b = subprocess.run(argv, capture_output=True, text=True)
    assert a.returncode == 0 and a.stdout == b.stdout and a.stdout
