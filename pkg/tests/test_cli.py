"""End-to-end command-line behavior: exit codes and serialization."""

import io
import contextlib
import json

from quadslice.cli import main, parse_table_json
from quadslice.slice_solver import f_n, solve_y


def run(argv):
    out = io.StringIO()
    err = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        rc = main(argv)
    return rc, out.getvalue(), err.getvalue()


def test_table_json_round_trip():
    rc, out, _ = run(["table", "--what", "fn", "--n", "1..3", "--cap", "4", "--format", "json"])
    assert rc == 0
    what, cap, entries = parse_table_json(out)
    assert what == "fn" and cap == 4
    for n in range(1, 4):
        assert entries[n] == f_n(n, 4)


def test_table_y_csv(tmp_path):
    target = tmp_path / "y.csv"
    rc, _, _ = run(
        ["table", "--what", "y", "--i", "1..6", "--cap", "5", "--format", "csv",
         "--output", str(target)]
    )
    assert rc == 0
    lines = target.read_text().splitlines()
    assert lines[0] == "index,tb_exp,tw_exp,coeff"
    assert any(line.startswith("1,") for line in lines[1:])


def test_table_text_matches_canonical_form():
    rc, out, _ = run(["table", "--what", "fn", "--n", "1..1", "--cap", "2", "--format", "text"])
    assert rc == 0
    assert "0 1 1/1" in out and "1 1 1/1" in out


def test_unknown_suite_is_usage_error():
    rc, _, _ = run(["verify", "nosuchsuite"])
    assert rc == 2


def test_empty_range_is_usage_error():
    rc, _, _ = run(["table", "--what", "fn", "--n", "3..1", "--cap", "3"])
    assert rc == 2


def test_verify_equality_small():
    rc, out, _ = run(
        ["verify", "equality", "--n", "3", "--cap", "5", "--enum-n", "2", "--enum-f", "2"]
    )
    assert rc == 0
    assert out.startswith("PASS equality")


def test_verify_reflection_small():
    rc, out, _ = run(["verify", "reflection", "--alpha", "2", "--draws", "3", "--seed", "5"])
    assert rc == 0
    assert "PASS reflection" in out


def test_extract_stieltjes_agrees():
    rc, out, _ = run(["extract", "--type", "stieltjes", "--i", "1..2", "--cap", "5"])
    assert rc == 0
    assert "DIFFERENT" not in out


def test_extract_newtype_agrees():
    rc, out, _ = run(["extract", "--type", "newtype", "--i", "1..2", "--cap", "4"])
    assert rc == 0
    got = solve_y(4)
    assert got.first[1] is not None  # solver reachable; CLI compared equal
    assert "DIFFERENT" not in out


def test_extract_cap_too_small_diagnostic():
    rc, _, err = run(
        ["extract", "--type", "stieltjes", "--i", "1..2", "--cap", "4",
         "--internal-cap", "4"]
    )
    assert rc == 1
    assert "verification failure" in err or err == ""
