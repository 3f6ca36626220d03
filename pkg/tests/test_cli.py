"""CLI commands, exit codes, and golden-file byte stability."""

import json
import os

import pytest

from conelogic import cli

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def golden(name):
    with open(os.path.join(GOLDEN, name), "r", encoding="utf-8") as fh:
        return fh.read()


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


def test_parse_golden(capsys):
    code, out = run(capsys, "parse", "--formula", "!a * b -o c")
    assert code == 0
    assert out == golden("parse.json")
    _, again = run(capsys, "parse", "--formula", "!a * b -o c")
    assert again == out


def test_interpret_golden(capsys):
    args = (
        "interpret",
        "--env", os.path.join(GOLDEN, "env.json"),
        "--formula", "!(a & b)",
        "--trunc", "2",
    )
    code, out = run(capsys, *args)
    assert code == 0
    assert out == golden("interpret.json")
    _, again = run(capsys, *args)
    assert again == out


def test_norm_golden(capsys):
    args = (
        "norm",
        "--env", os.path.join(GOLDEN, "env.json"),
        "--object", "?a",
        "--vector", os.path.join(GOLDEN, "vector.json"),
        "--trunc", "2",
    )
    code, out = run(capsys, *args)
    assert code == 0
    assert out == golden("norm.json")
    report = json.loads(out)
    assert report["result"] == {"kind": "exact", "value": "2"}


def test_check_golden(capsys):
    args = ("check", "--suite", "all", "--seed", "42", "--trials", "3")
    code, out = run(capsys, *args)
    assert code == 0
    assert out == golden("check.json")
    _, again = run(capsys, *args)
    assert again == out
    report = json.loads(out)
    assert report["all_passed"] is True
    assert set(report["suites"]) == {"mall", "exp", "pcs", "qcs"}


def test_single_suite_matches_the_all_run(capsys):
    _, full = run(capsys, "check", "--suite", "all", "--seed", "7", "--trials", "2")
    _, only = run(capsys, "check", "--suite", "pcs", "--seed", "7", "--trials", "2")
    assert json.loads(only)["suites"]["pcs"] == json.loads(full)["suites"]["pcs"]


def test_interpret_text_output(capsys):
    code, out = run(
        capsys,
        "interpret",
        "--env", os.path.join(GOLDEN, "env.json"),
        "--formula", "a & b",
        "--out", "text",
    )
    assert code == 0
    assert "dim: 4" in out and "backend: polyhedral" in out


def test_parse_error_exit_code(capsys):
    code, out = run(capsys, "parse", "--formula", "a * ")
    assert code == 2
    report = json.loads(out)
    assert report["error"]["type"] == "ParseError"
    assert "position 4" in report["error"]["message"]


def test_unbound_atom_exit_code(capsys):
    code, out = run(
        capsys,
        "interpret",
        "--env", os.path.join(GOLDEN, "env.json"),
        "--formula", "nope",
    )
    assert code == 2
    assert json.loads(out)["error"]["type"] == "EnvError"


def test_norm_dimension_mismatch(capsys):
    code, out = run(
        capsys,
        "norm",
        "--env", os.path.join(GOLDEN, "env.json"),
        "--object", "a",
        "--vector", os.path.join(GOLDEN, "vector.json"),
    )
    assert code == 2
    assert "coordinates" in json.loads(out)["error"]["message"]


def test_failing_check_exits_one(capsys, monkeypatch):
    def rigged(names, seed, trials):
        return {
            "suites": {
                "mall": {
                    "checks": [{"name": "x", "passed": False, "detail": "rigged"}],
                    "passed": False,
                }
            },
            "all_passed": False,
        }

    monkeypatch.setattr(cli, "run_suites", rigged)
    code, out = run(capsys, "check", "--suite", "mall")
    assert code == 1
    assert json.loads(out)["all_passed"] is False
