from __future__ import annotations

import io
import json

import pytest

from taftinv.cli import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, run
from taftinv.downup import parse_element
from taftinv.freealg import ActionSpec
from taftinv.taft import iterated_x


def _run(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_classify_plain_and_json():
    code, text = _run("classify", "--n", "2")
    assert code == EXIT_OK
    assert len(text.splitlines()) == 8
    code, text = _run("classify", "--n", "3", "--format", "json")
    rows = json.loads(text)
    assert len(rows) == 12 and {r["case"] for r in rows} == {1, 2}


def test_act_example():
    code, text = _run("act", "--n", "3", "--k", "0", "--sqrt", "alt", "--op", "x", "--element", "v^2")
    assert code == EXIT_OK
    lines = text.splitlines()
    assert lines[0].startswith("# n=3 k=0 sqrt=alt")
    assert lines[-1] == "z + (1 - r)*u*v"


def test_printed_element_round_trips():
    spec = ActionSpec(4, 1)
    source = "v^5 + s*u*v^3"
    code, text = _run("act", "--n", "4", "--k", "1", "--op", "x", "--times", "2", "--element", source)
    assert code == EXIT_OK
    printed = text.splitlines()[-1]
    assert parse_element(printed, spec) == iterated_x(spec, 2, parse_element(source, spec))


def test_act_g_and_case_two_note():
    code, text = _run("act", "--n", "3", "--k", "1", "--case", "2", "--op", "g", "--element", "u")
    assert code == EXIT_OK
    assert text.startswith("note: case-2 action normalized")


def test_invariants_output():
    code, text = _run("invariants", "--n", "3", "--k", "1", "--max-degree", "3")
    assert code == EXIT_OK
    assert "degree 0: dim 1" in text
    code, text = _run("invariants", "--n", "3", "--k", "0", "--x-only", "--generators", "--max-degree", "8")
    assert "generator degrees: [1, 2, 5, 6]" in text
    code, text = _run("invariants", "--n", "2", "--k", "0", "--max-degree", "4", "--format", "json")
    data = json.loads(text.split("\n", 1)[1])
    assert data["flavor"] == "full" and len(data["degrees"]) == 5


def test_hilbert_closed_form():
    code, text = _run("hilbert", "--n", "3", "--k", "2", "--closed-form")
    assert code == EXIT_OK
    assert "agrees" in text


def test_gorenstein_output():
    code, text = _run("gorenstein", "--n", "2", "--k", "1")
    assert code == EXIT_OK
    assert "Gorenstein: h(1/t) = -t^6 h(t)" in text
    code, text = _run("gorenstein", "--n", "3", "--k", "1", "--sqrt", "alt")
    assert "congruence holds: True" in text


def test_table_csv():
    code, text = _run("table", "--n-max", "16", "--format", "csv")
    assert code == EXIT_OK
    lines = text.splitlines()
    assert lines[0] == "n,k,gorenstein,covered_by_thm"
    assert len(lines) == 136
    assert "16,15,true,a" in lines


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["classify"],
        ["act", "--n", "3", "--k", "0", "--op", "y", "--element", "u"],
        ["table", "--n-max", "1"],
        ["invariants", "--n", "3", "--k", "0", "--max-degree", "-1"],
        ["act", "--n", "3", "--k", "0", "--op", "x", "--element", "u", "--times", "-2"],
    ],
)
def test_usage_errors(argv):
    assert _run(*argv)[0] == EXIT_USAGE


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "--n", "1"],
        ["act", "--n", "3", "--k", "5", "--op", "x", "--element", "u"],
        ["act", "--n", "3", "--k", "0", "--op", "x", "--element", "u^-1"],
        ["act", "--n", "3", "--k", "0", "--op", "x", "--element", "q"],
    ],
)
def test_domain_errors(argv):
    assert _run(*argv)[0] == EXIT_DOMAIN


def test_help_exits_cleanly():
    assert _run("--help")[0] == EXIT_OK


def test_verify_presentations_suite():
    code, text = _run("verify", "--suite", "presentations")
    assert code == EXIT_OK
    assert text.startswith("[PASS] criterion 8")
