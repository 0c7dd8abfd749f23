import io
import json
import subprocess
import sys

import jsonschema
import pytest

from dlaplace.cli import main

FIB_TEXT = "a[n+2] = a[n+1] + a[n]; a[1] = 1; a[2] = 1"

QUADEXT_SCHEMA = {
    "type": "object",
    "required": ["rational", "radical", "radicand"],
    "properties": {
        "rational": {"type": "string"},
        "radical": {"type": "string"},
        "radicand": {"type": "integer", "minimum": 0},
    },
    "additionalProperties": False,
}

SOLVE_SCHEMA = {
    "type": "object",
    "required": ["closed_form", "transform", "values", "verified_upto"],
    "properties": {
        "closed_form": {
            "type": "object",
            "required": ["text", "terms", "deltas"],
            "properties": {
                "text": {"type": "string"},
                "terms": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["coefficient", "root", "multiplicity"],
                        "properties": {
                            "coefficient": QUADEXT_SCHEMA,
                            "root": QUADEXT_SCHEMA,
                            "multiplicity": {"type": "integer", "minimum": 1},
                        },
                    },
                },
                "deltas": {
                    "type": "object",
                    "additionalProperties": QUADEXT_SCHEMA,
                },
            },
        },
        "transform": {
            "type": "object",
            "required": ["text", "num", "den"],
            "properties": {
                "text": {"type": "string"},
                "num": {"type": "array", "items": QUADEXT_SCHEMA},
                "den": {"type": "array", "items": QUADEXT_SCHEMA},
            },
        },
        "values": {"type": "array", "items": {"type": "string"}},
        "verified_upto": {"type": "integer"},
    },
}

VERIFY_SCHEMA = {
    "type": "object",
    "required": ["exact", "numeric"],
    "properties": {
        "exact": {
            "type": "object",
            "required": ["passed", "upto"],
            "properties": {
                "passed": {"type": "boolean"},
                "upto": {"type": "integer"},
            },
        },
        "numeric": {
            "type": "object",
            "required": ["tolerance", "passed", "checks"],
            "properties": {
                "tolerance": {"type": "number"},
                "passed": {"type": "boolean"},
                "checks": {
                    "type": "array",
                    "minItems": 1,
                    "items": {
                        "type": "object",
                        "required": ["s", "terms", "series", "transform",
                                     "discrepancy", "tail_bound", "passed"],
                    },
                },
            },
        },
    },
}


def test_solve_fibonacci_text(capsys):
    assert main(["solve", FIB_TEXT]) == 0
    out = capsys.readouterr().out
    assert "closed form: ((1+sqrt(5))^n - (1-sqrt(5))^n)/(2^n*sqrt(5))" in out
    assert "transform:   e^s/(e^(2s) - e^s - 1)" in out
    assert "values:      1, 1, 2, 3, 5, 8, 13, 21, 34, 55" in out
    assert "verified:    n <= 64 (exact)" in out
    assert "a(1) basis:" in out and "a(2) basis:" in out


def test_solve_display_t(capsys):
    assert main(["solve", FIB_TEXT, "--display", "t"]) == 0
    assert "transform:   t/(t^2 - t - 1)" in capsys.readouterr().out


def test_solve_terms_flag(capsys):
    assert main(["solve", FIB_TEXT, "--terms", "3"]) == 0
    assert "values:      1, 1, 2\n" in capsys.readouterr().out


def test_solve_json_schema(capsys):
    assert main(["solve", FIB_TEXT, "--json", "--terms", "5"]) == 0
    payload = json.loads(capsys.readouterr().out)
    jsonschema.validate(payload, SOLVE_SCHEMA)
    assert payload["values"] == ["1", "1", "2", "3", "5"]
    assert payload["transform"]["den"] == [
        {"rational": "-1", "radical": "0", "radicand": 0},
        {"rational": "-1", "radical": "0", "radicand": 0},
        {"rational": "1", "radical": "0", "radicand": 0},
    ]


def test_verify_fibonacci_text(capsys):
    assert main(["verify", FIB_TEXT]) == 0
    out = capsys.readouterr().out
    assert "exact:   recurrence and initial values hold for n <= 64" in out
    assert out.count("numeric: s = ") == 3
    assert out.rstrip().endswith("PASS")


def test_verify_json_schema(capsys):
    assert main(["verify", FIB_TEXT, "--json", "--upto", "32",
                 "--s-grid", "1.2,2.0"]) == 0
    payload = json.loads(capsys.readouterr().out)
    jsonschema.validate(payload, VERIFY_SCHEMA)
    assert payload["exact"] == {"passed": True, "upto": 32}
    assert payload["numeric"]["passed"] is True
    assert [c["s"] for c in payload["numeric"]["checks"]] == [1.2, 2.0]


def test_verify_grid_filtering(capsys):
    # growth rate ln 5 rules out s = 1.0 and 1.5; only 2.0 is checked
    assert main(["verify", "a[n+1] = 5*a[n]; a[1] = 1"]) == 0
    out = capsys.readouterr().out
    assert out.count("numeric: s = ") == 1
    assert "numeric: s = 2:" in out


def test_table_contents_and_determinism(capsys):
    assert main(["table"]) == 0
    first = capsys.readouterr().out
    assert main(["table"]) == 0
    assert capsys.readouterr().out == first
    for row in (
        "5^(n-1) <-> 1/(e^s - 5)",
        "a^(n-1) <-> 1/(e^s - a)",
        "n <-> e^s/(e^(2s) - 2*e^s + 1)",
        "(f*g)(n) <-> F(s)G(s)",
        "f(n+k) <-> e^(ks)*F(s) - sum_(i=1..k) f(i)*e^((k-i)s)",
        "sum_(k=1..n-1) f(k) <-> F(s)/(e^s - 1)",
        "1/n <-> s - ln(e^s - 1)",
    ):
        assert row in first


def test_table_display_t(capsys):
    assert main(["table", "--display", "t"]) == 0
    out = capsys.readouterr().out
    assert "5^(n-1) <-> 1/(t - 5)" in out
    assert "n^2 <-> (t^2 + t)/(t^3 - 3*t^2 + 3*t - 1)" in out
    assert "(f*g)(n) <-> F(t)G(t)" in out


def test_stdin_and_file_input(capsys, monkeypatch, tmp_path):
    monkeypatch.setattr(sys, "stdin", io.StringIO(FIB_TEXT))
    assert main(["solve", "-", "--terms", "4"]) == 0
    assert "values:      1, 1, 2, 3\n" in capsys.readouterr().out

    path = tmp_path / "fib.dl"
    path.write_text(FIB_TEXT + "\n", encoding="utf-8")
    assert main(["solve", "--file", str(path), "--terms", "4"]) == 0
    assert "values:      1, 1, 2, 3\n" in capsys.readouterr().out


def test_exit_code_parse_and_semantic(capsys):
    assert main(["solve", "a[n+2] = a[n+1] +"]) == 1
    assert "error:" in capsys.readouterr().err
    assert main(["solve", "a[n+2] = a[n]; a[1] = 1"]) == 1
    assert "missing initial values" in capsys.readouterr().err


def test_exit_code_capability(capsys):
    # irreducible cubic characteristic polynomial
    code = main(["solve",
                 "a[n+3] = a[n+1] + a[n]; a[1] = 1; a[2] = 1; a[3] = 1"])
    assert code == 2
    assert "error:" in capsys.readouterr().err
    # resonant geometric forcing
    assert main(["solve", "a[n+1] = 2*a[n] + 2^n; a[1] = 1"]) == 2
    capsys.readouterr()
    # every grid point sits inside the divergence region
    assert main(["verify", "a[n+1] = 5*a[n]; a[1] = 1",
                 "--s-grid", "1.0"]) == 2


def test_exit_code_check_failed(capsys):
    # an unreachable tolerance turns double rounding into a check failure
    code = main(["verify", FIB_TEXT, "--s-grid", "1.2", "--tol", "1e-30"])
    assert code == 3
    assert "differ by" in capsys.readouterr().err


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "dlaplace", "solve", FIB_TEXT, "--terms", "3"],
        capture_output=True, text=True, timeout=60)
    assert result.returncode == 0
    assert "values:      1, 1, 2" in result.stdout
