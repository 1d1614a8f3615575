import json
import subprocess
import sys

import jsonschema
import pytest

from gaussian_content.cli import REPORT_SCHEMA, SCHEMA, format_text, main, run_command

PLANE = "QQ[x,y] domain"

GOLDEN = [
    (["gb", "--ring", "QQ[x,y]", "--ideal", "x^2 + y^2 - 1, 1 - x", "--order", "lex"], 0),
    (["nf", "--ring", "QQ[x,y]", "--ideal", "x^2 + y^2 - 1", "--elem", "x^2"], 0),
    (["member", "--ring", "QQ[s,t]", "--ideal", "s*t, s^2+t^2", "--elem", "s^2"], 1),
    (["member", "--ring", "QQ[x,y]", "--ideal", "x^2+y^2, x*y", "--elem", "x*y"], 0),
    (["equal", "--ring", "QQ[x,y]", "--ideal", "x, y", "--ideal2", "y, x + y"], 0),
    (["equal", "--ring", "QQ[x,y]", "--ideal", "x", "--ideal2", "x^2"], 1),
    (["colon", "--ring", "QQ[x,y]", "--ideal", "x^2, x*y", "--ideal2", "x"], 0),
    (["content", "--ring", "GF(2)[a,b,c]/(a^2 - b^2*c) domain", "--poly", "a^2 + b^2*X^2"], 0),
    (["gaussian", "--ring", PLANE, "--poly", "x + y*X", "--degree", "1"], 1),
    (["gaussian", "--ring", "QQ[x,y]/(x^2 + y^2 - 1) domain", "--poly", "1 - x + y*X"], 0),
    (["gaussian", "--ring", PLANE, "--poly", "x + y*X", "--method", "invertibility"], 1),
    (["invertible", "--ring", "QQ[x,y]/(x^2 + y^2 - 1) domain", "--ideal", "1 - x, y"], 0),
    (["invertible", "--ring", PLANE, "--ideal", "x, y"], 1),
    (["invertible", "--ring", "QQ[s,t]/(s*t)", "--ideal", "s, t"], 2),
    (["nu", "--ring", PLANE, "--poly", "x + y*X", "--at", "x,y", "--mmax", "3"], 1),
    (["nu", "--ring", "QQ[x] domain", "--poly", "x + x^2*X", "--at", "x=0"], 0),
    (["dm", "--ring", "QQ[s,t,u,v]", "--poly", "s + t*X", "--poly2", "u + v*X"], 0),
    (["verify-paper"], 0),
    (["verify-paper", "--override", "extension-counterexample=GF(2)[s,t]"], 1),
    (["member", "--ring", "QQ[x,X]", "--ideal", "x", "--elem", "x"], 2),
    (["member", "--ring", "QQ[x]", "--ideal", "x +", "--elem", "x"], 2),
    (["member", "--ring", "QQ[x]", "--ideal", "x"], 2),
    (["colon", "--ring", "QQ[x]", "--ideal", "x", "--ideal2", "0"], 2),
    (["nu", "--ring", PLANE, "--poly", "x + y*X", "--at", "x"], 2),
    (["frobnicate"], 2),
    ([], 2),
    (["verify-paper", "--override", "nonsense=QQ[x]"], 2),
]


@pytest.mark.parametrize("argv, code", GOLDEN, ids=lambda a: " ".join(a) if isinstance(a, list) else str(a))
def test_exit_code_matrix(argv, code):
    got, report = run_command(argv)
    assert got == code == report["exit_code"]
    assert report["status"] == {0: "pass", 1: "fail", 2: "error"}[code]
    jsonschema.validate(report, REPORT_SCHEMA)


def test_payloads():
    _, r = run_command(["nu", "--ring", PLANE, "--poly", "x + y*X", "--at", "x,y", "--mmax", "3"])
    assert r["result"]["nu"] == [2, 3, 5, 9] and r["result"]["violated_at"] == 1
    _, r = run_command(["gaussian", "--ring", PLANE, "--poly", "x + y*X", "--degree", "1"])
    assert r["result"]["witness"] == {"g": "x*X + y", "element": "x^2"}
    _, r = run_command(["content", "--ring", "GF(2)[a,b,c]/(a^2 - b^2*c) domain", "--poly", "a^2 + b^2*X^2"])
    assert r["result"]["principal"] == "b^2"
    _, r = run_command(["gb", "--ring", "QQ[x,y]", "--ideal", "x^2 + y^2 - 1, 1 - x", "--order", "lex"])
    assert sorted(r["result"]["basis"]) == ["x - 1", "y^2"]
    _, r = run_command(["nf", "--ring", "QQ[x,y]", "--ideal", "x^2 + y^2 - 1", "--elem", "x^2"])
    assert r["result"]["normal_form"] == "-y^2 + 1"
    _, r = run_command(["invertible", "--ring", "QQ[x,y]/(x^2 + y^2 - 1) domain", "--ideal", "1 - x, y"])
    assert r["result"]["certificate"]


def test_resource_limit_exit_code(monkeypatch):
    from gaussian_content.groebner import clear_cache

    monkeypatch.setenv("GAUSSIAN_CONTENT_MAX_GENERATORS", "2")
    clear_cache()
    try:
        code, report = run_command(["gb", "--ring", "QQ[x,y]", "--ideal", "x^3 - y, x*y^2 - 1, y^3 - x^2 + x"])
    finally:
        clear_cache()
    assert code == 3 and report["status"] == "error" and "error" in report
    jsonschema.validate(report, REPORT_SCHEMA)


def test_json_output(capsys):
    code = main(["member", "--ring", "QQ[s,t]", "--ideal", "s*t, s^2+t^2", "--elem", "s^2", "--format", "json"])
    report = json.loads(capsys.readouterr().out)
    assert code == 1 and report["schema"] == SCHEMA
    assert report["result"] == {"member": False}
    assert report["command"]["verb"] == "member"
    jsonschema.validate(report, REPORT_SCHEMA)


def test_text_output(capsys):
    assert main(["member", "--ring", "QQ[s,t]", "--ideal", "s*t, s^2+t^2", "--elem", "s^2"]) == 1
    assert capsys.readouterr().out.splitlines() == ["member: false", "outcome: fail"]
    assert main(["member", "--ring", "QQ[x,X]", "--ideal", "x", "--elem", "x"]) == 2
    err = capsys.readouterr().err
    assert "line 1, column 6" in err


def test_verify_paper_deterministic():
    texts = [format_text(run_command(["verify-paper"])[1]) for _ in range(2)]
    assert texts[0] == texts[1]
    assert texts[0].splitlines()[-1] == "all 8 checks passed"


def test_negative_control_names_anchor():
    _, report = run_command(["verify-paper", "--override", "extension-counterexample=GF(2)[s,t]"])
    assert report["result"]["failed"] == ["extension-counterexample"]
    assert "FAILED: extension-counterexample" in format_text(report)


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "gaussian_content", "equal", "--ring", "QQ[x,y]",
         "--ideal", "x, y", "--ideal2", "y, x + y", "--format", "json"],
        capture_output=True, text=True, check=False,
    )
    assert out.returncode == 0
    assert json.loads(out.stdout)["result"] == {"equal": True}
