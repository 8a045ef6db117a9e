import io
import json
import subprocess
import sys

import pytest

from simconj.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


def structured(*argv):
    code, text = call(*argv, "--format", "structured")
    return code, json.loads(text)


def test_invert_chain_example():
    code, rep = structured("invert", "--alpha", "(1 2)(3 4)", "--beta", "(1 3 5)(2 4 6)")
    assert code == 0
    assert rep["outputs"]["gamma"] == "(1 4)(2 3)(5 6)"
    assert rep["outputs"]["verified"] is True
    assert rep["outputs"]["method"] == "ChainReduction"


def test_invert_not_found():
    code, text = call("invert", "--alpha", "(1 4 3 2)", "--beta", "(3 2 1 5 4 6 7)")
    assert code == 1
    assert "|M([alpha,beta])| = 5" in text


def test_invert_out_of_scope_without_fallback():
    code, rep = structured("invert", "--alpha", "(1 4 3 2)", "--beta", "(3 2 1 5 4 6 7)", "--no-fallback")
    assert code == 1 and rep["outputs"]["result"] == "OutOfScope"


def test_verify():
    assert call("verify", "--alpha", "(1 2)", "--beta", "(3 4)", "--gamma", "()")[0] == 0
    assert call("verify", "--alpha", "(1 2 3)", "--beta", "(3 4)", "--gamma", "()")[0] == 1


def test_analyze_profile():
    code, rep = structured("analyze", "--alpha", "(1 2 3 4 5 6)", "--beta", "(3 2 1 5 4 6)")
    assert code == 0
    assert rep["outputs"]["profile"]["pairs"] == [[1, 2, 3], [4, 5], [6]]
    code, rep = structured("analyze", "--alpha", "(1 4 3 2)", "--beta", "(4 3 5)")
    assert rep["outputs"]["case"] == "T32ii"
    assert rep["outputs"]["binding"]["r"] == 4 and rep["outputs"]["binding"]["s"] == 2


@pytest.mark.parametrize(
    "argv,needle",
    [
        (["invert", "--alpha", "(1 2 1)", "--beta", "()"], "position 5 (token '1')"),
        (["invert", "--alpha", "(1 2", "--beta", "()"], "position 4"),
        (["invert", "--alpha", "(1 2)"], "--beta"),
        (["invert", "--alpha", "(1 2)", "--beta", "()", "--bogus"], "token '--bogus'"),
        (["frobnicate"], "frobnicate"),
        (["sweep"], "--n"),
    ],
)
def test_usage_errors(argv, needle):
    code, text = call(*argv)
    assert code == 2
    assert needle in text


def test_budget_exit_code():
    code, text = call("sweep", "--n", "7")
    assert code == 3 and "budget" in text


def test_sweep_report():
    code, rep = structured("sweep", "--n", "4")
    assert code == 0
    assert rep["outputs"]["total"] == 576 and rep["outputs"]["failures"] == []
    assert "wall_time" not in rep["outputs"]
    code, text = call("sweep", "--n", "4")
    assert "wall_time" in text and "fallback: 0" in text


def test_sharpness_command():
    code, rep = structured("sharpness", "--n", "5", "--target", "5", "--limit", "2")
    assert code == 0 and rep["outputs"]["count"] == 1440 and len(rep["outputs"]["pairs"]) == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["invert", "--alpha", "(2 1)(4 3)", "--beta", "(5 1 3)(2 4 6)"],
        ["analyze", "--alpha", "(1 4 3 2)", "--beta", "(4 3 5)", "--n", "7"],
        ["verify", "--alpha", "(1 2)", "--beta", "(3 4)", "--gamma", "()"],
        ["sweep", "--n", "4", "--mode", "sampled", "--samples", "40", "--seed", "3"],
    ],
)
def test_structured_round_trip(argv):
    code, rep = structured(*argv)
    code2, rep2 = structured(*rep["command"])
    assert code == code2 and rep == rep2
    _, t1 = call(*argv, "--format", "structured")
    _, t2 = call(*argv, "--format", "structured")
    assert t1 == t2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "simconj", "invert", "--alpha", "(1 2)(3 4)", "--beta", "(1 3 5)(2 4 6)"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and "(1 4)(2 3)(5 6)" in proc.stdout
