"""End-to-end checks of the isochron command line tool.

The binary comes from $ISOCHRON_CLI and the sample fields from $ISOCHRON_DATA.
"""

import json
import os
import subprocess
from pathlib import Path

import pytest

CLI = os.environ.get("ISOCHRON_CLI", "build/tools/isochron")
DATA = Path(os.environ.get("ISOCHRON_DATA", "data"))


def run(*args, check_code=0):
    proc = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, timeout=120)
    if check_code is not None:
        assert proc.returncode == check_code, proc.stderr
    return proc


def run_json(*args):
    return json.loads(run(*args).stdout)


def field(name):
    return DATA / f"{name}.json"


def test_analyze_uniform_text():
    out = run("analyze", "--input", field("quadratic_uniform"), "--format", "text").stdout
    assert "nilpotent_order1: true" in out
    assert "resonant letters: none" in out
    assert "verdict: LinearisableStructural" in out


def test_analyze_linear_has_empty_alphabet():
    report = run_json("analyze", "--input", field("linear"))
    assert report["alphabet"] == []
    assert report["pairwise_brackets"] == []
    assert report["resonance"]["resonant_words"] == []
    assert report["verdict"] == "LinearisableStructural"


def test_analyze_prints_witness():
    report = run_json("analyze", "--input", field("quadratic_witness"))
    assert report["nilpotent_order1"] is False
    witnesses = report["central_series"]["witnesses"]
    assert witnesses[0]["pair"] == ["(0,1)", "(1,0)"]
    assert witnesses[0]["bracket"] == {"dx": {"2,1": "-2/1+0/1i"}, "dy": {"1,2": "2/1+0/1i"}, "letter": "(1,1)"}
    assert report["verdict"] == "Unknown"
    text = run("analyze", "--input", field("quadratic_witness"), "--format", "text").stdout
    assert "witness [(0,1), (1,0)]" in text


def test_analyze_with_mould():
    report = run_json("analyze", "--input", field("quadratic_witness"), "--mould", DATA / "moulds" / "table.json",
                      "--max-word-length", 3)
    assert report["projection_sum"] == {"dx": {"2,1": "-1/1+0/1i"}, "dy": {"1,2": "1/1+0/1i"}, "letter": "(1,1)"}
    report = run_json("analyze", "--input", field("quadratic_uniform"), "--mould", DATA / "moulds" / "random.json")
    assert report["projection"]["reduced"] is True
    assert report["projection_sum"] == {"dx": {}, "dy": {}}


def test_resonant_letter_reported():
    report = run_json("analyze", "--input", field("quintic_uniform_resonant"), "--max-word-length", 3)
    assert report["resonant_letters"] == ["(2,2)"]
    assert report["verdict"] == "Unknown"


def test_classify():
    report = run_json("classify", "--input", field("quadratic_iii"))
    assert report["quadratic"] == ["Q_iii"]
    report = run_json("classify", "--input", field("quadratic_violator"))
    assert report["quadratic"] == []
    ui = next(v for v in report["verdicts"] if v["condition"] == "UI")
    assert {"relation": "p_{0,2}=0", "residual": "1/1+0/1i"} in ui["failing"]


def test_complexity():
    assert run_json("complexity", "--condition", "UI", "--degree", 5) == {
        "condition": "UI", "degree": 5, "q": 7, "m": 1, "ambient_dim": 18}
    both = run_json("complexity", "--degree", 3)
    assert [c["q"] for c in both] == [3, 5]
    assert run_json("complexity", "--input", field("quadratic_iv"), "--condition", "CR")["q"] == 2


@pytest.mark.parametrize("name,bound", [("quadratic_iii", 1e-6), ("quadratic_holomorphic", 1e-6), ("linear", 1e-10)])
def test_scan_isochronous(name, bound):
    scan = run_json("scan-periods", "--input", field(name))
    assert list(scan) == ["radii", "periods", "max_rel_spread", "reference"]
    assert scan["radii"] == [0.02, 0.05, 0.1, 0.2]
    assert scan["max_rel_spread"] < bound


def test_scan_detects_non_isochronous():
    assert run_json("scan-periods", "--input", field("quadratic_violator"))["max_rel_spread"] > 1e-4
    scan = run_json("scan-periods", "--input", field("quadratic_iii_phase_counterexample"), "--radii", "0.05,0.2")
    assert scan["max_rel_spread"] > 1e-4


def test_scan_reports_failing_radius():
    proc = run("scan-periods", "--input", field("quadratic_violator"), "--radii", "0.1,0.45", check_code=1)
    assert "0.45" in proc.stderr


def test_verify_lemmas_default_seed():
    report = run_json("verify-lemmas")
    assert report["passed"] is True
    assert [s["name"] for s in report["suites"]] == [
        "fond2", "bracket_lemma", "structure1", "holom", "fond3", "uniform_homogeneous"]


def test_verify_lemmas_seed_variation():
    verdicts = set()
    for seed in range(10):
        report = run_json("verify-lemmas", "--seed", seed, "--max-word-length", 4)
        verdicts.add(tuple((s["name"], s["passed"]) for s in report["suites"]))
    assert len(verdicts) == 1
    assert all(passed for _, passed in verdicts.pop())


def test_mutation_is_caught():
    proc = run("verify-lemmas", "--mutate-bracket-sign", check_code=2)
    report = json.loads(proc.stdout)
    fond2 = report["suites"][0]
    assert fond2["name"] == "fond2" and fond2["passed"] is False
    assert fond2["counterexamples"]


@pytest.mark.parametrize("args", [
    ("analyze", "--input", "quadratic_witness"),
    ("classify", "--input", "quadratic_iv"),
    ("scan-periods", "--input", "quadratic_uniform"),
    ("complexity", "--degree", "6"),
    ("verify-lemmas", "--seed", "3", "--max-word-length", "3"),
])
def test_json_round_trip_and_determinism(args):
    args = [str(field(a)) if prev == "--input" else a for prev, a in zip(("",) + args, args)]
    first = run(*args).stdout
    second = run(*args).stdout
    assert first == second
    again = json.dumps(json.loads(first), indent=2, ensure_ascii=False) + "\n"
    assert again == first


def test_global_options_before_subcommand():
    out = run("--format", "text", "complexity", "--degree", 2).stdout
    assert out.startswith("CR d=2")


@pytest.mark.parametrize("args", [
    ("analyze",),
    ("analyze", "--input", "does/not/exist.json"),
    ("scan-periods", "--input", "quadratic_iv", "--radii", "0.1,x"),
    ("scan-periods", "--input", "quadratic_iv", "--radii", "0.2,0.1"),
    ("complexity", "--condition", "Q_i", "--degree", "3"),
    ("complexity", "--degree", "1"),
    ("analyze", "--input", "quadratic_iv", "--format", "yaml"),
    ("frobnicate",),
])
def test_invalid_input_exits_1(args):
    args = [str(field(a)) if prev == "--input" and not a.startswith("does") else a
            for prev, a in zip(("",) + args, args)]
    run(*args, check_code=1)


def test_bad_files_exit_1(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"degree": 2, "coefficients": [], "colour": "red"}')
    run("analyze", "--input", bad, check_code=1)
    bad.write_text("{ not json")
    run("classify", "--input", bad, check_code=1)
    mould = tmp_path / "mould.json"
    mould.write_text('{"kind": "table", "entries": [{"word": "(5,5)", "value": "1"}]}')
    run("analyze", "--input", field("quadratic_uniform"), "--mould", mould, check_code=1)
