import json
from pathlib import Path

import pytest

import isochron

DATA = Path(__file__).resolve().parents[2] / "data"


def load(name):
    return json.loads((DATA / f"{name}.json").read_text())


def test_analyze_uniform():
    report = isochron.analyze(load("quadratic_uniform"))
    assert report["nilpotent_order1"] is True
    assert report["resonant_letters"] == []
    assert report["verdict"] == "LinearisableStructural"


def test_analyze_accepts_text_and_mould():
    text = (DATA / "quadratic_witness.json").read_text()
    mould = {"kind": "table", "entries": [{"word": "(1,0)·(0,1)", "value": "1/2+0/1i"},
                                          {"word": "(0,1)·(1,0)", "value": "-1/2+0/1i"}]}
    report = isochron.analyze(text, max_word_length=3, mould=mould)
    assert report["projection_sum"]["dx"] == {"2,1": "-1/1+0/1i"}


def test_classify_quadratic():
    assert isochron.classify(load("quadratic_iv"))["quadratic"] == ["Q_iv"]
    assert isochron.classify(load("quadratic_violator"))["quadratic"] == []


def test_scan_periods():
    assert isochron.scan_periods(load("quadratic_iii"))["max_rel_spread"] < 1e-6
    assert isochron.scan_periods(load("quadratic_violator"), radii=[0.05, 0.1])["max_rel_spread"] > 1e-4


def test_complexity():
    assert isochron.complexity(4, "UI")["q"] == 5
    assert [c["condition"] for c in isochron.complexity(3)] == ["CR", "UI"]


def test_verify_lemmas():
    report = isochron.verify_lemmas(seed=5, max_word_length=3)
    assert report["passed"] is True
    assert report["seed"] == 5


def test_errors_map_to_python_exceptions():
    with pytest.raises(isochron.InputError):
        isochron.analyze({"degree": 2, "coefficients": [], "extra": 0})
    with pytest.raises(ValueError):
        isochron.complexity(1, "CR")
    with pytest.raises(isochron.NonPeriodicError):
        isochron.scan_periods(load("quadratic_violator"), radii=[1.0])
