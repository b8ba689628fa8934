import json
import math

import jsonschema
import pytest

mixorder = pytest.importorskip("mixorder")


def example1_model():
    return mixorder.MixtureModel.vary_alpha(mixorder.Baseline.exponential(0.2), 0.1, [0.6, 0.4], [0.3, 0.4])


def test_models():
    m = example1_model()
    s = math.exp(-0.02)
    expected = 0.6 * 0.3 * s / (1 - 0.7 * s) + 0.4 * 0.4 * s / (1 - 0.6 * s)
    assert m.survival(1.0) == pytest.approx(expected, rel=1e-14)
    assert m.cdf(m.quantile(0.37)) == pytest.approx(0.37, abs=1e-11)
    assert m.sample(5, 1) == m.sample(5, 1)
    assert m.variant == "vary_alpha"
    assert mixorder.Baseline.power_burr(1, 1).survival(1.0) == pytest.approx(0.5)


def test_errors_map_to_exceptions():
    with pytest.raises(mixorder.ParameterError):
        mixorder.Baseline.exponential(0)
    with pytest.raises(mixorder.MixorderError):
        mixorder.MixtureModel.vary_alpha(mixorder.Baseline.exponential(1), 1, [0.5, 0.4], [1, 1])
    with pytest.raises(mixorder.PreconditionError):
        mixorder.h_hr((0.4, 0.6), (0.3, 0.3), 0.4, mixorder.Baseline.exponential(1), 1.0)
    with pytest.raises(mixorder.FormatError):
        mixorder.check_order({"baseline": {}}, "st")


def test_h_functions():
    b = mixorder.Baseline.exponential(0.2)
    assert mixorder.h_pa((0.6, 0.4), (0.3, 0.4), 0.1, b, 1.0) < 0
    assert mixorder.h_plambda((0.5, 0.5), (2, 2), 0.3, b, 1.0) == 0


def test_scenarios_round_trip(scenarios):
    for k in range(1, 8):
        doc = mixorder.load_scenario(scenarios / f"example{k}.json")
        assert mixorder.normalize_scenario(doc) == doc


def test_checks(scenarios, schema):
    doc = mixorder.load_scenario(scenarios / "example1.json")
    verdict = mixorder.check_order(doc, "st")
    assert verdict["relation"] == "<="
    report = mixorder.check_theorem("T1i", doc)
    jsonschema.validate(report, {"$defs": schema["$defs"], "$ref": "#/$defs/theorem_report"})
    assert report["consistent"]
    assert mixorder.verify_example(2)["conclusion"]["holds_leq"]


def test_search():
    out = mixorder.search("T1i", 50, 42)
    assert out["findings"] == []
    assert out["accepted"] + out["skipped"] == 50
    loose = mixorder.search("T5", 20, 42, drop_balance=True)
    assert loose["findings"]
    json.dumps(loose)
