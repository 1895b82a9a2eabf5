import json

import pytest
from pydantic import ValidationError

from minlag.verify import ResidualCheck, ResidualReport


def test_checks_pass_below_tolerance():
    assert ResidualCheck.evaluate("a", 1e-9, 1e-8).passed
    assert not ResidualCheck.evaluate("b", 1e-8, 1e-8).passed
    assert not ResidualCheck.evaluate("c", float("nan"), 1.0).passed
    assert not ResidualCheck.evaluate("d", float("inf"), 1.0).passed


def test_tolerance_must_be_positive():
    with pytest.raises(ValidationError):
        ResidualCheck(name="a", value=0.0, tol=0.0, passed=True)


def test_report_json_layout():
    report = ResidualReport(context={"grid": [9, 9]})
    report.add("flatness", 2e-6, 1e-4)
    report.add("broken", float("nan"), 1e-4)
    data = json.loads(report.to_json())
    assert data["pass"] is False
    assert data["checks"][0] == {"name": "flatness", "value": 2e-6, "tol": 1e-4, "pass": True}
    assert data["checks"][1]["value"] is None
    assert data["context"] == {"grid": [9, 9]}


def test_merge_prefixes_names():
    first = ResidualReport()
    first.add("x", 0.0, 1.0)
    second = ResidualReport(context={"kind": "smyth"})
    second.add("y", 2.0, 1.0)
    merged = first.merge(second, "lambda[0].")
    assert [check.name for check in merged.checks] == ["x", "lambda[0].y"]
    assert merged.failures() == ["lambda[0].y"]
    assert merged["x"].passed
    assert merged.context == {"kind": "smyth"}
    assert len(first.checks) == 1
    with pytest.raises(KeyError):
        merged["z"]


def test_empty_report_passes():
    assert ResidualReport().passed
