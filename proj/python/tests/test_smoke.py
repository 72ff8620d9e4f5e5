"""End-to-end checks of the Python bindings against the shipped
definition file: verdicts, exact JSON reports, determinism, and error
mapping."""

import json
from pathlib import Path

import pytest

import trilie

DEFINITION = (Path(__file__).resolve().parents[2] / "data"
              / "dim4.def").read_text()


def test_operations_are_listed_with_usage():
    names = trilie.commands()
    assert "check-crossed" in names
    assert "cohomology" in names
    assert "verify-theorems" in names
    for name in names:
        assert trilie.usage(name)


def test_crossed_map_accepted():
    code, report = trilie.run("check-crossed", ["ad", "H"], DEFINITION)
    assert code == 0
    assert "valid: true" in report


def test_identity_map_rejected_with_exact_residual():
    code, report = trilie.run("check-crossed", ["ad", "id"], DEFINITION,
                              format="json")
    assert code == 1
    data = json.loads(report)
    violation = data["crossed"]["violations"][0]
    assert violation["at"] == [2, 3, 4]
    assert violation["residual"] == ["-3", "0", "0", "0"]


def test_cohomology_dimensions():
    code, report = trilie.run("cohomology", ["ad", "H"], DEFINITION,
                              format="json")
    assert code == 0
    table = json.loads(report)["table"]
    dims = [(row["space"], row["cocycles"], row["coboundaries"],
             row["cohomology"]) for row in table]
    assert dims == [(6, 3, 0, 3), (16, 12, 3, 9), (16, 14, 4, 10)]


def test_reports_are_deterministic():
    first = trilie.run("verify-theorems", [], seed=7, trials=2,
                       format="json")
    second = trilie.run("verify-theorems", [], seed=7, trials=2,
                        format="json")
    assert first == second
    assert first[0] == 0


def test_canonicalize_is_a_fixpoint():
    canonical = trilie.canonicalize(DEFINITION)
    assert trilie.canonicalize(canonical) == canonical
    assert "algebra g" in canonical


def test_parse_error_maps_to_value_error():
    with pytest.raises(ValueError, match="line 3: BadRational"):
        trilie.canonicalize("algebra g\ndim 3\nbracket 1 2 3 = x*e1\nend\n")


def test_usage_error_exit_code():
    code, report = trilie.run("check-crossed", ["ad"], DEFINITION,
                              format="json")
    assert code == 2
    assert json.loads(report)["error"]["kind"] == "Usage"
