# SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
import json

import jsonschema
import pytest
from deepdiff.diff import DeepDiff

import towerkit.tests.helpers as helpers
from towerkit.cli.main import EXIT_LIMIT, EXIT_OK, EXIT_USAGE, main
from towerkit.cli.report import SCHEMA_VERSION, flatten, report_schema


def test_analyze_q8():
    code, report = helpers.run_cli("analyze", "q8")
    assert code == EXIT_OK
    assert report["schema_version"] == SCHEMA_VERSION
    assert report["command"] == "analyze"
    assert report["input"] == ["q8"]
    res = report["result"]
    assert res["order"] == 8
    assert res["normal_subgroup_count"] == 6
    assert res["center_order"] == 2
    assert res["element_orders"] == {"1": 1, "2": 1, "4": 6}
    assert res["solvable"]


@pytest.mark.parametrize("source,order", [("abelian: 6", 6), ("pgl(3,2)", 168), ("u(3,3)", 27)])
def test_analyze_orders(source: str, order: int):
    code, report = helpers.run_cli("analyze", source)
    assert code == EXIT_OK
    assert report["result"]["order"] == order


def test_analyze_above_iso_limit():
    code, report = helpers.run_cli("analyze", "sym(6)")
    assert code == EXIT_OK
    res = report["result"]
    assert res["order"] == 720
    assert res["normal_subgroup_count"] is None
    assert "iso_limit" in res["limits_hit"]["normal_subgroup_count"]
    assert res["derived_series_orders"] == [720, 360]
    assert not res["solvable"]
    jsonschema.validate(report, report_schema("analyze"))

    _, report = helpers.run_cli("analyze", "--iso-limit", "1000", "sym(6)")
    assert report["result"]["normal_subgroup_count"] == 3
    assert "limits_hit" not in report["result"]


def test_analyze_abelian_invariants():
    _, report = helpers.run_cli("analyze", "direct(cyc(4), cyc(6))")
    assert report["result"]["invariant_factors"] == [2, 12]


def test_special():
    code, report = helpers.run_cli("special", "--verify", "d8")
    assert code == EXIT_OK
    res = report["result"]
    assert res["verdict"] == "special"
    assert res["length"] == 2
    assert res["verification"]["ok"]

    _, report = helpers.run_cli("special", "q8")
    assert report["result"]["verdict"] == "not_special"


def test_tower():
    code, report = helpers.run_cli("tower", "--verify", "sym(4)")
    assert code == EXIT_OK
    res = report["result"]
    assert res["verdict"] == "special"
    assert [s["wreath_order"] for s in res["steps"]] == [2, 18, 384]
    assert res["verification"]["ok"]


def test_tower_of_non_special_group():
    code, report = helpers.run_cli("tower", "q8")
    assert code == EXIT_OK
    assert report["result"]["verdict"] == "not_special"


def test_sylow():
    code, report = helpers.run_cli("sylow", "pgl(3,2)", "2")
    assert code == EXIT_OK
    res = report["result"]
    assert res["order"] == 8
    assert res["special"]
    assert res["group_order"] == 168


def test_linear():
    code, report = helpers.run_cli("linear", "3", "2", "7")
    assert code == EXIT_OK
    assert report["result"]["sylow_order"] == 7
    assert not report["result"]["defining_characteristic"]


def test_fc_and_isoclinic():
    code, report = helpers.run_cli("fc", "--verify", "2,2")
    assert code == EXIT_OK
    res = report["result"]
    assert res["literal"] == "fc(2,2)"
    assert res["order"] == 8
    assert res["derived_order"] == 2
    assert res["verification"]["ok"]

    code, report = helpers.run_cli("isoclinic", "--verify", "d8", "q8")
    assert code == EXIT_OK
    assert report["result"]["isoclinic"]
    assert report["result"]["verification"]["ok"]


def test_monomial():
    code, report = helpers.run_cli("monomial", "--verify")
    assert code == EXIT_OK
    res = report["result"]
    assert res["group_order"] == 8
    assert res["coordinates"] == 3
    assert res["faithful"]
    assert res["sign_diagonal"]
    assert res["type"]["multiset"] == {"0": 1, "2": 3, "3": 4}
    assert res["verification"]["ok"]


def test_catalog():
    code, report = helpers.run_cli("catalog")
    assert code == EXIT_OK
    names = [e["name"] for e in report["result"]["entries"]]
    assert names == sorted(names)
    assert {"q8", "d8", "sym", "wreath", "sylow_sym", "pgl"} <= set(names)


@pytest.mark.parametrize("argv,error", [
    (["analyze", "cyc("], "ParseError"),
    (["analyze", "foo(2)"], "ParseError"),
    (["fc", "2,x"], "ParseError"),
    (["linear", "2", "6", "2"], "ValueError"),
    (["untwist", "sym(4)"], "NotClassTwo"),
])
def test_usage_errors(argv: list[str], error: str):
    code, report = helpers.run_cli(*argv)
    assert code == EXIT_USAGE
    assert report["result"]["error"]["error"] == error


def test_parse_error_position():
    _, report = helpers.run_cli("analyze", "cyc(")
    assert report["result"]["error"]["position"] == 4


def test_limit_exit_code():
    code, report = helpers.run_cli("analyze", "--max-order", "10", "sym(4)")
    assert code == EXIT_LIMIT
    assert report["limits"]["max_order"] == 10
    assert report["result"]["error"]["limit_name"] == "max_order"


def test_reports_are_deterministic():
    _, first = helpers.run_cli("special", "sym(4)")
    _, second = helpers.run_cli("special", "sym(4)")
    assert "timing" in first
    diff = DeepDiff(helpers.payload(first), helpers.payload(second))
    assert not diff


# At least one invocation per command, both outcomes where a command has two.
SCHEMA_CASES = [
    ("analyze", "q8"),
    ("analyze", "direct(cyc(4), cyc(6))"),
    ("special", "--verify", "--shortest", "d8"),
    ("special", "q8"),
    ("tower", "--verify", "d8"),
    ("tower", "q8"),
    ("untwist", "--verify", "abelian: 2,4"),
    ("fc", "--verify", "2,2"),
    ("isoclinic", "--verify", "d8", "q8"),
    ("isoclinic", "cyc(4)", "d8"),
    ("sylow", "--verify", "sym(4)", "2"),
    ("monomial", "--verify"),
    ("linear", "2", "3", "2"),
    ("catalog",),
    ("analyze", "cyc("),
    ("analyze", "--max-order", "10", "sym(4)"),
    ("linear", "2", "6", "2"),
]


@pytest.mark.parametrize("argv", SCHEMA_CASES)
def test_reports_match_schema(argv: tuple[str, ...]):
    _, report = helpers.run_cli(*argv)
    jsonschema.validate(report, report_schema(argv[0]))


def test_schema_rejects_malformed_reports():
    _, report = helpers.run_cli("analyze", "q8")
    del report["result"]["order"]
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(report, report_schema("analyze"))

    _, report = helpers.run_cli("fc", "2,2")
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(report, report_schema("catalog"))

    _, report = helpers.run_cli("catalog")
    report["schema_version"] = SCHEMA_VERSION + 1
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(report, report_schema("catalog"))


def test_report_schema_lookup():
    schema = report_schema("tower")
    assert schema["properties"]["schema_version"]["const"] == SCHEMA_VERSION
    assert schema["properties"]["command"] == {"const": "tower"}
    assert "tower_step" in schema["$defs"]
    jsonschema.Draft202012Validator.check_schema(schema)
    for name in ("definitions", "report", "nope"):
        with pytest.raises(ValueError, match="No report schema"):
            report_schema(name)


def test_flatten():
    data = {"a": {"b": 1, "c": [1, 2]}, "d": None, "e": [{"x": 1}]}
    assert flatten(data) == {"a.b": "1", "a.c": "1, 2", "d": "-", "e": '[{"x":1}]'}


def test_main_json(capsys: pytest.CaptureFixture[str]):
    assert main(["analyze", "cyc(5)"]) == EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert out["result"]["order"] == 5


def test_main_text(capsys: pytest.CaptureFixture[str]):
    assert main(["special", "--text", "d8"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("towerkit special d8")
    assert "verdict" in out


def test_main_error(capsys: pytest.CaptureFixture[str]):
    assert main(["analyze", "cyc("]) == EXIT_USAGE
    captured = capsys.readouterr()
    assert captured.err.startswith("towerkit: Expected an argument at position 4")
    assert json.loads(captured.out)["result"]["error"]["error"] == "ParseError"


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
