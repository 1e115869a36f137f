"""Suite orchestration: determinism, corruption detection, CLI contract."""

import json

import pytest

from sepmonad.cli import main
from sepmonad.suite import (
    CHECK_IDS,
    CORRUPTIONS,
    ConfigError,
    SuiteConfig,
    mutation_smoke,
    run_matrix,
    run_suite,
)


def _strip_ms(report_dict):
    return {
        "version": report_dict["version"],
        "env": report_dict["env"],
        "checks": [
            {k: v for k, v in c.items() if k != "ms"} for c in report_dict["checks"]
        ],
    }


def small_cfg(**kw):
    base = dict(group="s3", field="q", seed=0, family_size=3)
    base.update(kw)
    return SuiteConfig(**base)


def test_all_checks_pass_small_family():
    report = run_suite(small_cfg())
    assert report.passed
    assert [c.id for c in report.checks] == list(CHECK_IDS)
    assert all(c.status == "pass" for c in report.checks)


def test_reports_are_deterministic():
    a = run_suite(small_cfg(field="fp:3", seed=11))
    b = run_suite(small_cfg(field="fp:3", seed=11))
    assert _strip_ms(a.to_dict()) == _strip_ms(b.to_dict())
    assert a.to_text().splitlines()[0] == b.to_text().splitlines()[0]


def test_different_seeds_change_witness_data():
    a = run_suite(small_cfg(checks=("rep_hom_sanity",), seed=1))
    b = run_suite(small_cfg(checks=("rep_hom_sanity",), seed=2))
    assert a.passed and b.passed
    assert a.to_dict()["env"]["seed"] != b.to_dict()["env"]["seed"]


def test_check_subset_runs_only_requested():
    report = run_suite(small_cfg(checks=("ring_axioms", "group_axioms")))
    assert [c.id for c in report.checks] == ["group_axioms", "ring_axioms"]


def test_env_block_describes_run():
    report = run_suite(small_cfg(field="fp:5"))
    env = report.to_dict()["env"]
    assert env["group"] == "s3"
    assert env["field"] == "fp:5"
    assert env["index"] == 3
    assert env["group_order"] == 6
    assert env["subgroup_order"] == 2
    assert env["backend"] in ("pure", "speed")


def test_json_schema_fields():
    report = run_suite(small_cfg(checks=("ring_axioms",)))
    data = json.loads(report.to_json())
    assert data["version"] == 1
    assert set(data) == {"version", "env", "checks"}
    for c in data["checks"]:
        assert set(c) == {"id", "status", "witness", "ms"}
        assert c["status"] in ("pass", "fail")


@pytest.mark.parametrize("corruption", CORRUPTIONS)
def test_mutation_smoke_detects_each_corruption(corruption):
    report = mutation_smoke(small_cfg(), corruption)
    failed = [c for c in report.checks if c.status != "pass"]
    assert failed, f"corruption {corruption} slipped through"
    witness = failed[0].witness
    assert witness is not None
    assert witness["kind"] and witness["context"]


def test_unknown_group_is_config_error():
    with pytest.raises(ConfigError):
        run_suite(SuiteConfig(group="monster", field="q"))


def test_unknown_check_is_config_error():
    with pytest.raises(ConfigError):
        run_suite(small_cfg(checks=("not_a_check",)))


def test_bad_field_is_config_error():
    with pytest.raises(ConfigError):
        run_suite(small_cfg(field="fp:9"))


def test_bad_family_size_is_config_error():
    with pytest.raises(ConfigError):
        run_suite(small_cfg(family_size=0))


def test_subgroup_override():
    report = run_suite(
        SuiteConfig(group="s3", subgroup=(2,), field="q", seed=0, family_size=3,
                    checks=("group_axioms", "ring_axioms"))
    )
    assert report.passed
    assert report.to_dict()["env"]["index"] == 2


def test_run_matrix_serial_and_shape():
    rows = run_matrix(
        [("s3", None), ("c2", None)], ("q", "fp:2"), seed=0, family_size=2, workers=1
    )
    assert len(rows) == 4
    for row in rows:
        assert row["passed"] is True
        assert row["failed"] == []
        assert set(row) >= {"group", "field", "passed", "failed", "seconds"}


def test_cli_pass_exit_code(capsys):
    code = main(["--group", "s3", "--family-size", "2", "--checks", "ring_axioms"])
    out = capsys.readouterr().out
    assert code == 0
    assert "result: PASS" in out
    assert "[PASS] ring_axioms" in out


def test_cli_json_report(capsys):
    code = main([
        "--group", "c2", "--family-size", "2", "--checks", "ring_axioms",
        "--report", "json",
    ])
    data = json.loads(capsys.readouterr().out)
    assert code == 0
    assert data["checks"][0]["id"] == "ring_axioms"


def test_cli_config_error_exit_code(capsys):
    code = main(["--group", "nope"])
    err = capsys.readouterr().err
    assert code == 2
    assert "configuration error" in err


def test_cli_bad_subgroup_text(capsys):
    code = main(["--group", "s3", "--subgroup", "1,x"])
    assert code == 2


def test_cli_mutation_smoke(capsys):
    code = main(["--group", "s3", "--family-size", "2", "--mutation-smoke"])
    out = capsys.readouterr().out
    assert code == 0
    assert "mutation smoke: PASS" in out
    for corruption in CORRUPTIONS:
        assert corruption in out


def test_cli_file_group(tmp_path, capsys):
    path = tmp_path / "c2.json"
    path.write_text(json.dumps({"permutations": [[1, 0]]}))
    code = main([
        "--group", str(path), "--subgroup", "", "--family-size", "2",
        "--checks", "group_axioms,ring_axioms",
    ])
    assert code == 0
    env = run_suite(
        SuiteConfig(group=str(path), subgroup=(), field="q", family_size=2,
                    checks=("group_axioms",))
    ).to_dict()["env"]
    assert env["index"] == 2
