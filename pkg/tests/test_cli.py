import json
import subprocess
import sys


def run_cli(*args, env_extra=None):
    import os

    env = dict(os.environ)
    env.pop("EPW_SEED", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "epwcalc", *args],
        capture_output=True,
        text=True,
        env=env,
    )


def test_passing_suite_exits_zero_and_emits_schema():
    res = run_cli("run", "bbf", "--seed", "3", "--trials", "5")
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    assert set(doc) == {"suite", "seed", "prime", "checks", "ms"}
    assert doc["suite"] == "bbf" and doc["seed"] == 3 and doc["prime"] == 10007
    assert doc["ms"] == 0  # deterministic by default
    for c in doc["checks"]:
        assert {"id", "anchor", "status", "expected", "got"} <= set(c)
        assert c["status"] in {"pass", "fail", "skip"}
    assert all(c["status"] == "pass" for c in doc["checks"])


def test_schubert_suite_reports_the_constant_discrepancy():
    res = run_cli("run", "schubert", "--seed", "3", "--trials", "5")
    assert res.returncode == 1
    doc = json.loads(res.stdout)
    by_id = {c["id"]: c for c in doc["checks"]}
    assert by_id["sym6_top_chern_oracle"]["status"] == "pass"
    assert by_id["sym6_top_chern_stated_constant"]["status"] == "fail"
    assert "57888" in by_id["sym6_top_chern_stated_constant"]["expected"]
    assert "60480" in by_id["sym6_top_chern_stated_constant"]["got"]


def test_chow_suite_has_the_headline_check():
    res = run_cli("run", "chow", "--seed", "0", "--trials", "5")
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    by_id = {c["id"]: c for c in doc["checks"]}
    assert by_id["c2h_equals_5h3"]["status"] == "pass"


def test_usage_errors_exit_two():
    assert run_cli("run", "nosuchsuite").returncode == 2
    assert run_cli("run", "bbf", "--prime", "10").returncode == 2
    assert run_cli("run", "bbf", "--prime", "13").returncode == 2
    assert run_cli("run", "bbf", "--trials", "0").returncode == 2


def test_seed_resolution_env_and_flag():
    res = run_cli("run", "bbf", "--trials", "2", env_extra={"EPW_SEED": "42"})
    assert json.loads(res.stdout)["seed"] == 42
    res = run_cli("run", "bbf", "--trials", "2", "--seed", "9", env_extra={"EPW_SEED": "42"})
    assert json.loads(res.stdout)["seed"] == 9


def test_single_suite_rerun_is_byte_identical():
    a = run_cli("run", "exterior", "--seed", "5", "--trials", "10")
    b = run_cli("run", "exterior", "--seed", "5", "--trials", "10")
    assert a.stdout == b.stdout
