import json
import logging
import os
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from hyperlab import cli
from hyperlab.cache import ReportCache, cache_key


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("HYPERLAB_CACHE", str(tmp_path / "cache"))
    return tmp_path / "cache"


@pytest.fixture(scope="module")
def schema():
    text = resources.files("hyperlab").joinpath("schemas/report.schema.json").read_text()
    return json.loads(text)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_axioms_passes(capsys, schema):
    code, out, _ = run(capsys, "check-axioms", "q=3", "n=1", "--json")
    report = json.loads(out)
    jsonschema.validate(report, schema)
    assert code == 0 and report["status"] == "pass"
    assert report["result"]["hypergroup"]["results"]["CH4"] is True


def test_krasner_certifies(capsys, schema):
    code, out, _ = run(capsys, "krasner", "p=5", "f=[−5,0,1]", "g=[−30,0,1]", "--json")
    report = json.loads(out)
    jsonschema.validate(report, schema)
    assert code == 0
    assert report["result"]["verdict"] == "certified-isomorphic"
    assert report["task"]["params"]["f"] == [-5, 0, 1]


def test_krasner_inconclusive_exit_code(capsys):
    code, out, _ = run(capsys, "krasner", "p=5", "f=[-5,0,1]", "g=[-2,0,1]", "--json")
    assert code == 3 and json.loads(out)["status"] == "inconclusive"


def test_excluded_field_is_an_error(capsys, schema):
    code, out, _ = run(capsys, "check-axioms", "q=2", "n=1", "--json")
    report = json.loads(out)
    jsonschema.validate(report, schema)
    assert code == 2 and report["status"] == "error"
    assert "ExcludedFieldError" in report["result"]["error"]


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus", "q=3"],
        ["check-axioms", "q=3"],
        ["check-axioms", "q=3", "n=1", "colour=red"],
        ["check-axioms", "q=three", "n=1"],
        ["krasner", "p=5", "f=[1,", "g=[1]"],
        ["check-axioms", "q3", "n=1"],
        [],
    ],
)
def test_usage_errors_dump_schema(capsys, argv):
    code, _, err = run(capsys, *argv, "--json")
    assert code == 2
    assert "commands:" in err and "check-axioms q=<int> n=<int>" in err


def test_spec_file(tmp_path, capsys):
    spec = tmp_path / "task.txt"
    spec.write_text("# Krasner example\ncommand=krasner\np=5\nf=[−5,0,1]\ng=[−30,0,1]\n", encoding="utf-8")
    code, out, _ = run(capsys, "--spec", str(spec), "--json")
    assert code == 0
    direct = run(capsys, "krasner", "p=5", "f=[-5,0,1]", "g=[-30,0,1]", "--json")[1]
    assert out == direct


def test_spec_file_without_command(tmp_path, capsys):
    spec = tmp_path / "task.txt"
    spec.write_text("q=3\nn=1\n")
    assert run(capsys, "--spec", str(spec))[0] == 2


@pytest.mark.parametrize(
    "argv,status",
    [
        (["factor-hyperfield", "q=9", "t_order=2"], "pass"),
        (["factor-hyperfield", "q=9", "T=[2]"], "pass"),
        (["projective-hypergroup", "q=3", "n=1"], "pass"),
        (["desargues", "q=3", "n=2"], "pass"),
        (["collineations", "q=3", "n=1"], "pass"),
        (["incidence-group", "q=3", "n=1"], "pass"),
        (["incidence-group", "q=3", "n=2", "group_modulus=[1,2,0,1]"], "pass"),
        (["kdim", "q=3", "n=1"], "pass"),
        (["kdim", "q=4", "n=1", "source=factor"], "pass"),
        (["quad-extensions", "p=2"], "pass"),
        (["quad-extensions", "field=laurent", "q=5"], "pass"),
        (["quad-extensions", "field=laurent", "q=2"], "error"),
        (["fraction-check", "q=3", "cap=1"], "pass"),
        (["factor-hyperfield", "q=9"], "error"),
    ],
)
def test_every_command(capsys, schema, argv, status):
    code, out, _ = run(capsys, *argv, "--json")
    report = json.loads(out)
    jsonschema.validate(report, schema)
    assert report["status"] == status
    assert code == cli.EXIT_CODES[status]


def test_exit_codes_partition_statuses():
    assert sorted(cli.EXIT_CODES.values()) == [0, 1, 2, 3]
    assert set(cli.EXIT_CODES) == {"pass", "fail", "error", "inconclusive"}


def test_fail_status(monkeypatch):
    def fake(params, ctx):
        return cli.Report(ctx.task, "fail", {}, [{"axiom": "CH1", "witness": [2, 1, 0]}, {"axiom": "CH1", "witness": [0, 1, 2]}])

    monkeypatch.setitem(cli.COMMANDS, "desargues", fake)
    report = cli.run_task("desargues", {"q": "3", "n": "2"})
    assert report.exit_code == 1
    assert [w["witness"] for w in report.to_dict()["witnesses"]] == [[0, 1, 2], [2, 1, 0]]


def test_kdim_records_seed(capsys):
    out = run(capsys, "kdim", "q=3", "n=2", "--seed", "42", "--json")[1]
    report = json.loads(out)
    assert report["task"]["seed"] == 42 and report["result"]["seed"] == 42
    other = json.loads(run(capsys, "check-axioms", "q=3", "n=1", "--seed", "42", "--json")[1])
    assert "seed" not in other["task"]


def test_timings_are_opt_in(capsys, schema):
    plain = json.loads(run(capsys, "check-axioms", "q=3", "n=1", "--json", "--no-cache")[1])
    timed = json.loads(run(capsys, "check-axioms", "q=3", "n=1", "--json", "--no-cache", "--timings")[1])
    assert "timings" not in plain
    jsonschema.validate(timed, schema)
    assert timed["timings"]["wall_seconds"] >= 0


def test_output_is_deterministic(capsys):
    a = run(capsys, "desargues", "q=3", "n=2", "--json", "--no-cache")[1]
    b = run(capsys, "desargues", "q=3", "n=2", "--json", "--no-cache")[1]
    assert a == b
    pretty = run(capsys, "desargues", "q=3", "n=2", "--no-cache")[1]
    assert json.loads(pretty) == json.loads(a)


# -- cache ---------------------------------------------------------------------


def test_cache_hit_returns_identical_bytes(capsys, monkeypatch, isolated_cache):
    first = run(capsys, "collineations", "q=3", "n=2", "--json")[1]
    assert any(isolated_cache.rglob("*.json"))

    def boom(params, ctx):
        raise AssertionError("recomputed despite a cache entry")

    monkeypatch.setitem(cli.COMMANDS, "collineations", boom)
    second = run(capsys, "collineations", "q=3", "n=2", "--json")[1]
    assert first == second


def test_errors_are_not_cached(capsys, isolated_cache):
    run(capsys, "check-axioms", "q=2", "n=1", "--json")
    assert not any(isolated_cache.rglob("*.json"))


def test_version_bump_misses():
    task = {"command": "collineations", "params": {"n": 2, "q": 3}}
    assert cache_key(task, "0.1.0") != cache_key(task, "0.1.1")


def test_corrupted_entry_is_recomputed(capsys, isolated_cache, caplog):
    first = run(capsys, "desargues", "q=3", "n=2", "--json")[1]
    (entry,) = isolated_cache.rglob("*.json")
    entry.write_text("{not json")
    with caplog.at_level(logging.WARNING):
        again = run(capsys, "desargues", "q=3", "n=2", "--json")[1]
    assert again == first
    assert "corrupt" in caplog.text
    assert json.loads(entry.read_text())["report"]["status"] == "pass"


@pytest.mark.skipif(os.geteuid() == 0, reason="root ignores directory permissions")
def test_unwritable_cache_warns(tmp_path, capsys, monkeypatch, caplog):
    locked = tmp_path / "locked"
    locked.mkdir()
    locked.chmod(0o500)
    monkeypatch.setenv("HYPERLAB_CACHE", str(locked / "sub"))
    with caplog.at_level(logging.WARNING):
        code = run(capsys, "check-axioms", "q=3", "n=1", "--json")[0]
    assert code == 0 and "not writable" in caplog.text


def test_unwritable_cache_path_warns(tmp_path, caplog):
    blocker = tmp_path / "file"
    blocker.write_text("")
    cache = ReportCache(blocker / "sub")
    with caplog.at_level(logging.WARNING):
        assert cache.put("ab" * 32, {"x": 1}) is False
    assert "not writable" in caplog.text
    assert cache.get("ab" * 32) is None


def test_console_entry_point(isolated_cache):
    proc = subprocess.run(
        [sys.executable, "-m", "hyperlab", "check-axioms", "q=3", "n=1", "--json"],
        capture_output=True,
        text=True,
        env={**os.environ, "HYPERLAB_CACHE": str(isolated_cache)},
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["status"] == "pass"
