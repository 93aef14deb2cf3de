import json

import pytest

from tyv.cli import main
from tyv.harness import (
    ConfigError,
    SuiteConfig,
    parse_mutation,
    run_roots,
    run_suite,
    strip_timing,
    write_report,
)
from tyv.report import ERROR, CheckReport, Recorder

SCHEMA_KEYS = ["tool", "version", "suite", "lie_type", "params", "normalization", "items"]
ITEM_KEYS = ["id", "anchor", "status", "millis", "detail"]


def _run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_empty_report(tmp_path):
    r = CheckReport("classical", "A1", {})
    path = tmp_path / "r.json"
    write_report(r, path)
    doc = json.loads(path.read_text())
    assert list(doc) == SCHEMA_KEYS
    assert doc["items"] == []
    assert r.exit_code == 0


def test_passing_item_schema(tmp_path):
    rec = Recorder()
    rec.run("x", "eq:x", lambda: (True, {}))
    r = CheckReport("classical", "A1", {}, rec.items)
    doc = json.loads(r.to_json())
    (item,) = doc["items"]
    assert list(item) == ITEM_KEYS
    assert item["status"] == "pass" and item["millis"] >= 0


def test_crashing_check_is_an_error():
    rec = Recorder()
    it = rec.run("boom", "eq:x", lambda: 1 / 0)
    assert it.status == ERROR and not it.passed
    assert "ZeroDivisionError" in it.detail["error"]


def test_cli_classical_passes(capsys):
    code, out, _ = _run_cli(["check", "classical", "--type", "A2", "--zdeg", "6"], capsys)
    assert code == 0
    assert "classical A2:" in out


def test_cli_serre_control(capsys, tmp_path):
    path = tmp_path / "c2.json"
    code, out, _ = _run_cli(["check", "classical", "--type", "C2", "--zdeg", "6", "--mutate", "tcfSerre2f:-5",
                             "--json", str(path)], capsys)
    assert code == 1
    assert "tcfSerre2f" in out
    doc = json.loads(path.read_text())
    failed = [it for it in doc["items"] if it["status"] != "pass"]
    assert [it["id"] for it in failed] == ["tcfSerre2f"]
    assert failed[0]["detail"]["residuals"][0]["residual"]["terms"] > 0
    assert doc["params"]["mutate"] == {"tcfSerre2f": "-5"}


def test_cli_embedding_control(capsys):
    code, out, _ = _run_cli(["check", "embedding", "--type", "A2", "--mutate", "hi1-embedding:0"], capsys)
    assert code == 1
    assert "FAIL  HBrel" in out


@pytest.mark.slow
def test_cli_rank1_default(capsys):
    code, _, _ = _run_cli(["check", "rank1", "--order", "8", "--maxidx", "10"], capsys)
    assert code == 0


@pytest.mark.parametrize("args", [
    ["check", "nonsense", "--type", "A2"],
    ["check", "classical"],
    ["check", "classical", "--type", "Q7"],
    ["check", "classical", "--type", "A2", "--mutate", "hi1-embedding:0"],
    ["check", "classical", "--type", "A2", "--mutate", "tcfSerre0f:3"],
    ["check", "classical", "--type", "A2", "--mutate", "tchbf"],
    ["check", "rank1", "--order", "2"],
    ["check", "rtt", "--jobs", "0"],
    ["roots", "--type", "B1"],
])
def test_usage_errors_exit_2(capsys, args):
    try:
        code = main(args)
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_unwritable_report_exits_2(capsys, tmp_path):
    code, _, err = _run_cli(["roots", "--type", "A1", "--json", str(tmp_path / "missing" / "r.json")], capsys)
    assert code == 2
    assert "cannot write" in err


def test_json_to_stdout(capsys):
    code, out, _ = _run_cli(["roots", "--type", "G2", "--json", "-"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["suite"] == "roots" and doc["lie_type"] == "G2"
    assert all(it["status"] == "pass" for it in doc["items"])
    assert all(it["anchor"] for it in doc["items"])


def test_parse_mutation():
    assert parse_mutation("tcfSerre2f:-5") == ("tcfSerre2f", -5)
    assert parse_mutation("hi1-embedding:1/2")[1] == pytest.approx(0.5)
    with pytest.raises(ConfigError):
        parse_mutation("tchbf:x")


def test_reports_are_deterministic():
    cfg = SuiteConfig("classical", "B2", zdeg=4)
    a = strip_timing(run_suite(cfg).to_dict())
    b = strip_timing(run_suite(cfg).to_dict())
    assert a == b


def test_parallel_run_matches_serial():
    serial = run_suite(SuiteConfig("embedding", "A2"))
    parallel = run_suite(SuiteConfig("embedding", "A2", jobs=3))
    assert strip_timing(serial.to_dict()) == strip_timing(parallel.to_dict())


def test_all_suite_prefixes_ids():
    r = run_suite(SuiteConfig("all", "A1", zdeg=3, order=5, maxidx=7))
    prefixes = {it.id.split("/")[0] for it in r.items}
    assert prefixes == {"classical", "embedding", "casimir", "rank1", "rtt"}
    assert r.exit_code == 0


def test_every_item_has_an_anchor():
    r = run_roots("C3")
    r.extend(run_suite(SuiteConfig("casimir", "C3")).items)
    assert all(it.anchor for it in r.items)
