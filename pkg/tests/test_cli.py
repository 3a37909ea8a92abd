import csv
import io
import json

import pytest

from liecoh.cli import RunConfig, UsageError, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_json(capsys):
    code, out, _ = run(capsys, "compute", "--type", "A", "--rank", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["total_dim"] == 8 and data["group"] == "u1"


def test_compute_is_deterministic_across_threads(capsys, monkeypatch):
    _, a, _ = run(capsys, "compute", "--type", "D", "--rank", "5", "--format", "json", "--threads", "1")
    monkeypatch.setenv("LIECOH_THREADS", "3")
    _, b, _ = run(capsys, "compute", "--type", "D", "--rank", "5", "--format", "json")
    assert a == b


def test_compute_b1_and_module(capsys):
    code, out, _ = run(capsys, "compute", "--type", "A", "--rank", "3", "--group", "b1", "--lambda", "0,0,0",
                       "--format", "json")
    assert code == 0 and json.loads(out)["total_dim"] == 8
    code, out, _ = run(capsys, "compute", "--type", "G", "--rank", "2", "--group", "u", "--degree", "1",
                       "--module", "N")
    assert code == 0 and "total dimension 4" in out


def test_rootsum_csv(capsys):
    code, out, _ = run(capsys, "rootsum", "--type", "A", "--rank", "5", "--variant", "plain-general",
                       "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and rows
    # alpha_1 + (alpha_1 + alpha_2 + alpha_3)? no: alpha_2 + (alpha_1 + alpha_2 + alpha_3)
    assert any(r["alpha"] == "0 1 0 0 0" and r["beta"] == "1 1 1 0 0" for r in rows)


def test_verify_exit_codes(capsys, tmp_path):
    out_file = tmp_path / "a3.json"
    code, _, _ = run(capsys, "verify", "--type", "A", "--rank", "3", "--format", "json", "--out", str(out_file))
    assert code == 0 and json.loads(out_file.read_text(encoding="utf-8"))["ok"]
    code, out, _ = run(capsys, "verify", "--type", "B", "--rank", "3")
    assert code == 1 and "MISMATCH" in out


@pytest.mark.parametrize("argv,flag", [
    (["compute", "--type", "Q", "--rank", "2"], "--type"),
    (["compute", "--type", "A", "--rank", "2", "--lambda", "1,0"], "--lambda"),
    (["compute", "--type", "A", "--rank", "2", "--prime", "4"], "--prime"),
    (["compute", "--type", "A", "--rank", "2", "--group", "u1", "--prime", "3"], "--prime"),
    (["compute", "--type", "A", "--rank", "2", "--format", "csv"], "--format"),
    (["compute", "--type", "A", "--rank", "2", "--group", "b1", "--lambda", "1,x"], "--lambda"),
    (["compute", "--type", "A", "--rank", "2", "--group", "u", "--degree", "1", "--module", "N"], "--module"),
    (["rootsum", "--type", "A"], "--rank"),
])
def test_usage_errors(capsys, argv, flag):
    code, _, err = run(capsys, *argv)
    assert code == 2 and flag in err


def test_argparse_errors_exit_two(capsys):
    assert main(["frobnicate"]) == 2
    assert main(["rootsum", "--type", "A", "--rank", "2", "--variant", "nope"]) == 2


def test_tables_and_dump(capsys):
    code, out, _ = run(capsys, "tables", "--type", "G", "--rank", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and {t["table"] for t in data["tables"]} >= {"h2_u1", "h2_b1"}
    code, out, _ = run(capsys, "dump", "--type", "G", "--rank", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["positive_roots"]) == 6 and data["structure_constants"]


def test_runconfig_validation():
    with pytest.raises(UsageError):
        RunConfig("compute").validate()
    with pytest.raises(UsageError):
        RunConfig("rootsum", kind="A", rank=3, all_systems=True).validate()
    RunConfig("verify", all_systems=True, max_rank=3).validate()
