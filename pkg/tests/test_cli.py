import json
import subprocess
import sys

import pytest

from shufflealg.cli import main


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_stat(capsys):
    assert run(["stat", "udr", "871542"], capsys)[:2] == (0, "4\n")
    assert run(["stat", "Des", "21479536"], capsys)[:2] == (0, "{1,5,6}\n")
    assert run(["stat", "des", "1"], capsys)[:2] == (0, "0\n")
    assert run(["stat", "(pk,des)", "10,2,3"], capsys)[:2] == (0, "(0,1)\n")
    assert run(["stat", "des", "1x"], capsys)[0] == 2
    assert run(["stat", "nope", "12"], capsys)[0] == 2


def test_shuffle(capsys):
    code, out, _ = run(["shuffle", "53", "16"], capsys)
    assert code == 0 and sorted(out.split()) == sorted("5316 5136 5163 1653 1536 1563".split())
    code, out, _ = run(["shuffle", "21", "3", "--stat", "maj"], capsys)
    assert out.splitlines()[-1] == "{1,2,3}"
    assert run(["shuffle", "", "12"], capsys)[1] == "12\n"
    assert run(["shuffle", "12", "23"], capsys)[0] == 2


def test_check(capsys):
    code, out, _ = run(["check", "des", "--max", "8"], capsys)
    assert code == 0 and "Compatible" in out
    code, out, _ = run(["check", "br", "--max", "8"], capsys)
    assert code == 0 and "Counterexample" in out
    code, out, _ = run(["check", "pk", "--max", "2"], capsys)
    assert code == 0 and "Compatible" in out
    assert run(["check", "foo"], capsys)[0] == 2
    assert run(["check", "pk", "--max", "1"], capsys)[0] == 2


def test_check_mismatch_exit_code(capsys, monkeypatch):
    from shufflealg.compat import catalog
    # pretend br were claimed compatible
    monkeypatch.setattr(catalog, "claim", lambda st: "compatible")
    assert run(["check", "br", "--max", "4"], capsys)[0] == 1


def test_verify_and_json_determinism(capsys, tmp_path):
    out_file = tmp_path / "r.jsonl"
    code, a, _ = run(["verify", "stanley", "--max", "5", "--format", "json",
                      "--out", str(out_file)], capsys)
    assert code == 0
    code, b, _ = run(["verify", "stanley", "--max", "5", "--format", "json"], capsys)
    assert a == b == out_file.read_text()
    recs = [json.loads(x) for x in a.splitlines()]
    assert [r["check_id"] for r in recs] == sorted(r["check_id"] for r in recs)
    assert set(recs[0]) == {"suite", "check_id", "params", "status", "witness"}
    code, out, _ = run(["verify", "dims", "--max", "4"], capsys)
    assert code == 0 and "dims/Epk" in out and "computed 1 2 4 7" in out
    with pytest.raises(SystemExit) as e:
        main(["verify", "nosuch"])
    assert e.value.code == 2


def test_seed_env(capsys, monkeypatch):
    monkeypatch.setenv("SHUFFLEALG_SEED", "9")
    code, out, _ = run(["check", "pk", "--max", "3", "--format", "json"], capsys)
    assert json.loads(out)["params"]["seed"] == 9
    code, out, _ = run(["check", "pk", "--max", "3", "--format", "json", "--seed", "4"], capsys)
    assert json.loads(out)["params"]["seed"] == 4


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "shufflealg", "stat", "br", "871542"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "3\n"
