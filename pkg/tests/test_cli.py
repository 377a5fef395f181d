import json
import subprocess
import sys

import pytest

from superchar.cli import main


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ds_example(capsys):
    code, out, _ = run(capsys, "ds", "--algebra", "gl(2|1)", "--roots", "e2-d1", "--input", "(1-y1/x1)*(1-y1/x2)")
    assert (code, out) == (0, "0\n")


def test_kac_example(capsys):
    code, out, _ = run(capsys, "kac", "--algebra", "gl(1|1)", "--lambda", "1/2|-1/2")
    assert (code, out) == (0, "x1^1/2*y1^-1/2 - x1^-1/2*y1^1/2\n")


def test_member_example(capsys):
    code, out, _ = run(capsys, "member", "--algebra", "gl(1|1)", "--input", "x1+y1")
    assert code == 1 and "t-dependent" in out
    code, out, _ = run(capsys, "member", "--algebra", "gl(1|1)", "--input", "x1+y1", "--format", "json")
    doc = json.loads(out)
    assert code == 1 and doc["ok"] is False and doc["witness"].startswith("t-dependent")
    assert doc["result"]["w_invariant"] is True


def test_json_envelope_and_round_trip(capsys):
    code, out, _ = run(capsys, "kac", "-a", "gl(2|1)", "-l", "1/2,1/2|-1", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and set(doc) == {"ok", "result", "witness"}
    js = json.dumps(doc["result"])
    code, out2, _ = run(capsys, "ds", "-a", "gl(2|1)", "-r", "e2-d1", "-i", js)
    assert (code, out2) == (0, "0\n")
    code, back, _ = run(capsys, "decompose", "-a", "gl(2|1)", "-i", js)
    assert back == "1 * k(1/2,1/2|-1)\n"


def test_stdin_and_file(capsys, monkeypatch, tmp_path):
    code, out, _ = run(capsys, "member", "-a", "gl(2|1)", stdin="y1 - x1 - x2", monkeypatch=monkeypatch)
    assert (code, out) == (0, "member\n")
    p = tmp_path / "f.txt"
    p.write_text("y1 - x1 - x2")
    code, out, _ = run(capsys, "ds", "-a", "gl(2|1)", "-r", "e2-d1", "--file", str(p))
    assert (code, out) == (0, "-x1\n")
    code, out, _ = run(capsys, "ds", "-a", "gl(2|1)", "-r", "e2-d1", "--input", str(p))
    assert (code, out) == (0, "-x1\n")


@pytest.mark.parametrize("argv", [
    ["ds", "-a", "gl(2|1)", "-r", "e2-d1", "-i", "x1+"],
    ["kac", "-a", "gl(9)", "-l", "0"],
    ["kac", "-a", "gl(2|1)", "-l", "0,1|0"],
    ["ds", "-a", "gl(2|1)", "-r", "e1-d1;e2-d1", "-i", "1"],
    ["schkac", "-a", "osp(3|2)", "-l", "0|0"],
    ["verify", "kernel", "-a", "G(3)"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_math_failures_exit_1(capsys):
    code, out, _ = run(capsys, "decompose", "-a", "gl(2|1)", "-i", "y1 - x1 - x2")
    assert code == 1 and "not divisible" in out
    code, out, _ = run(capsys, "member", "-a", "gl(1|1)", "--group", "-i", "x1^1/2*y1^-1/2 - x1^-1/2*y1^1/2")
    assert code == 1


def test_gens_and_info(capsys):
    code, out, _ = run(capsys, "gens", "-a", "osp(1|2)", "-K", "1")
    assert (code, out) == (0, "h1 = -y1 + 1 - y1^-1\n")
    code, out, _ = run(capsys, "info", "-a", "osp(6|4)", "--format", "json")
    doc = json.loads(out)["result"]
    assert doc["defect"] == 2 and doc["weyl_order"] == 192


def test_verify_is_deterministic_and_echoes_seed(capsys):
    argv = ["verify", "homomorphism", "-a", "gl(2|1)", "--seed", "17", "--count", "5", "--format", "json"]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0 and out1 == out2
    assert json.loads(out1)["result"]["seed"] == 17
    for prop, name in [("transfer", "osp(5|4)"), ("exceptional", "G(3)"), ("kernel", "osp(3|2)")]:
        code, out, _ = run(capsys, "verify", prop, "-a", name, "--count", "3")
        assert code == 0, out


def test_console_script_entry_point():
    res = subprocess.run([sys.executable, "-m", "superchar", "kac", "-a", "gl(1|1)", "-l", "1/2|-1/2"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout == "x1^1/2*y1^-1/2 - x1^-1/2*y1^1/2\n"
