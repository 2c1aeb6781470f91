import json
import subprocess
import sys
from pathlib import Path

from cyclocong.cli import run

DATA = Path(__file__).parent / "data"


def test_table1(capsys):
    assert run(["table1"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[1].split() == ["odd", "2"]
    rows = dict(line.split() for line in out[2:])
    assert rows["12"] == "65520" and rows["20"] == "13200"


def test_derivs(capsys):
    assert run(["derivs", "5"]) == 0
    out = capsys.readouterr().out
    assert "b = 5,10,10,5,1" in out
    assert "Phi_5^(3)(1) = 30" in out


def test_phi(capsys):
    assert run(["phi", "6"]) == 0
    assert capsys.readouterr().out.strip() == "x^2 - x + 1"


def test_usage_errors_exit_2(capsys):
    assert run(["nonsense"]) == 2
    assert run([]) == 2
    assert run(["verify", "theorem3", "--n", "1..5"]) == 2
    assert run(["verify", "theorem3", "--n", "9..3"]) == 2


def test_theorem3_pass_and_report(tmp_path, capsys):
    out = tmp_path / "r.jsonl"
    assert run(["verify", "theorem3", "--n", "2..40", "--out", str(out)]) == 0
    recs = [json.loads(l) for l in out.read_text().splitlines()]
    assert recs and all(r["verdict"] == "pass" for r in recs)


def test_jobs_do_not_change_output(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert run(["verify", "theorem3", "--n", "2..60", "--out", str(a)]) == 0
    assert run(["verify", "theorem3", "--n", "2..60", "--jobs", "2", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_failing_check_exits_1(capsys):
    # the top-order prime derivative is not divisible by p
    assert run(["verify", "identities", "--n", "2..10", "--p-max", "5"]) == 1
    assert "FAIL prime_deriv" in capsys.readouterr().out


def test_conjecture(capsys):
    assert run(["symbolic", "conjecture", "--k-max", "3"]) == 0
    out = capsys.readouterr().out
    for k in (1, 2, 3):
        assert f"k={k}: pass" in out


def test_golden(capsys, tmp_path):
    assert run(["symbolic", "table", "--order", "8", "--golden", str(DATA / "ratio_table_order8.txt")]) == 0
    bad = tmp_path / "bad.txt"
    bad.write_text("R[0] = 2\n")
    assert run(["symbolic", "table", "--order", "8", "--golden", str(bad)]) == 1


def test_selfrecip_seed_determinism(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["selfrecip", "--trials", "20", "--seed", "11", "--format", "csv"]
    assert run(args + ["--out", str(a)]) == 0
    assert run(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_lehmer_small(capsys):
    assert run(["lehmer", "--n-max", "12"]) == 0
    assert "derivative_ratio=110" in capsys.readouterr().out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cyclocong", "table1"], capture_output=True, text=True)
    assert res.returncode == 0
    assert "65520" in res.stdout
