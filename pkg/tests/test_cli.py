import json
import subprocess
import sys

import pytest

from supero.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_build_gl21(capsys):
    code, out, _ = run_cli(capsys, "build", "gl", "2", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["dim"] == 9
    assert doc["schema"] == "superO/1"


def test_build_q2(capsys):
    code, out, _ = run_cli(capsys, "build", "q", "2")
    assert code == 0
    assert json.loads(out)["dim"] == 8


def test_build_empty_algebra_exit_2(capsys):
    code, _, err = run_cli(capsys, "build", "gl", "0", "0")
    assert code == 2
    assert "m + n >= 1" in err


def test_build_unknown_family_exit_2(capsys):
    code, _, err = run_cli(capsys, "build", "weirdo", "1")
    assert code == 2


def test_coh_gl11_g0_trivial(capsys):
    code, out, _ = run_cli(
        capsys, "coh", "gl", "1", "1", "--sub", "g0", "--mod", "trivial", "-N", "6",
        "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    dims = [r["dimH_even"] + r["dimH_odd"] for r in doc["rows"]]
    assert dims == [1, 0, 1, 0, 1, 0, 1]
    assert doc["all_differentials_zero"] is True


def test_coh_sl2_borel(capsys):
    code, out, _ = run_cli(
        capsys, "coh", "sl", "2", "0", "--sub", "borel", "--mod", "trivial", "-N", "3",
        "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    dims = [r["dimH_even"] + r["dimH_odd"] for r in doc["rows"]]
    assert dims == [1, 0, 0, 0]


def test_coh_full_subalgebra(capsys):
    code, out, _ = run_cli(
        capsys, "coh", "gl", "1", "1", "--sub", "full", "-N", "2", "--format", "json"
    )
    assert code == 0
    dims = [r["dimH_even"] + r["dimH_odd"] for r in json.loads(out)["rows"]]
    assert dims == [1, 0, 0]


def test_coh_table_format(capsys):
    code, out, _ = run_cli(capsys, "coh", "gl", "1", "1", "-N", "2")
    assert code == 0
    assert "dimH_even" in out
    assert "# H dims: 1,0,1" in out


def test_coh_levi_requires_H(capsys):
    code, _, err = run_cli(capsys, "coh", "gl", "1", "1", "--sub", "levi", "-N", "2")
    assert code == 2


def test_coh_levi_with_H(capsys):
    code, out, _ = run_cli(
        capsys, "coh", "gl", "1", "1", "--sub", "levi", "--H", "1,0", "-N", "2",
        "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["subalgebra_spec"] == "levi"


def test_coh_module_expression(capsys):
    code, out, _ = run_cli(
        capsys, "coh", "gl", "1", "1", "--sub", "g0",
        "--mod", "dual(natural)*natural", "-N", "0", "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["rows"][0]["dimH_even"] + doc["rows"][0]["dimH_odd"] == 1


def test_coh_default_N(capsys):
    code, out, _ = run_cli(capsys, "coh", "gl", "1", "1", "--format", "json")
    assert code == 0
    assert json.loads(out)["N"] == 2  # odd dim 2 + even quotient 0


def test_coh_span_file(tmp_path, capsys):
    # span of the even part of gl(1|1) given as a raw file
    vectors = [[[1, 1], [0, 1], [0, 1], [0, 1]], [[0, 1], [1, 1], [0, 1], [0, 1]]]
    path = tmp_path / "span.json"
    path.write_text(json.dumps({"vectors": vectors, "label": "diag"}))
    code, out, _ = run_cli(
        capsys, "coh", "gl", "1", "1", "--sub", f"span:{path}", "-N", "2",
        "--format", "json",
    )
    assert code == 0
    dims = [r["dimH_even"] + r["dimH_odd"] for r in json.loads(out)["rows"]]
    assert dims == [1, 0, 1]


def test_coh_span_file_missing_exit_2(capsys):
    code, _, err = run_cli(
        capsys, "coh", "gl", "1", "1", "--sub", "span:/no/such/file.json", "-N", "1"
    )
    assert code == 2


def test_verify_unknown_suite_exit_2(capsys):
    code, _, err = run_cli(capsys, "verify", "nonsense")
    assert code == 2
    assert "available" in err


def test_verify_jacobi_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "jacobi", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["all_pass"] is True
    assert doc["suite"] == "jacobi"


def test_verify_table_format(capsys):
    code, out, _ = run_cli(capsys, "verify", "invariants")
    assert code == 0
    assert "PASS" in out
    assert "# all_pass: True" in out


def test_verify_json_deterministic(capsys):
    _, out1, _ = run_cli(capsys, "verify", "appendix", "--format", "json")
    _, out2, _ = run_cli(capsys, "verify", "appendix", "--format", "json")
    assert out1 == out2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "alg.json"
    code, out, _ = run_cli(capsys, "build", "q", "2", "--out", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["dim"] == 8


def test_threads_env_var(capsys, monkeypatch):
    monkeypatch.setenv("SUPERO_THREADS", "2")
    code, out, _ = run_cli(capsys, "verify", "invariants", "--format", "json")
    assert code == 0
    monkeypatch.setenv("SUPERO_THREADS", "zzz")
    code, _, err = run_cli(capsys, "verify", "invariants")
    assert code == 2


def test_console_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "supero.cli", "build", "gl", "1", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["dim"] == 4
