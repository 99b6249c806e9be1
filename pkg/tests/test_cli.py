import json
import subprocess
import sys

import pytest

from homoggb.cli import JobConfig, UsageError, main, run

COMM_EXAMPLE = "y^3 - x - y\ny^2 + 1\n"
FREE_EXAMPLE = "Y*Y*Y - X*Y - X - Y\nY^2 - X + 3\n"


def _run(tmp_path, capsys, text, *args):
    src = tmp_path / "system.poly"
    src.write_text(text)
    code = main([*args, str(src)])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gb_golden(tmp_path, capsys):
    code, out, _ = _run(tmp_path, capsys, COMM_EXAMPLE, "gb", "--ring", "comm", "--var-order", "x,y", "--reduced")
    assert code == 0
    assert out == "y^2 + 1\nx + 2*y\n"


def test_var_order_changes_basis(tmp_path, capsys):
    _, out, _ = _run(tmp_path, capsys, COMM_EXAMPLE, "gb", "--var-order", "y,x", "--reduced")
    assert out.splitlines()[-1].startswith("y")
    assert out != "y^2 + 1\nx + 2*y\n"


def test_check_gb_failure(tmp_path, capsys):
    code, out, _ = _run(tmp_path, capsys, "y^2 + 1\ny^3 - x - y\n", "check-gb")
    assert code == 1
    assert "#groebner: false" in out
    assert "#witness-pair: 0 1" in out
    assert "#remainder: x + 2*y" in out


def test_check_gb_success(tmp_path, capsys):
    code, out, _ = _run(tmp_path, capsys, "y^2 + 1\nx + 2*y\n", "check-gb")
    assert code == 0 and out == "#groebner: true\n"


def test_pipeline_central_text(tmp_path, capsys):
    code, out, _ = _run(tmp_path, capsys, COMM_EXAMPLE, "pipeline-central")
    assert code == 0
    assert out == (
        "# homogenized\ny^3 - t^2*x - t^2*y\ny^2 + t^2\n"
        "# step1\ny^2 + t^2\nt^2*x + 2*t^2*y\n"
        "# step2\ny^2 + 1\nx + 2*y\n"
        "# step3\ny^2 + t^2\nx + 2*y\n"
        "#unit-ideal: false\n#strict-inclusion-witness: x + 2*y\n"
    )


def test_pipeline_free_json(tmp_path, capsys):
    code, out, _ = _run(tmp_path, capsys, FREE_EXAMPLE, "pipeline-free", "--max-degree", "8", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["step2"] == ["Y^2 + 4*Y + 3", "X + 4*Y"]
    assert data["step3"] == ["X*T - T*X", "Y^2 + 4*T*Y + 3*T^2", "Y*T - T*Y", "X + 4*Y"]
    assert data["truncated_at"] == 8
    assert data["trusted_degree"] == 8
    assert data["ring"]["kind"] == "free"
    assert data["ring_extended"]["homog_var"] == "T"


def test_homogenize_and_back(tmp_path, capsys):
    _, out, _ = _run(tmp_path, capsys, FREE_EXAMPLE, "homogenize", "--ring", "free", "--emit-commutators")
    assert out.splitlines() == [
        "Y^3 - T*X*Y - T^2*X - T^2*Y",
        "Y^2 - T*X + 3*T^2",
        "X*T - T*X",
        "Y*T - T*Y",
    ]
    _, back, _ = _run(tmp_path, capsys, out, "dehomogenize", "--ring", "free", "--vars", "X,Y")
    assert back.splitlines()[:2] == ["Y^3 - X*Y - X - Y", "Y^2 - X + 3"]


def test_central_homogenize_command(tmp_path, capsys):
    _, out, _ = _run(tmp_path, capsys, COMM_EXAMPLE, "homogenize")
    assert out == "y^3 - t^2*x - t^2*y\ny^2 + t^2\n"


def test_normal_monomials_command(tmp_path, capsys):
    _, out, _ = _run(tmp_path, capsys, "y^2 + 1\nx + 2*y\n", "normal-monomials", "--up-to", "2")
    assert out == "0: 1\n1: y\n2: \n"


def test_free_gb_needs_max_degree(tmp_path, capsys):
    code, _, err = _run(tmp_path, capsys, FREE_EXAMPLE, "gb", "--ring", "free")
    assert code == 2 and "--max-degree" in err


def test_free_gb_flags_truncation(tmp_path, capsys):
    code, out, _ = _run(tmp_path, capsys, FREE_EXAMPLE, "gb", "--ring", "free", "--max-degree", "6", "--reduced")
    assert code == 0
    assert out.startswith("Y^2 + 4*Y + 3\nX + 4*Y\n#complete:")
    assert "#truncated-at: 6" in out


def test_parse_error_exit_code(tmp_path, capsys):
    code, out, err = _run(tmp_path, capsys, "x + q\n", "gb", "--vars", "x,y")
    assert code == 2
    assert "unknown variable q at 1:5" in err
    assert out == ""


def test_bad_weights_is_usage_error(tmp_path, capsys):
    code, _, err = _run(tmp_path, capsys, COMM_EXAMPLE, "gb", "--vars", "x,y", "--weights", "1")
    assert code == 2
    code, _, err = _run(tmp_path, capsys, COMM_EXAMPLE, "gb", "--vars", "x,y", "--weights", "0,1")
    assert code == 2


def test_finite_field_option(tmp_path, capsys):
    _, out, _ = _run(tmp_path, capsys, "2*x + 3*y\n", "gb", "--field", "fp:5")
    assert out == "x + 4*y\n"


def test_jobconfig_validation():
    with pytest.raises(UsageError):
        run(JobConfig("gb", order="lex"), "x\n")
    with pytest.raises(UsageError):
        run(JobConfig("gb", vars=("x", "y"), var_order=("x", "z")), "x\n")


def test_module_entry_point(tmp_path):
    src = tmp_path / "s.poly"
    src.write_text(COMM_EXAMPLE)
    res = subprocess.run(
        [sys.executable, "-m", "homoggb", "gb", "--reduced", str(src)],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0
    assert res.stdout == "y^2 + 1\nx + 2*y\n"


def test_stdin_input():
    res = subprocess.run(
        [sys.executable, "-m", "homoggb", "check-gb"],
        input="y^2 + 1\ny^3 - x - y\n", capture_output=True, text=True, check=False,
    )
    assert res.returncode == 1
