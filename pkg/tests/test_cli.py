from __future__ import annotations

import io
import subprocess
import sys
from importlib import resources

import pytest

from zerodiv.cli import EXIT_ERROR, EXIT_OK, EXIT_UNDETERMINED, run_command


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def machine(text: str) -> dict[str, str]:
    return dict(line.split(" = ", 1) for line in text.splitlines())


@pytest.mark.parametrize(
    "argv, code",
    [
        (("tame", "paper_example"), EXIT_OK),
        (("tame", "m2_real"), EXIT_OK),
        (("ideals", "zero_mult"), EXIT_ERROR),
        (("ideals", "m2_real"), EXIT_ERROR),
        (("zdiv", "m2_real"), EXIT_UNDETERMINED),
        (("zdiv", "paper_example"), EXIT_OK),
        (("inspect", "quaternions"), EXIT_OK),
        (("detform", "m2_real"), EXIT_OK),
        (("ideals", "lambda_algebra"), EXIT_OK),
        (("sample", "split_fff", "--count", "20", "--seed", "1"), EXIT_OK),
        (("sample", "m2_real"), EXIT_UNDETERMINED),
        (("tame",), EXIT_OK),
        (("catalog",), EXIT_OK),
        (("tame", "no_such_algebra"), EXIT_ERROR),
        (("frobnicate",), EXIT_ERROR),
    ],
)
def test_exit_codes(argv, code):
    assert run(*argv)[0] == code


def test_tame_paper_example_text():
    code, out, _ = run("tame", "paper_example")
    assert code == 0
    assert "plane spanned by" in out and "line spanned by" in out
    assert "right tame: true" in out


def test_machine_keys():
    _, out, _ = run("--format", "machine", "tame", "paper_example")
    kv = machine(out)
    assert kv["algebra.name"] == "paper_example"
    assert kv["axioms.associative"] == "true"
    assert kv["tame.verdict"] == "true"
    assert kv["open_question.splits"] == "yes"
    assert kv["factors[0].form"] == "a - 1/2*sqrt(2)*b + 1/2*sqrt(6)*g"
    assert kv["z.components[1].basis[0]"] == "(1, -1/2*sqrt(2), 1/2*sqrt(6))"
    assert "d.poly" in kv


def test_machine_flag_after_command():
    _, out, _ = run("tame", "m2_real", "--format", "machine")
    kv = machine(out)
    assert kv["tame.verdict"] == "false" and kv["open_question.splits"] == "no"


def test_quiet():
    code, out, _ = run("--quiet", "tame", "paper_example")
    assert code == 0 and out == ""


def test_error_goes_to_stderr():
    code, out, err = run("ideals", "zero_mult")
    assert code == 1 and out == "" and "AA = A" in err


def test_file_target(tmp_path):
    path = tmp_path / "tiny.alg"
    path.write_text("name tiny\nfield Q\ndim 2\nbasis u v\nu*u = u\nu*v = v\nv*u = v\n", encoding="utf-8")
    code, out, _ = run("--format", "machine", "zdiv", str(path))
    assert code == 0
    assert machine(out)["z.kind"] == "subspace_union"
    bad = tmp_path / "bad.alg"
    bad.write_text("field Q\ndim 1\nbasis e\ne*e = e\ne*e = 0\n", encoding="utf-8")
    code, _, err = run("inspect", str(bad))
    assert code == 1 and "line 5" in err


def test_shipped_file_through_cli():
    path = resources.files("zerodiv").joinpath("data/paper_example.alg")
    code, out, _ = run("--format", "machine", "detform", str(path))
    assert code == 0 and machine(out)["factors.residual"].startswith("a^2")


def test_open_question_table():
    code, out, _ = run("tame")
    assert code == 0
    assert "quaternions" in out and "open-question evidence" in out
    _, out, _ = run("--format", "machine", "tame")
    kv = machine(out)
    names = [v for k, v in kv.items() if k.endswith(".name")]
    assert "quaternions" in names and "m2_real" in names


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "zerodiv", "catalog"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and "paper_example" in proc.stdout
