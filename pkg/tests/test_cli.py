import io
import subprocess
import sys

import pytest

from arboretum.cli import run


def call(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stdin=io.StringIO(stdin), stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_rotate():
    assert call("rotate", "((| |) |)") == (0, "*[((*[(*)]))]\n", "")


def test_rotate_inverse():
    code, out, _ = call("rotate", "--inverse", "*[(*)(*)]", "*[(* *)]")
    assert code == 0 and out.splitlines() == ["(| (| |))", "(| | |)"]


def test_rotate_wrong_side():
    code, _, err = call("rotate", "*[(*)]")
    assert code == 1 and err.startswith("error:")


def test_coproduct_tree_a():
    code, out, _ = call("coproduct", "--side", "reduced", "(| (| |))")
    lines = out.splitlines()
    assert code == 0
    assert lines == ["1 * | (x) (| (| |))", "1 * (| (| |)) (x) |", "1 * (| |) (x) (| |)"]


def test_coproduct_hyper():
    code, out, _ = call("coproduct", "*[(*)(*)]")
    assert code == 0
    assert "1 * *[(*)] (x) *[(*)]" in out.splitlines()
    assert len(out.splitlines()) == 3


def test_antipode():
    code, out, _ = call("antipode", "(| (| |))")
    assert code == 0
    assert sorted(out.splitlines()) == sorted(["-1 * (| (| |))", "1 * (| |);(| |)"])


def test_prelie_and_compose():
    code, out, _ = call("prelie", "(| |)", "(| |)")
    assert code == 0 and sorted(out.splitlines()) == ["1 * ((| |) |)", "1 * (| (| |))"]
    assert call("compose", "(| |)", "2", "(| | |)")[:2] == (0, "(| (| | |))\n")
    assert call("compose", "*[(*)]", "2", "*[(*)]")[:2] == (0, "*[(*)(*)]\n")
    code, _, err = call("compose", "(| |)", "5", "(| |)")
    assert code == 1 and "out of range" in err
    assert call("prelie", "|", "(| |)")[0] == 1


def test_enumerate():
    assert call("enumerate", "--kind", "reduced", "--measure", "leaves", "--size", "4", "--count-only")[1] == "11\n"
    code, out, _ = call("enumerate", "--kind", "binary", "--measure", "internal", "--size", "3")
    assert code == 0 and len(out.splitlines()) == 5
    code, _, err = call("enumerate", "--kind", "reduced", "--measure", "edges", "--size", "3")
    assert code == 1 and "not valid" in err


def test_parse_error_names_position():
    code, out, err = call("parse", "( | )")
    assert code == 1 and out == ""
    assert "position 0" in err and len(err.splitlines()) == 1


def test_usage_errors():
    assert call("frobnicate")[0] == 2
    assert call("rotate", "--bogus", "(| |)")[0] == 2
    assert call()[0] == 2


def test_stdin():
    code, out, _ = call("rotate", "-", stdin="(| |)\n\n(| | |)\n")
    assert code == 0 and out.splitlines() == ["*[(*)]", "*[(* *)]"]


def test_dot():
    code, out, _ = call("dot", "*[(* *)]")
    assert code == 0 and out.startswith("digraph")
    assert sum(1 for line in out.splitlines() if line.strip().startswith("v") and "[" in line and "->" not in line) == 3
    assert sum(1 for line in out.splitlines() if line.strip().startswith("h") and "->" not in line) == 1
    assert out.count("->") == 3
    code, out, _ = call("dot", "*")
    assert out.count("->") == 0 and "v0" in out
    code, out, _ = call("dot", "(| |)")
    assert out.count("->") == 2


@pytest.mark.parametrize("suite", ["bijection", "order", "hopf", "prelie", "operad"])
def test_check_suites(suite):
    code, out, _ = call("check", "--suite", suite, "--max-grade", "3")
    assert code == 0 and out.startswith(f"ok {suite}")


def test_check_unknown_suite():
    assert call("check", "--suite", "nope")[0] == 2


def test_byte_identical_runs():
    argv = ["coproduct", "((| |) (| |))"]
    assert call(*argv) == call(*argv)
    a = subprocess.run([sys.executable, "-m", "arboretum.cli", *argv], capture_output=True)
    b = subprocess.run([sys.executable, "-m", "arboretum.cli", *argv], capture_output=True)
    assert a.returncode == 0 and a.stdout == b.stdout and a.stdout
