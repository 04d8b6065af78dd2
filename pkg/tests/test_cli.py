import io
import json
import subprocess
import sys

import pytest

from windowsketch.cli import run


def call(argv, stdin_text=None, monkeypatch=None):
    if stdin_text is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    out = io.StringIO()
    code = run(argv, out=out)
    return code, out.getvalue()


def test_count_from_stdin(monkeypatch):
    code, out = call(["count", "--window", "4", "--epsilon", "1/4", "--input", "-"], "1\n1\n1\n1\n", monkeypatch)
    data = json.loads(out)
    assert code == 0
    assert data["max_abs_error"] == "1" and data["violations"] == 0
    assert data["actual_state_bits"] == 8


def test_count_from_file_text_report(tmp_path):
    path = tmp_path / "s.txt"
    path.write_text("1\n0\n\n1\n")
    code, out = call(["count", "-w", "4", "-e", "0.25", "-i", str(path), "--report", "text", "--clamp"])
    assert code == 0
    assert "violations" in out and "clamp" in out


def test_bounds():
    code, out = call(["bounds", "--window", "1024", "--epsilon", "1/64"])
    data = json.loads(out)
    assert code == 0
    assert data["count_lower_bound"] == 31
    assert data["count_upper_theory"] == pytest.approx(58)


def test_bounds_small_eps_with_range():
    code, out = call(["bounds", "-w", "10", "-e", "1/400", "-r", "100"])
    data = json.loads(out)
    assert "succinct_bound" in data and "sum_lower_bound" in data


def test_sum_regime_error(monkeypatch):
    code, _ = call(["sum", "--window", "10", "--epsilon", "1/300", "--range", "10"], "1\n", monkeypatch)
    assert code == 3


def test_parse_error(monkeypatch):
    code, _ = call(["count", "-w", "4", "-e", "1/4"], "1\nx\n", monkeypatch)
    assert code == 4


def test_range_error(monkeypatch):
    code, _ = call(["sum", "-w", "4", "-e", "1/4", "-r", "3"], "1\n4\n", monkeypatch)
    assert code == 4


@pytest.mark.parametrize(
    "argv",
    [["count", "-w", "4"], ["count", "-w", "4", "-e", "abc"], ["nope"], ["gen", "--kind", "bernoulli"]],
)
def test_usage_errors(argv):
    code, _ = call(argv)
    assert code == 2


def test_missing_file():
    code, _ = call(["count", "-w", "4", "-e", "1/4", "-i", "/nonexistent/stream.txt"])
    assert code == 4


GEN_CASES = [
    (["gen", "--kind", "bernoulli", "--p", "0.3", "--length", "200", "--seed", "4"], ["count", "-w", "16", "-e", "1/8"]),
    (["gen", "--kind", "uniform", "-r", "255", "--length", "200"], ["sum", "-w", "16", "-e", "1/8", "-r", "255"]),
    (["gen", "--kind", "blocks", "-w", "64", "-e", "1/16", "--pattern", "1010101"], ["count", "-w", "64", "-e", "1/16"]),
    (["gen", "--kind", "blocks", "-w", "64", "-e", "1/16", "--length", "128"], ["count", "-w", "64", "-e", "1/16"]),
    (["gen", "--kind", "sumlang", "-w", "8", "-e", "1/64", "-r", "100", "--seed", "2"], ["sum", "-w", "8", "-e", "1/64", "-r", "100"]),
]


@pytest.mark.parametrize("gen_argv, sketch_argv", GEN_CASES)
def test_gen_pipes_into_sketch(gen_argv, sketch_argv, monkeypatch):
    code, text = call(gen_argv)
    assert code == 0 and text.endswith("\n")
    code, out = call(sketch_argv, text, monkeypatch)
    assert code == 0
    assert json.loads(out)["violations"] == 0


def test_gen_blocks_example():
    code, text = call(["gen", "--kind", "blocks", "-w", "8", "-e", "1/8", "--pattern", "10"])
    assert text == "1\n1\n1\n0\n0\n0\n"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "windowsketch", "bounds", "-w", "64", "-e", "1/4"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["count_lower_bound"] == 6
