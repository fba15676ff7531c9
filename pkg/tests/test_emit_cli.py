import io
import json
import subprocess
import sys

import pytest

from fockspace.cli import compute_matrix, main
from fockspace.emit import matrix_from_csv, matrix_from_json, render, to_csv, to_json, to_pretty, to_tex
from fockspace.fock_a1 import llt_canonical_basis
from fockspace.fock_a2 import canonical_basis_a2
from fockspace.qpoly import parse_laurent


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


@pytest.fixture(scope="module")
def a1_small():
    return llt_canonical_basis((), 3, 2)


@pytest.fixture(scope="module")
def a2_small():
    return canonical_basis_a2((12, 11, 7, 6, 2, 1), 3, 5)


def test_json_round_trip(a1_small, a2_small):
    for cb in (a1_small, a2_small):
        back = matrix_from_json(to_json(cb))
        assert back == cb
        assert back.rows == cb.rows and back.cols == cb.cols
        assert back.kind == cb.kind and back.core == cb.core and back.weight == cb.weight


def test_csv_round_trip(a2_small):
    text = to_csv(a2_small)
    assert text.splitlines()[0].startswith("row,")
    assert matrix_from_csv(text, "a2", 5, (12, 11, 7, 6, 2, 1), 3) == a2_small


def test_json_metadata(a2_small):
    data = json.loads(to_json(a2_small))
    assert data["kind"] == "a2" and data["modulus"] == 5
    assert data["core"] == [12, 11, 7, 6, 2, 1] and data["weight"] == 3
    assert data["generator"].startswith("fockspace ")
    assert "q^2-q^4" in data["entries"][1]


def test_pretty_and_tex(a1_small):
    text = to_pretty(a1_small)
    lines = text.splitlines()
    assert lines[0] == "# a1 m=2 core=() weight=3 rows=%d cols=%d" % (
        len(a1_small.rows), len(a1_small.cols))
    assert "." in text
    tex = to_tex(a1_small)
    assert tex.startswith(r"\begin{array}") and r"\cdot" in tex
    assert render(a1_small, "tex") == tex
    with pytest.raises(ValueError):
        render(a1_small, "xml")


def test_canon_reference_a1_csv():
    code, text = run("canon", "a1", "--m", "3", "--core", "2,2,1,1", "--weight", "3", "--format", "csv")
    assert code == 0
    cb = matrix_from_csv(text, "a1", 3, (2, 2, 1, 1), 3)
    row = (4, 3) + (1,) * 8
    col = (2, 2) + (1,) * 11
    assert cb.entry(row, col) == parse_laurent("q^2")
    assert len(cb.rows) == 22 and len(cb.cols) == 10


def test_canon_matches_library():
    code, text = run("canon", "a2", "--h", "5", "--core", "12,11,7,6,2,1", "--weight", "3", "--format", "json")
    assert code == 0
    assert matrix_from_json(text) == compute_matrix("a2", 5, (12, 11, 7, 6, 2, 1), 3)


def test_output_is_deterministic():
    argv = ["canon", "a2", "--h", "3", "--core", "10,7,4,1", "--weight", "4"]
    outputs = {run(*argv)[1] for _ in range(3)}
    assert len(outputs) == 1


def test_console_script_byte_identical():
    cmd = [sys.executable, "-m", "fockspace", "canon", "a1", "--m", "2", "--core", "", "--weight", "3"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    assert first.decode().splitlines()[0].startswith("# a1 m=2")


def test_verify_commands():
    code, text = run("verify", "dualpieri", "--max-size", "6", "--max-r", "3")
    assert code == 0 and json.loads(text)["passed"]
    code, text = run("verify", "sscbv", "--h", "5", "--core", "12,11,7,6,2,1", "--weight", "3")
    assert code == 0 and json.loads(text)["passed"]
    code, text = run("verify", "rouquier", "--h", "3", "--w", "4")
    assert code == 0 and json.loads(text)["passed"]
    code, text = run("verify", "kostka", "--max-size", "5")
    assert code == 0


def test_rouquier_commands(capsys):
    base = ["rouquier", "--h", "3", "--w", "4", "--alpha", "13,7,6,4,3,1", "--beta", "10,7,6,4,3,3,1"]
    code, text = run(*base)
    assert (code, text) == (0, "q^2+q^4-q^6\n")
    code, text = run(*(base + ["--at-q-1"]))
    assert (code, text) == (0, "1 (CONJECTURAL)\n")
    code, text = run("rouquier", "--h", "5", "--w", "4", "--core", "32,27,22,17,16,12,11,7,6,2,1", "--check-core")
    assert (code, text) == (0, "4-Rouquier: yes\n")
    code, text = run("rouquier", "--h", "3", "--w", "4", "--at-q-1")
    assert code == 0 and text.startswith("# CONJECTURAL")


def test_exit_codes(monkeypatch):
    assert run("canon", "a1", "--m", "3", "--core", "3", "--weight", "1")[0] == 2
    assert run("canon", "a1", "--m", "3", "--core", "x", "--weight", "1")[0] == 2
    assert run("canon", "a2", "--h", "4", "--core", "", "--weight", "1")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("canon", "a1", "--m", "2", "--core", "", "--weight", "9")[0] == 3
    monkeypatch.setenv("FOCK_MAX_WEIGHT", "1")
    assert run("canon", "a1", "--m", "2", "--core", "", "--weight", "2")[0] == 3
    monkeypatch.setenv("FOCK_MAX_WEIGHT", "8")
    assert run("canon", "a1", "--m", "2", "--core", "", "--weight", "7")[0] == 0
    monkeypatch.setenv("FOCK_MAX_WEIGHT", "lots")
    assert run("canon", "a1", "--m", "2", "--core", "", "--weight", "1")[0] == 2
