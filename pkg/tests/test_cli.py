import json

import pytest

from src.cyclosynth import cli
from src.cyclosynth.documents import dump_matrix
from src.cyclosynth.linalg import RingMatrix
from src.cyclosynth.synthesis import random_unitary


@pytest.fixture(autouse=True)
def quiet_env(monkeypatch):
    for name in ("CYCLOSYNTH_TRACE", "CYCLOSYNTH_VERIFY", "CYCLOSYNTH_TRACE_MAX_CHARS"):
        monkeypatch.delenv(name, raising=False)


def _random(tmp_path, name, degree, dim=2, length=15, seed=1):
    out = tmp_path / name
    code = cli.main(
        ["random", "--degree", str(degree), "--dim", str(dim), "--length", str(length), "--seed", str(seed), "--out", str(out)]
    )
    assert code == 0
    return out


def test_random_is_reproducible(tmp_path):
    a = _random(tmp_path, "a.json", 24, dim=4, seed=7)
    b = _random(tmp_path, "b.json", 24, dim=4, seed=7)
    assert a.read_bytes() == b.read_bytes()
    assert json.loads(a.read_text())["dim"] == 4


@pytest.mark.parametrize("degree", [16, 24, 32, 48])
def test_synthesize_then_verify(tmp_path, capsys, degree):
    mat = _random(tmp_path, "u.json", degree, seed=degree)
    circ = tmp_path / "u.circ"
    assert cli.main(["synthesize", "--in", str(mat), "--out", str(circ)]) == 0
    out = capsys.readouterr().out
    assert f"degree: {degree}" in out
    assert "verified: yes" in out
    assert circ.read_text().startswith(f"CIRCUIT degree={degree} work=1 ")
    assert cli.main(["verify", "--in", str(mat), "--circuit", str(circ)]) == 0
    assert capsys.readouterr().out.startswith("ok:")


def test_trace_goes_to_stderr(tmp_path, capsys):
    mat = _random(tmp_path, "u.json", 16, seed=2)
    circ = tmp_path / "u.circ"
    capsys.readouterr()
    assert cli.main(["--trace", "synthesize", "--in", str(mat), "--out", str(circ)]) == 0
    captured = capsys.readouterr()
    assert "phi4" not in captured.out
    assert captured.err


def test_verify_reports_wrong_matrix(tmp_path, capsys):
    mat = _random(tmp_path, "u.json", 16, seed=3)
    circ = tmp_path / "u.circ"
    assert cli.main(["--no-verify", "synthesize", "--in", str(mat), "--out", str(circ)]) == 0
    assert "verified: no" in capsys.readouterr().out
    other = tmp_path / "other.json"
    other.write_text(dump_matrix(random_unitary(16, 2, 15, seed=4)))
    assert cli.main(["verify", "--in", str(other), "--circuit", str(circ)]) == 4
    assert "disagrees" in capsys.readouterr().err


def test_tables(capsys):
    assert cli.main(["tables", "--degree", "12"]) == 0
    out = capsys.readouterr().out
    assert "16 residues" in out
    assert "residue checks: ok" in out
    assert cli.main(["tables", "--degree", "16"]) == 1


def test_lemmas(capsys):
    assert cli.main(["lemmas"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 5
    assert all(line.endswith(": ok") for line in lines)


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["random", "--degree", "16", "--dim", "3", "--length", "4", "--seed", "1", "--out", "x.json"],
        ["random", "--degree", "10", "--dim", "2", "--length", "4", "--seed", "1", "--out", "x.json"],
        ["random", "--degree", "16", "--dim", "2", "--length", "-1", "--seed", "1", "--out", "x.json"],
        ["synthesize", "--in", "missing.json", "--out", "x.circ"],
    ],
)
def test_usage_errors(tmp_path, monkeypatch, capsys, argv):
    monkeypatch.chdir(tmp_path)
    assert cli.main(argv) == 1
    assert capsys.readouterr().err.startswith("error:")


def test_bad_json_is_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cli.main(["synthesize", "--in", str(bad), "--out", str(tmp_path / "x.circ")]) == 2
    assert "line 1" in capsys.readouterr().err


def test_bad_circuit_is_parse_error(tmp_path, capsys):
    mat = _random(tmp_path, "u.json", 16)
    circ = tmp_path / "u.circ"
    circ.write_text("CIRCUIT degree=16 work=1 extra=1\nLEVELOP ???\n")
    assert cli.main(["verify", "--in", str(mat), "--circuit", str(circ)]) == 2
    assert "line 2, column 1" in capsys.readouterr().err


def test_non_unitary_input(tmp_path, capsys):
    mat = tmp_path / "n.json"
    mat.write_text(dump_matrix(RingMatrix(16, [[1, 1], [0, 1]])))
    assert cli.main(["synthesize", "--in", str(mat), "--out", str(tmp_path / "n.circ")]) == 3
    assert "not unitary" in capsys.readouterr().err


def test_width_mismatch(tmp_path, capsys):
    small = _random(tmp_path, "u.json", 16)
    circ = tmp_path / "u.circ"
    assert cli.main(["synthesize", "--in", str(small), "--out", str(circ)]) == 0
    big = _random(tmp_path, "big.json", 16, dim=4)
    capsys.readouterr()
    assert cli.main(["verify", "--in", str(big), "--circuit", str(circ)]) == 3
    assert "dimension mismatch" in capsys.readouterr().err


@pytest.mark.parametrize("degree,literal", [(12, "deg=12; coeffs=1,0,0,0"), (20, "deg=16; coeffs=1,0,0,0,0,0,0,0")])
def test_unsupported_degree_exits_with_precondition(tmp_path, capsys, degree, literal):
    mat = tmp_path / "u.json"
    mat.write_text(json.dumps({"degree": degree, "dim": 1, "entries": [literal]}))
    assert cli.main(["synthesize", "--in", str(mat), "--out", str(tmp_path / "u.circ")]) == 3
    assert "unsupported degree" in capsys.readouterr().err


def test_oversized_circuit_is_rejected_before_evaluation(tmp_path, capsys):
    mat = _random(tmp_path, "u.json", 16)
    circ = tmp_path / "wide.circ"
    circ.write_text("CIRCUIT degree=16 work=1 extra=40\n")
    assert cli.main(["verify", "--in", str(mat), "--circuit", str(circ)]) == 2
    assert "line 1, column 32" in capsys.readouterr().err
