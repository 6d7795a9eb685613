import json
from pathlib import Path

import pytest

from holodiff.cli import main
from holodiff.config import THREADS_ENV
from holodiff.documents import DECOMP_REPORT_SCHEMA, ram_input_to_document, validate_document
from holodiff.psl2mod3.counts import ram_input


@pytest.fixture
def z3_document(tmp_path: Path) -> Path:
    path = tmp_path / "x7_v.json"
    path.write_text(json.dumps(ram_input_to_document(ram_input(7, "V"))), encoding="utf-8")
    return path


def test_decompose(z3_document: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["decompose", str(z3_document)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["kind"] == "decompose"
    assert report["summands"] == [{"socle": 0, "length": 3, "mult": 1, "dim": 3}]
    assert report["genus"]["X"] == 3
    assert "layers" not in report


def test_decompose_verbose(z3_document: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["decompose", str(z3_document), "--verbose"]) == 0
    report = json.loads(capsys.readouterr().out)
    validate_document(report, DECOMP_REPORT_SCHEMA)
    assert [layer["degree"] for layer in report["layers"]] == [1, 1, 0]
    assert report["layers"][2]["multiplicities"] == [0]


def test_decompose_text(z3_document: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["decompose", str(z3_document), "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "U(0,3) x 1  dim 3" in out
    assert "dimension 3" in out


def test_decompose_rejects_bad_jump(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    # jumps must be prime to p = 3
    document = ram_input_to_document(ram_input(7, "V"))
    document["points"][0]["jumps"] = [3]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(document), encoding="utf-8")
    assert main(["decompose", str(path)]) == 2
    assert "points[0]" in capsys.readouterr().err


def test_decompose_accepts_jump_two(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    # b = 2 gives D_j of degrees 2, 1, 0 and g(X) = 4
    document = ram_input_to_document(ram_input(7, "V"))
    document["points"][0]["jumps"] = [2]
    path = tmp_path / "jump2.json"
    path.write_text(json.dumps(document), encoding="utf-8")
    assert main(["decompose", str(path), "--verbose"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["genus"]["X"] == 4
    assert [layer["degree"] for layer in report["layers"]] == [2, 1, 0]
    assert report["dimension"] == 4


def test_decompose_rejects_malformed_json(tmp_path: Path) -> None:
    path = tmp_path / "broken.json"
    path.write_text("{", encoding="utf-8")
    assert main(["decompose", str(path)]) == 2
    assert main(["decompose", str(tmp_path / "missing.json")]) == 2


def test_psl2_seven(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["psl2", "--ell", "7"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["case"] == 2
    assert report["genus"] == 3
    assert report["decomposition"]["projective"] == [{"name": "P(gamma_2)", "mult": 1, "dim": 3}]
    assert report["decomposition"]["uniserial"] == []
    assert report["congruence"][0]["congruence"] is False


def test_psl2_eleven_verbose(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["psl2", "--ell", "11", "--verbose"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["decomposition"]["s01"] == -1
    assert report["n1_decomposition"]["dimension"] == 26
    assert "h0_brauer" in report
    assert [row["block"] for row in report["congruence"] if row["congruence"]] == ["B_0"]


def test_psl2_text(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["psl2", "--ell", "13", "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("l = 13, case 3, genus 50")
    assert "U(T_01,2) x 1  dim 14" in out


@pytest.mark.parametrize("ell", ["9", "5"])
def test_psl2_rejects_invalid_ell(ell: str) -> None:
    assert main(["psl2", "--ell", ell]) == 2


def test_sweep(monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]) -> None:
    monkeypatch.setenv(THREADS_ENV, "2")
    assert main(["sweep", "--from", "1", "--to", "13", "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert [row["ell"] for row in rows] == [7, 11, 13]
    assert all(row["status"] == "pass" for row in rows)


def test_sweep_edges(monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]) -> None:
    monkeypatch.setenv(THREADS_ENV, "1")
    assert main(["sweep", "--from", "24", "--to", "28", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out) == []
    assert main(["sweep", "--from", "20", "--to", "10"]) == 2


def test_oracles(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["oracle", "divisor", "--samples", "200", "--seed", "3"]) == 0
    assert main(["oracle", "divisor", "--samples", "0"]) == 0
    assert main(["oracle", "classnumber", "--to", "300"]) == 0
    assert capsys.readouterr().out.count("pass") == 3


def test_bad_thread_setting(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv(THREADS_ENV, "none")
    assert main(["sweep", "--from", "7", "--to", "7"]) == 2


@pytest.mark.slow
def test_sweep_to_997(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["sweep", "--from", "7", "--to", "997", "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert len(rows) == 165
    assert [row["failures"] for row in rows if row["status"] != "pass"] == []
