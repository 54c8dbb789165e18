"""Command line behavior: golden outputs, exit codes, input validation."""

from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

from quatlin import cli

from golden_cases import CASES, FIXTURES_DIR, MODES, argv_for, golden_path


def run_cli(argv, mode, capsys, monkeypatch):
    monkeypatch.setenv("QUATLIN_OUTPUT", mode)
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.parametrize("mode", MODES)
@pytest.mark.parametrize("name,template,expected_code", CASES, ids=[c[0] for c in CASES])
def test_golden_outputs(name, template, expected_code, mode, capsys, monkeypatch):
    argv = argv_for(template)
    code_first, out_first, _ = run_cli(argv, mode, capsys, monkeypatch)
    code_second, out_second, _ = run_cli(argv, mode, capsys, monkeypatch)
    assert code_first == expected_code
    assert code_second == expected_code
    assert out_first == out_second
    golden = golden_path(mode, name).read_text(encoding="utf-8")
    assert out_first == golden
    assert out_first.isascii()


def test_json_mode_emits_valid_json(capsys, monkeypatch):
    for name, template, expected_code in CASES:
        code, out, _ = run_cli(argv_for(template), "json", capsys, monkeypatch)
        doc = json.loads(out)
        assert isinstance(doc, dict)
        assert doc["command"] == template[0]


def test_default_mode_is_pretty(capsys, monkeypatch):
    monkeypatch.delenv("QUATLIN_OUTPUT", raising=False)
    code = cli.main(["rank", "--spec", "L:id L:I"])
    out = capsys.readouterr().out
    assert code == 0
    assert out == golden_path("pretty", "rank_id_conj").read_text(encoding="utf-8")


def test_invalid_output_mode(capsys, monkeypatch):
    monkeypatch.setenv("QUATLIN_OUTPUT", "xml")
    code = cli.main(["catalog"])
    captured = capsys.readouterr()
    assert code == 2
    assert captured.out == ""
    assert "QUATLIN_OUTPUT" in captured.err


class TestInputErrors:
    def test_missing_file(self, capsys, monkeypatch):
        code, out, err = run_cli(["check", "/nonexistent/x.json"], "json", capsys, monkeypatch)
        assert code == 2
        assert out == ""
        assert "cannot read" in err

    def test_invalid_json(self, tmp_path, capsys, monkeypatch):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json", encoding="utf-8")
        code, _, err = run_cli(["check", str(bad)], "json", capsys, monkeypatch)
        assert code == 2
        assert "not valid JSON" in err

    def test_missing_matrix_field(self, tmp_path, capsys, monkeypatch):
        doc = tmp_path / "doc.json"
        doc.write_text('{"label": "x"}', encoding="utf-8")
        code, _, err = run_cli(["check", str(doc)], "json", capsys, monkeypatch)
        assert code == 2
        assert "matrix" in err

    def test_wrong_shape(self, tmp_path, capsys, monkeypatch):
        doc = tmp_path / "doc.json"
        doc.write_text('{"matrix": [["1", "0"], ["0", "1"]]}', encoding="utf-8")
        code, _, err = run_cli(["check", str(doc)], "json", capsys, monkeypatch)
        assert code == 2
        assert "4x4" in err

    def test_float_entries_rejected(self, tmp_path, capsys, monkeypatch):
        rows = [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]]
        doc = tmp_path / "doc.json"
        payload = {"matrix": rows}
        payload["matrix"][0][0] = 0.5  # type: ignore[index]
        doc.write_text(json.dumps(payload), encoding="utf-8")
        code, _, err = run_cli(["check", str(doc)], "json", capsys, monkeypatch)
        assert code == 2
        assert "entries" in err

    def test_bad_rational_string(self, tmp_path, capsys, monkeypatch):
        rows = [["1", "0", "0", "0"], ["0", "1e5", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]]
        doc = tmp_path / "doc.json"
        doc.write_text(json.dumps({"matrix": rows}), encoding="utf-8")
        code, _, err = run_cli(["check", str(doc)], "json", capsys, monkeypatch)
        assert code == 2
        assert "rational" in err

    def test_unknown_frame(self, capsys, monkeypatch):
        argv = ["decompose", "--frame", "NOPE", str(FIXTURES_DIR / "identity.json")]
        code, _, err = run_cli(argv, "json", capsys, monkeypatch)
        assert code == 2
        assert "NOPE" in err

    def test_bad_frame_spec_term_count(self, capsys, monkeypatch):
        argv = ["decompose", "--frame", "L:id L:A1", str(FIXTURES_DIR / "identity.json")]
        code, _, err = run_cli(argv, "json", capsys, monkeypatch)
        assert code == 2
        assert "4 terms" in err

    def test_rank_spec_too_long(self, capsys, monkeypatch):
        spec = " ".join(["L:id"] * 9)
        code, _, err = run_cli(["rank", "--spec", spec], "json", capsys, monkeypatch)
        assert code == 2
        assert "1 to 8" in err

    def test_bad_demo_quaternion(self, capsys, monkeypatch):
        code, _, err = run_cli(["demo", "--a", "1,2,3"], "json", capsys, monkeypatch)
        assert code == 2
        assert "--a" in err

    def test_unknown_command_exits_2(self, capsys, monkeypatch):
        monkeypatch.setenv("QUATLIN_OUTPUT", "json")
        assert cli.main(["frobnicate"]) == 2


class TestPreconditionExit:
    def test_recover_on_antilinear(self, capsys, monkeypatch):
        argv = ["recover", str(FIXTURES_DIR / "conj.json")]
        code, out, err = run_cli(argv, "json", capsys, monkeypatch)
        assert code == 4
        assert out == ""
        assert "not a linear automorphism" in err

    def test_recover_on_non_unital(self, capsys, monkeypatch):
        argv = ["recover", str(FIXTURES_DIR / "twice_identity.json")]
        code, out, err = run_cli(argv, "json", capsys, monkeypatch)
        assert code == 4
        assert "not unital" in err


class TestDocumentHandling:
    def test_label_is_optional(self, tmp_path, capsys, monkeypatch):
        rows = [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]]
        doc = tmp_path / "doc.json"
        doc.write_text(json.dumps({"matrix": rows}), encoding="utf-8")
        code, out, _ = run_cli(["check", str(doc)], "json", capsys, monkeypatch)
        assert code == 0
        assert json.loads(out)["label"] is None
        code, out, _ = run_cli(["check", str(doc)], "pretty", capsys, monkeypatch)
        assert "label:" not in out

    def test_integer_entries_accepted(self, tmp_path, capsys, monkeypatch):
        rows = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
        doc = tmp_path / "doc.json"
        doc.write_text(json.dumps({"matrix": rows}), encoding="utf-8")
        code, out, _ = run_cli(["check", str(doc)], "json", capsys, monkeypatch)
        assert code == 0
        assert json.loads(out)["classification"] == "linear-automorphism"

    def test_non_canonical_rationals_normalized(self, tmp_path, capsys, monkeypatch):
        rows = [["2/2", "0", "0", "0"], ["0", "2/2", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]]
        doc = tmp_path / "doc.json"
        doc.write_text(json.dumps({"matrix": rows}), encoding="utf-8")
        code, out, _ = run_cli(["check", str(doc)], "json", capsys, monkeypatch)
        assert code == 0
        assert json.loads(out)["classification"] == "linear-automorphism"


def test_module_entry_point():
    env = dict(os.environ)
    env.pop("QUATLIN_OUTPUT", None)
    result = subprocess.run(
        [sys.executable, "-m", "quatlin", "catalog"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert result.returncode == 0
    assert result.stdout == golden_path("pretty", "catalog").read_text(encoding="utf-8")
