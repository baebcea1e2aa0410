"""Command-line behaviors: outputs, formats, exit codes, stdin."""

from __future__ import annotations

import io
import json

import pytest

from phcalc.cli import main
from phcalc.files import parse_barcodes, parse_filtration
from phcalc.persistence import LemmaReport, LemmaViolation

DIABOLO_FACETS_TEXT = "2 3\n3 4\n3 5\n4 5\n0 1 2\n"


@pytest.fixture
def facets_file(tmp_path):
    path = tmp_path / "diabolo.txt"
    path.write_text(DIABOLO_FACETS_TEXT)
    return str(path)


@pytest.fixture
def filtration_file(tmp_path, diabolo_json):
    path = tmp_path / "diabolo.json"
    path.write_text(diabolo_json)
    return str(path)


def test_betti_command(facets_file, capsys):
    assert main(["betti", facets_file, "-n", "0"]) == 0
    assert main(["betti", facets_file, "-n", "1"]) == 0
    assert capsys.readouterr().out == "1\n1\n"


def test_betti_empty_file(tmp_path, capsys):
    path = tmp_path / "empty.txt"
    path.write_text("")
    assert main(["betti", str(path), "-n", "0"]) == 0
    assert capsys.readouterr().out == "0\n"


def test_betti_from_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO(DIABOLO_FACETS_TEXT))
    assert main(["betti", "-", "-n", "1"]) == 0
    assert capsys.readouterr().out == "1\n"


def test_pbetti_command(filtration_file, capsys):
    assert main(["pbetti", filtration_file, "-n", "0", "-j", "0", "-p", "4"]) == 0
    assert main(["pbetti", filtration_file, "-n", "0", "-j", "0", "-p", "0"]) == 0
    assert capsys.readouterr().out == "1\n3\n"


def test_pbetti_rejects_bad_levels(filtration_file, capsys):
    assert main(["pbetti", filtration_file, "-n", "0", "-j", "3", "-p", "2"]) == 1
    err = capsys.readouterr().err
    assert "0 <= j <= p <= 5" in err


def test_mu_command(filtration_file, capsys):
    assert main(["mu", filtration_file, "-n", "0", "-j", "2", "-p", "3"]) == 0
    assert main(["mu", filtration_file, "-n", "1", "-j", "3", "-p", "inf"]) == 0
    assert capsys.readouterr().out == "2\n1\n"


def test_barcode_text(filtration_file, capsys):
    assert main(["barcode", filtration_file, "-n", "0"]) == 0
    out = capsys.readouterr().out
    bar_rows = [line for line in out.splitlines() if "*" in line]
    assert len(bar_rows) == 6


def test_barcode_json_all_dims(filtration_file, capsys):
    assert main(["barcode", filtration_file, "--all-dims", "--format", "json"]) == 0
    codes = parse_barcodes(capsys.readouterr().out)
    assert [b.dimension for b in codes] == [0, 1, 2]
    assert codes[1].total_bars() == 2


def test_barcode_svg_to_file(filtration_file, tmp_path, capsys):
    out_path = tmp_path / "bars.svg"
    assert main(
        ["barcode", filtration_file, "--all-dims", "--format", "svg",
         "-o", str(out_path)]
    ) == 0
    assert capsys.readouterr().out == ""
    svg = out_path.read_text()
    assert svg.startswith("<svg ")
    assert svg.count('class="title"') == 3


def test_barcode_requires_dimension_choice(filtration_file, capsys):
    assert main(["barcode", filtration_file]) == 1
    assert main(["barcode", filtration_file, "-n", "0", "--all-dims"]) == 1


def test_check_passes(filtration_file, capsys):
    assert main(["check", filtration_file, "--max-dim", "2", "--oracle"]) == 0
    out = capsys.readouterr().out
    for line in ("nilpotency: ok", "inclusions: ok", "fundamental-lemma: ok",
                 "oracle: ok", "all checks passed"):
        assert line in out


def test_check_rejects_non_nested(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"levels": [[[0,1]], [[2,3]]]}')
    assert main(["check", str(path)]) == 2
    assert "missing from level 1" in capsys.readouterr().err


def test_check_reports_violations_as_json(filtration_file, capsys, monkeypatch):
    broken = LemmaReport(
        0, 5, 21, (LemmaViolation("interval-sum", 1, 2, 3, 4),)
    )
    monkeypatch.setattr("phcalc.cli.check_fundamental_lemma", lambda f, n: broken)
    assert main(["check", filtration_file, "--max-dim", "0"]) == 3
    out = capsys.readouterr().out
    assert "fundamental-lemma: FAIL" in out
    payload = json.loads(out[out.index("[") :])
    assert payload[0]["check"] == "fundamental-lemma"
    assert payload[0]["kind"] == "interval-sum"


def test_check_oracle_skips_when_too_large(filtration_file, capsys, monkeypatch):
    monkeypatch.setenv("PHCALC_ORACLE_MAX_BITS", "2")
    assert main(["check", filtration_file, "--oracle"]) == 0
    assert "oracle: skipped (enumeration bound)" in capsys.readouterr().out


def test_gen_writes_deterministic_file(tmp_path, capsys):
    out_path = tmp_path / "gen.json"
    args = ["gen", "-t", "10", "-l", "5", "-s", "42"]
    assert main(args + ["-o", str(out_path)]) == 0
    assert main(args) == 0
    assert capsys.readouterr().out == out_path.read_text()
    doc = parse_filtration(out_path.read_text())
    assert doc.name == "random triangles=10 levels=5 vertices=12 seed=42"
    assert len(doc.levels) == 5


def test_gen_output_passes_check(tmp_path, capsys):
    path = tmp_path / "gen.json"
    assert main(["gen", "-t", "6", "-l", "3", "-v", "7", "-s", "9",
                 "-o", str(path)]) == 0
    assert main(["check", str(path), "--oracle"]) == 0
    assert "all checks passed" in capsys.readouterr().out


def test_gen_rejects_bad_arguments(capsys):
    assert main(["gen", "-t", "0", "-l", "1"]) == 1
    assert main(["gen", "-t", "1", "-l", "1", "-v", "2"]) == 1
    capsys.readouterr()


def test_bench_table_layout(capsys):
    assert main(["bench", "-t", "2,3", "-l", "2", "-s", "1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    header = next(line for line in lines if not line.startswith("#"))
    assert header.split() == ["2", "3"]
    rows = {line.split()[0] for line in lines if line and line[0].isalpha()}
    assert "Betti" in rows and "Persistent" in rows


def test_usage_errors_exit_one(capsys):
    assert main([]) == 1
    assert main(["betti"]) == 1
    assert main(["nonsense"]) == 1
    assert main(["betti", "x.txt", "-n", "-3"]) == 1
    assert main(["bench", "-t", "0"]) == 1
    capsys.readouterr()


def test_missing_file_exits_one(capsys):
    assert main(["betti", "/nonexistent/path.txt", "-n", "0"]) == 1
    assert "path.txt" in capsys.readouterr().err


def test_parse_error_exits_one(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{"levels": [[[0, "x"]]]}')
    assert main(["pbetti", str(path), "-n", "0", "-j", "0", "-p", "0"]) == 1
    assert "levels[0][0][1]" in capsys.readouterr().err


def test_incremental_mode(tmp_path, capsys):
    path = tmp_path / "inc.json"
    path.write_text('{"levels": [[[0,1]], [[1,2]]]}')
    assert main(["pbetti", str(path), "--incremental",
                 "-n", "0", "-j", "0", "-p", "1"]) == 0
    assert capsys.readouterr().out == "1\n"


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    assert "betti" in capsys.readouterr().out
