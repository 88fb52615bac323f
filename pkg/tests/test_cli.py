from __future__ import annotations

import csv
import io
import json
import math
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

import pytest

from planar_spectra import cli
from planar_spectra.cli import UsageError, main, parse_range
from planar_spectra.graph import complete_graph, cycle_graph
from planar_spectra.verify import SuiteResult


def run(*argv: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def rows(text: str) -> list[dict[str, str]]:
    return list(csv.DictReader(io.StringIO(text)))


def test_parse_range():
    assert parse_range("9..12") == range(9, 13)
    assert parse_range("7") == range(7, 8)
    with pytest.raises(UsageError):
        parse_range("12..9")
    with pytest.raises(UsageError):
        parse_range("a..b")


def test_rho_builtins():
    code, out, _ = run("rho", "--builtin", "phi", "--n", "10")
    (row,) = rows(out)
    assert code == 0
    assert float(row["rho_lo"]) <= 1.5 + math.sqrt(16.25) <= float(row["rho_hi"])
    code, out, _ = run("rho", "--builtin", "fan_apex", "--n", "5")
    (row,) = rows(out)
    assert float(row["rho_lo"]) <= 1 + math.sqrt(7) <= float(row["rho_hi"])


def test_rho_file(tmp_path):
    empty = tmp_path / "empty.g6"
    empty.write_text("")
    code, out, _ = run("rho", str(empty))
    assert code == 0 and rows(out) == []
    mixed = tmp_path / "mixed.g6"
    mixed.write_text("D~{\nbad!\nCF\nC?\n")
    code, out, err = run("rho", str(mixed))
    assert code == 2
    assert [r["graph6"] for r in rows(out)] == ["D~{", "CF"]
    assert "mixed.g6:2" in err and "line 4" in err
    code, _, err = run("rho", str(tmp_path / "missing.g6"))
    assert code == 2 and "I/O error" in err


def test_rho_markdown_and_out(tmp_path):
    target = tmp_path / "o.md"
    code, _, _ = run("rho", "--builtin", "cycle", "--n", "6", "--format", "md", "--out", str(target))
    text = target.read_text()
    assert code == 0 and text.startswith("| graph6 |")


def test_rho_usage_errors():
    assert run("rho")[0] == 2
    assert run("rho", "--builtin", "phi")[0] == 2
    assert run("rho", "--builtin", "phi", "--n", "3")[0] == 2
    assert run("frobnicate")[0] == 2


def test_bounds_formats():
    code, out, _ = run("bounds", "--n-range", "10..12")
    data = rows(out)
    assert code == 0 and [r["n"] for r in data] == ["10", "11", "12"]
    assert all(float(r["lower"]) < float(r["rho_H_lo"]) for r in data)
    code, out, _ = run("bounds", "--n", "40", "--format", "md")
    assert "| 40 | 1.472 |" in out
    assert run("bounds", "--n-range", "12..10")[0] == 2
    assert run("bounds", "--n", "9")[0] == 2


def test_verify_commands():
    code, out, _ = run("verify", "extremal", "--n", "9..12")
    assert code == 0 and "extremal: PASS" in out
    code, out, _ = run("verify", "rowsum", "--n", "7..20", "--seed", "1")
    assert code == 0 and "rowsum: PASS" in out
    code, out, _ = run("verify", "eigvec", "--n", "48..52")
    assert code == 0 and "eigvec: PASS" in out
    assert run("verify", "nonsense")[0] == 2


def test_verify_failure_artifacts(tmp_path, monkeypatch):
    def broken(orders, seed):
        result = SuiteResult("broken")
        result.record(True, cycle_graph(4))
        result.record(False, complete_graph(5), n=5, why="forced")
        return result

    monkeypatch.setitem(cli.SUITES, "broken", (broken, range(5, 6)))
    code, out, _ = run("verify", "broken", "--out", str(tmp_path))
    assert code == 1 and "broken: FAIL (2 checks, 1 failures)" in out
    assert (tmp_path / "failures-broken.g6").read_text() == "D~{\n"
    ctx = json.loads((tmp_path / "failures-broken.json").read_text())
    assert ctx == [{"graph6": "D~{", "context": {"n": 5, "why": "forced"}}]


def test_enumerate_and_cache(tmp_path):
    code, out, _ = run("enumerate", "--n", "7", "--out", str(tmp_path))
    assert code == 0
    fam = (tmp_path / "n07" / "family.g6").read_text().split()
    assert len(fam) == 3
    code, out, _ = run("enumerate", "--n", "7", "--out", str(tmp_path))
    assert code == 0 and "cache verified" in out
    csv_path = tmp_path / "n07" / "spectra.csv"
    csv_path.write_text(csv_path.read_text().replace("4.", "5.", 1))
    code, _, err = run("enumerate", "--n", "7", "--out", str(tmp_path))
    assert code == 1 and str(csv_path) in err
    code, _, _ = run("enumerate", "--n", "7", "--out", str(tmp_path), "--force")
    assert code == 0
    assert run("enumerate", "--n", "7", "--out", str(tmp_path))[0] == 0


def test_enumerate_small_and_capped(tmp_path):
    assert run("enumerate", "--n", "5", "--out", str(tmp_path))[0] == 0
    assert len((tmp_path / "n05" / "family.g6").read_text().split()) == 1
    code, _, err = run("enumerate", "--n", "30", "--out", str(tmp_path))
    assert code == 2 and "n <= 16" in err


def test_enumerate_env_root(tmp_path, monkeypatch):
    monkeypatch.setenv("PLANAR_SPECTRA_CACHE", str(tmp_path / "cache"))
    assert run("enumerate", "--n", "6")[0] == 0
    assert (tmp_path / "cache" / "n06" / "report.json").is_file()


def test_seeded_output_is_byte_identical(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for d in (a, b):
        assert run("enumerate", "--n", "9", "--out", str(d))[0] == 0
    for name in ("family.g6", "spectra.csv", "report.json"):
        assert (a / "n09" / name).read_bytes() == (b / "n09" / name).read_bytes()
    runs = [run("verify", "certificates", "--n", "4..12", "--seed", "5")[1] for _ in range(2)]
    assert runs[0] == runs[1]


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "planar_spectra", "rho", "--builtin", "complete", "--n", "5"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and "D~{" in proc.stdout
    assert Path(sys.executable).exists()
