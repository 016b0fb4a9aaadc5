#!/usr/bin/env python3
"""
Tests for the annskein command-line tool: output formats and exit codes.
"""

import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from config import reload_settings
from tools.annskein import (
    EXIT_CAPACITY,
    EXIT_OK,
    EXIT_USAGE,
    main,
)


@pytest.fixture(autouse=True)
def console_only_logging(monkeypatch):
    monkeypatch.setenv("LOG_FILE_PATH", "")
    reload_settings()
    yield
    monkeypatch.undo()
    reload_settings()


def test_no_command_prints_help(capsys):
    assert main([]) == EXIT_USAGE
    assert "annskein" in capsys.readouterr().out


def test_homology_json(capsys):
    assert main(["homology", "--braid", "2: -1", "--format", "json"]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    ranks = {(e["i"], e["j"], e["k"]): e["rank"] for e in document["ranks"]}
    assert ranks == {(-1, -3, 0): 1, (0, -3, -2): 1, (0, -1, 0): 1, (0, 1, 2): 1}
    assert document["shifts"]["applied"]


def test_homology_grid(capsys):
    assert main(["homology", "--braid", "1:"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == [
        "k\\j   -1    1",
        "  1    .  F_0",
        " -1  F_0    .",
    ]


def test_homology_from_pd_file(tmp_path, capsys):
    path = tmp_path / "hopf.json"
    path.write_text(json.dumps({
        "crossings": [{"arcs": [1, 1, 0, 0], "sign": 1}],
        "arcs": [{"label": 0, "ray_count": 1}, {"label": 1, "ray_count": 1}],
        "marked": 0,
    }))
    assert main(["homology", "--pd", str(path), "--format", "json"]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert sum(e["rank"] for e in document["ranks"]) == 4


def test_khovanov_mode(capsys):
    assert main(["homology", "--braid", "3: 1 -2 1 -2", "--mode", "khovanov", "--reduced"]) == EXIT_OK
    assert "total rank 5" in capsys.readouterr().out


def test_pages(capsys):
    assert main(["pages", "--braid", "2: 1", "--r-max", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "E^0: total rank 6" in out
    assert "collapse at page" in out


def test_psi(capsys):
    assert main(["psi", "--braid", "2: 1", "--format", "json"]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["level"] == -3
    assert document["strands"] == 4


def test_psi_needs_braid(tmp_path):
    path = tmp_path / "d.json"
    path.write_text(json.dumps({
        "crossings": [{"arcs": [1, 1, 0, 0], "sign": 1}],
        "arcs": [{"label": 0, "ray_count": 1}, {"label": 1, "ray_count": 1}],
        "marked": 0,
    }))
    assert main(["psi", "--pd", str(path)]) == EXIT_USAGE


def test_euler(capsys):
    assert main(["euler", "--braid", "1:", "--format", "json"]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["statesum"] == {"0,-1,-1": 1, "0,1,1": 1}
    assert document["quotient"] == {"0,0,0": 1}
    assert all(check["pass"] for check in document["checks"])


def test_parse_error_exit_code():
    assert main(["homology", "--braid", "2: 5"]) == EXIT_USAGE
    assert main(["homology", "--braid", "2 1"]) == EXIT_USAGE


def test_missing_source_exit_code():
    assert main(["homology"]) == EXIT_USAGE


def test_capacity_exit_code():
    assert main(["homology", "--braid", "2: 1 1 1", "--cap", "2"]) == EXIT_CAPACITY


def test_unknown_suite_exit_code():
    assert main(["check", "nosuch", "--no-progress"]) == EXIT_USAGE


def test_check_suite(capsys):
    argv = ["check", "d2", "--random", "3", "--max-crossings", "3", "--seed", "7", "--no-progress"]
    assert main(argv) == EXIT_OK
    first = capsys.readouterr().out
    assert first.strip().endswith("d2: 3 passed, 0 failed")
    assert main(argv) == EXIT_OK
    assert capsys.readouterr().out == first


def test_check_json(capsys):
    argv = ["check", "psi", "--braid", "2: 1", "--format", "json", "--no-progress"]
    assert main(argv) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["suite"] == "psi"
    assert all(check["pass"] for check in document["checks"])


def test_split_diagram_exit_code():
    # a split diagram has no checkerboard surface
    assert main(["check", "alternating", "--braid", "3: 1", "--no-progress"]) == EXIT_USAGE
