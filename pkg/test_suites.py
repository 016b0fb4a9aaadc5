#!/usr/bin/env python3
"""
Tests for the named check suites on small seeded corpora.
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from diagram import parse_braid_word
from invariants import DEFAULT_COUNTS, SUITES, run_suite
from models.errors import UnknownSuiteError

SUITE_NAMES = {
    "d2", "mirror", "reidemeister", "euler", "alternating", "tensor",
    "tduality", "spanning", "cone", "collapse", "psi",
}


def test_registry_is_complete():
    assert set(SUITES) == SUITE_NAMES
    assert set(DEFAULT_COUNTS) == SUITE_NAMES


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError):
        run_suite("nosuch")


@pytest.mark.parametrize("name", ["d2", "mirror", "euler", "collapse", "psi"])
def test_random_corpus_suites_pass(name):
    report = run_suite(name, count=4, max_crossings=4, seed=7)
    assert report.suite == name
    assert report.results
    assert report.passed, [r for r in report.results if not r.passed]


def test_collapse_suite_checks_second_page_on_every_diagram():
    report = run_suite("collapse", count=8, max_crossings=5, seed=7)
    second_page = [r for r in report.results if r.name.endswith("E2 equals Khovanov homology")]
    assert len(second_page) == 8
    assert all(r.passed for r in second_page)


def test_reidemeister_suite():
    report = run_suite("reidemeister", count=6, max_crossings=4, seed=7)
    assert len(report.results) == 6
    assert report.passed


def test_reidemeister_on_given_diagram():
    report = run_suite("reidemeister", diagram=parse_braid_word("2: 1"), count=4, seed=3)
    assert len(report.results) == 4
    assert report.passed


def test_tduality_suite():
    report = run_suite("tduality", count=4, max_crossings=3, seed=7)
    assert report.passed


def test_cone_suite():
    report = run_suite("cone", count=5, seed=7)
    assert len(report.results) == 15
    assert report.passed


def test_tensor_suite_on_unknot():
    report = run_suite("tensor", diagram=parse_braid_word("2: -1"))
    assert report.passed


def test_alternating_suite_on_figure_eight():
    report = run_suite("alternating", diagram=parse_braid_word("3: 1 -2 1 -2"))
    assert report.passed


def test_spanning_suite_on_figure_eight():
    report = run_suite("spanning", diagram=parse_braid_word("3: 1 -2 1 -2"))
    assert report.passed


def test_suites_are_deterministic():
    first = run_suite("mirror", count=3, max_crossings=3, seed=11)
    second = run_suite("mirror", count=3, max_crossings=3, seed=11)
    assert [r.name for r in first.results] == [r.name for r in second.results]
    assert first.summary() == second.summary()


def test_summary_line():
    report = run_suite("euler", diagram=parse_braid_word("1:"))
    assert report.summary() == "euler: 2 passed, 0 failed"
