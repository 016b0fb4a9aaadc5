#!/usr/bin/env python3
"""
Tests for derived quantities: skein and Khovanov homology, spectral pages,
Euler polynomials, T-values, the Plamenevskaya state, support and spanning
checks, split unions and rendering.
"""

import json
import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import invariants.homology as homology_module
from diagram import add_split_meridians, parse_annular_pd, parse_braid_word, random_diagram
from invariants import (
    EulerPolynomial,
    check_alternating_support,
    convolve,
    euler_from_homology,
    euler_statesum,
    khovanov_homology,
    khovanov_pages,
    plain_khovanov_homology,
    plamenevskaya,
    render_checks,
    render_grid,
    skein_homology,
    spanning_leaves,
    split_union_check,
    support_line,
    t_value,
    to_json,
    unknot_t_values,
)
from models.errors import CapacityError, InvariantViolation, NotABraidClosureError, TargetClassError
from models.results import CheckResult, TrigradedRanks

FIGURE_EIGHT = "3: 1 -2 1 -2"

# reduced table of the figure-eight closure, tensored with a circle below
FIGURE_EIGHT_CORE = {
    (-2, -4, 0): 1,
    (-1, -2, 0): 2,
    (0, 0, 0): 1,
    (1, 2, 0): 2,
    (2, 4, 0): 1,
    (0, 2, 2): 1,
    (0, -2, -2): 1,
}
CIRCLE = {(0, 1, 1): 1, (0, -1, -1): 1}


def test_unknot_skein_homology():
    assert skein_homology(parse_braid_word("1:")).as_dict() == CIRCLE


def test_positive_crossing_closure():
    table = skein_homology(parse_braid_word("2: 1"))
    assert table.as_dict() == {(1, 3, 0): 1, (0, -1, -2): 1, (0, 1, 0): 1, (0, 3, 2): 1}
    assert table.shifts.applied


def test_negative_crossing_closure():
    table = skein_homology(parse_braid_word("2: -1"))
    assert table.as_dict() == {(-1, -3, 0): 1, (0, -3, -2): 1, (0, -1, 0): 1, (0, 1, 2): 1}


def test_mirror_negates_gradings():
    d = parse_braid_word("2: 1")
    assert skein_homology(d, mirror_image=True).as_dict() == skein_homology(d).negated()


def test_figure_eight_skein_homology():
    table = skein_homology(parse_braid_word(FIGURE_EIGHT))
    expected = convolve(TrigradedRanks.from_counts(FIGURE_EIGHT_CORE), TrigradedRanks.from_counts(CIRCLE))
    assert table.as_dict() == expected
    assert table.total == 18


def test_figure_eight_with_meridians_reduced():
    d = parse_braid_word(FIGURE_EIGHT)
    table = skein_homology(d, reduced=True, meridians=True)
    unreduced = convolve(TrigradedRanks.from_counts(FIGURE_EIGHT_CORE), TrigradedRanks.from_counts(CIRCLE))
    expected = convolve(TrigradedRanks.from_counts(unreduced), TrigradedRanks.from_counts(CIRCLE))
    assert table.as_dict() == expected
    assert table.total == 36
    # the k = +/-2 summands sit off the main diagonal, on k - j + 2i = 0
    assert all(k - j + 2 * i == 0 for (i, j, k) in FIGURE_EIGHT_CORE if abs(k) == 2)
    euler = euler_from_homology(table).at_t_minus_one()
    quotient = euler.divide_by_nontrivial_circle().divide_by_nontrivial_circle()
    assert quotient == EulerPolynomial({
        (0, -4, 0): 1,
        (0, 4, 0): 1,
        (0, -2, 0): -2,
        (0, 2, 0): -2,
        (0, 0, 0): 1,
        (0, 2, 2): 1,
        (0, -2, -2): 1,
    })


def test_reidemeister_two_invariance():
    assert skein_homology(parse_braid_word("2: 1 -1")).as_dict() == skein_homology(parse_braid_word("2:")).as_dict()


def test_unshifted_table_differs_by_shift():
    d = parse_braid_word("2: -1")
    shifted = skein_homology(d).as_dict()
    unshifted = skein_homology(d, shifted=False).as_dict()
    assert {(i - 1, j - 2, k): r for (i, j, k), r in unshifted.items()} == shifted


def test_capacity_error_from_homology():
    with pytest.raises(CapacityError):
        skein_homology(parse_braid_word("2: 1 1 1"), cap=2)


def test_table_json_round_trip():
    table = skein_homology(parse_braid_word("2: 1"))
    document = json.loads(table.to_json())
    assert document["mode"] == "skein"
    assert TrigradedRanks.from_json(table.to_json()) == table


def test_khovanov_homology_of_unknot_diagram():
    ranks = khovanov_homology(parse_braid_word("2: -1"))
    assert ranks.as_dict() == {(0, 1): 1, (0, -1): 1}
    assert ranks.e2_matches


def test_figure_eight_khovanov_ranks():
    d = parse_braid_word(FIGURE_EIGHT)
    assert khovanov_homology(d, reduced=True).total == 5
    unreduced = khovanov_homology(d)
    assert unreduced.total == 10
    assert unreduced.as_dict() == plain_khovanov_homology(d)


def test_second_page_is_khovanov_homology_on_random_diagrams():
    rng = random.Random(7)
    for _ in range(20):
        d = random_diagram(rng, 6)
        ranks = khovanov_homology(d)
        assert ranks.e2_matches
        assert ranks.as_dict() == plain_khovanov_homology(d)


def test_second_page_mismatch_is_an_invariant_violation(monkeypatch):
    real = homology_module.spectral_pages

    def stale_second_page(F, r_max):
        report = real(F, r_max)
        first = report.page(1).model_copy(update={"page": 2})
        pages = [first if page.page == 2 else page for page in report.pages]
        return report.model_copy(update={"pages": pages})

    monkeypatch.setattr(homology_module, "spectral_pages", stale_second_page)
    with pytest.raises(InvariantViolation):
        khovanov_homology(parse_braid_word(FIGURE_EIGHT))


def test_pages_abut_to_khovanov_homology():
    d = parse_braid_word(FIGURE_EIGHT)
    report = khovanov_pages(d, r_max=3)
    assert [page.page for page in report.pages] == [0, 1, 2, 3]
    assert report.page(1).total == 18
    assert report.infinity.total == 10
    assert report.collapsed_by_r_max


def test_unknot_statesum():
    assert euler_statesum(parse_braid_word("1:")) == EulerPolynomial.nontrivial_circle()


def test_statesum_matches_homology():
    d = parse_braid_word(FIGURE_EIGHT)
    statesum = euler_statesum(d)
    from_homology = euler_from_homology(skein_homology(d))
    assert statesum.at_t_minus_one() == from_homology.at_t_minus_one()


def test_figure_eight_polynomial_quotient():
    statesum = euler_statesum(parse_braid_word(FIGURE_EIGHT))
    quotient = statesum.at_t_minus_one().divide_by_nontrivial_circle()
    assert quotient == EulerPolynomial({
        (0, -4, 0): 1,
        (0, 4, 0): 1,
        (0, -2, 0): -2,
        (0, 2, 0): -2,
        (0, 0, 0): 1,
        (0, 2, 2): 1,
        (0, -2, -2): 1,
    })


def test_division_by_circle():
    assert EulerPolynomial.nontrivial_circle().divide_by_nontrivial_circle() == EulerPolynomial.monomial()
    with pytest.raises(ValueError):
        EulerPolynomial.monomial().divide_by_nontrivial_circle()


def test_jones_coefficients():
    assert euler_statesum(parse_braid_word("1:")).jones() == {-1: 1, 1: 1}


def test_unknot_t_values():
    assert unknot_t_values(parse_braid_word("1:")) == (1, -1)
    assert unknot_t_values(parse_braid_word("2: 1")) == (0, -2)
    assert unknot_t_values(parse_braid_word("2: -1")) == (2, 0)


def test_t_value_of_mirror():
    plus, minus = unknot_t_values(parse_braid_word("2: 1"), mirror_image=True)
    assert (plus, minus) == (2, 0)


def test_t_value_needs_rank_one_group():
    with pytest.raises(TargetClassError):
        t_value(parse_braid_word("1:"), (0, 3))


def test_plamenevskaya_state():
    report = plamenevskaya(add_split_meridians(parse_braid_word("2: 1")))
    assert report.strands == 4
    assert report.level == -3
    assert report.unshifted_level == -2
    assert report.word == (0,)
    assert report.passed


@pytest.mark.parametrize("text,word", [(FIGURE_EIGHT, (0, 1, 0, 1)), ("3: -2 1 -2 1", (1, 0, 1, 0))])
def test_plamenevskaya_state_of_figure_eight(text, word):
    d = parse_braid_word(text)
    report = plamenevskaya(d)
    assert report.strands == 5
    assert report.level == 1 - report.strands
    assert report.unshifted_level == -3
    assert report.word == word
    assert report.passed
    table = skein_homology(d, reduced=True, meridians=True).as_dict()
    lowest = min(k for (_, _, k) in table)
    assert lowest == report.level
    assert sum(r for (_, _, k), r in table.items() if k == lowest) == 1


def test_plamenevskaya_adds_meridians():
    report = plamenevskaya(parse_braid_word("2: 1"))
    assert report.level == -3
    assert report.passed


def test_plamenevskaya_needs_braid():
    document = {
        "crossings": [{"arcs": [1, 1, 0, 0], "sign": 1}],
        "arcs": [{"label": 0, "ray_count": 1}, {"label": 1, "ray_count": 1}],
        "marked": 0,
    }
    with pytest.raises(NotABraidClosureError):
        plamenevskaya(parse_annular_pd(document))


def test_support_line():
    assert support_line(0, 1, 1) == 0
    assert support_line(2, 5, 1) == 0


def test_figure_eight_support():
    report = check_alternating_support(parse_braid_word(FIGURE_EIGHT))
    assert report.form == "sigma"
    assert report.offset == 0
    assert report.alternating
    assert report.offending == []
    assert report.passed


def test_twisted_unknot_support():
    report = check_alternating_support(parse_braid_word("2: -1"))
    assert report.form == "M"
    assert report.offset == 1
    assert report.passed


def test_figure_eight_spanning_leaves():
    report = spanning_leaves(parse_braid_word(FIGURE_EIGHT))
    assert len(report.leaves) == 5
    assert {leaf.r for leaf in report.leaves} == {2}
    assert all(leaf.diagram.crossing_count < 4 for leaf in report.leaves)
    assert report.passed


def test_split_union_of_unknots():
    report = split_union_check(parse_braid_word("1:"), parse_braid_word("1:"))
    assert len(report.results) == 5
    assert report.passed


def test_split_union_with_crossings():
    report = split_union_check(parse_braid_word("2: 1"), parse_braid_word("1:"))
    assert report.passed


def test_render_grid_of_circle():
    text = render_grid(TrigradedRanks.from_counts(CIRCLE))
    assert text.splitlines() == [
        "k\\j   -1    1",
        "  1    .  F_0",
        " -1  F_0    .",
    ]


def test_render_empty_grid():
    assert render_grid(TrigradedRanks()) == "0\n"


def test_render_checks():
    text = render_checks([CheckResult(name="squares", passed=True, detail="6 generators")])
    assert text == "PASS  squares  (6 generators)\n"


def test_to_json_is_stable():
    assert to_json({"b": 1, "a": 2}) == '{\n  "a": 2,\n  "b": 1\n}\n'
