#!/usr/bin/env python3
"""
Tests for the skein complex: the rule table, enhanced states, the
assembled differentials, grading shifts and the reduced quotient.
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from diagram import add_split_meridians, parse_braid_word
from f2algebra import homology, reduce_bifiltered, spectral_pages
from models.errors import InvariantViolation
from models.run_config import ComplexMode
from skein import (
    MERGE,
    SKEIN_RULES,
    SPLIT,
    apply_final_shift,
    build,
    enumerate_states,
    lookup,
    plain_khovanov_complex,
    quotient_reduced,
    shift_for,
)
from skein.rules import frobenius_merge, frobenius_split

FIGURE_EIGHT = "3: 1 -2 1 -2"


def test_frobenius_merge():
    assert frobenius_merge(1, 1) == [(1,)]
    assert frobenius_merge(1, -1) == [(-1,)]
    assert frobenius_merge(-1, 1) == [(-1,)]
    assert frobenius_merge(-1, -1) == []


def test_frobenius_split():
    assert frobenius_split(1) == [(1, -1), (-1, 1)]
    assert frobenius_split(-1) == [(-1, -1)]


def test_merging_two_essential_circles():
    # v+ v+ -> w+ lowers the annular grading by two
    assert lookup(MERGE, ("v", "v"), ("w",), (1, 1)) == (((1,), True),)
    assert lookup(MERGE, ("v", "v"), ("w",), (1, -1)) == (((-1,), False),)
    assert lookup(MERGE, ("v", "v"), ("w",), (-1, -1)) == ()


def test_splitting_an_essential_circle():
    terms = lookup(SPLIT, ("v",), ("v", "w"), (1,))
    assert terms == (((1, -1), False), ((-1, 1), True))


def test_trivial_circles_never_reach_d1():
    for kind, in_types, out_types, labels in SKEIN_RULES:
        if "v" not in in_types + out_types:
            terms = SKEIN_RULES[(kind, in_types, out_types, labels)]
            assert not any(in_d1 for _, in_d1 in terms)


def test_impossible_circle_types():
    with pytest.raises(InvariantViolation):
        lookup(MERGE, ("v", "v"), ("v",), (1, 1))


def test_state_counts():
    d = parse_braid_word("2: 1")
    assert len(enumerate_states(d)) == 6
    assert len(enumerate_states(d, reduced=True)) == 3


def test_marked_circle_is_positive_in_reduced_states():
    for state in enumerate_states(parse_braid_word(FIGURE_EIGHT), reduced=True):
        assert state.labels[0] == 1


def test_build_sizes():
    assert len(build(parse_braid_word("2: 1"))) == 6
    assert len(build(parse_braid_word("1:"))) == 2


@pytest.mark.parametrize("mode", [m.value for m in ComplexMode])
def test_differentials_square_to_zero(mode):
    C = build(parse_braid_word(FIGURE_EIGHT), mode=mode)
    F = C.filtered(mode)
    assert F.square_witness() is None


def test_skein_differential_preserves_annular_grading():
    C = build(parse_braid_word(FIGURE_EIGHT))
    for g, targets in enumerate(C.differential(ComplexMode.SKEIN)):
        for t in targets:
            assert C.gradings(t)[2] == C.gradings(g)[2]
            assert C.gradings(t)[1] == C.gradings(g)[1]
            assert C.gradings(t)[0] == C.gradings(g)[0] + 1


def test_d1_lowers_annular_grading_by_two():
    C = build(parse_braid_word(FIGURE_EIGHT), mode=ComplexMode.KHOVANOV.value)
    assert any(C.d1)
    for g, targets in enumerate(C.d1):
        for t in targets:
            assert C.gradings(t)[2] == C.gradings(g)[2] - 2


def test_bifiltered_doubly_preserving_part_is_d0():
    C = build(parse_braid_word(FIGURE_EIGHT), mode=ComplexMode.KHOVANOV.value)
    B = C.bifiltered()
    assert [tuple(c) for c in B.doubly_preserving()] == [tuple(c) for c in C.d0]


def test_figure_eight_bifiltered_reduction():
    C = build(parse_braid_word(FIGURE_EIGHT), mode=ComplexMode.KHOVANOV.value)
    B = C.bifiltered()
    R = reduce_bifiltered(B)
    assert all(not column for column in R.doubly_preserving())
    assert len(R) == 18
    assert homology(R).total == 10
    for which in (0, 1):
        before = spectral_pages(B, 4, which)
        after = spectral_pages(R, 4, which)
        for r in range(1, 5):
            assert before.page(r).as_dict() == after.page(r).as_dict()


def test_normalizing_shift():
    d = parse_braid_word("2: -1 -1")
    record = shift_for(d, reduced=False)
    assert (record.homological, record.quantum, record.annular) == (-2, -4, 0)


def test_meridian_shift_in_reduced_theory():
    d = add_split_meridians(parse_braid_word("2: 1"))
    reduced = shift_for(d, reduced=True)
    unreduced = shift_for(d, reduced=False)
    assert (reduced.quantum, reduced.annular) == (0, -1)
    assert (unreduced.quantum, unreduced.annular) == (1, 0)


def test_shift_is_applied_once():
    C = build(parse_braid_word("2: 1"), shifted=False)
    assert not C.shifted
    shifted = apply_final_shift(C)
    assert shifted.shifted
    with pytest.raises(InvariantViolation):
        apply_final_shift(shifted)


def test_reduced_complex_is_quotient_of_unreduced():
    d = parse_braid_word(FIGURE_EIGHT)
    quotient = homology(quotient_reduced(build(d)))
    reduced = homology(build(d, reduced=True).filtered(ComplexMode.SKEIN))
    assert quotient.ranks == reduced.ranks


def test_quotient_needs_unreduced_complex():
    with pytest.raises(InvariantViolation):
        quotient_reduced(build(parse_braid_word("2: 1"), reduced=True))


def test_plain_complex_matches_khovanov_mode():
    d = parse_braid_word(FIGURE_EIGHT)
    plain = homology(plain_khovanov_complex(d))
    annular = homology(build(d, mode=ComplexMode.KHOVANOV.value).filtered(ComplexMode.KHOVANOV))
    assert plain.total == annular.total == 10
