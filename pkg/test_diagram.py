#!/usr/bin/env python3
"""
Tests for annular diagrams: braid and PD parsing, resolutions, structural
operations and the planar invariants behind the support checks.
"""

import itertools
import json
import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from diagram import (
    add_split_meridians,
    all_resolutions,
    braid_closure,
    check_capacity,
    checkerboard_and_M,
    diagram_index,
    disc_diagram,
    dump_annular_pd,
    faces,
    goeritz,
    is_alternating,
    is_connected,
    load_annular_pd,
    mirror,
    parse_annular_pd,
    parse_braid_word,
    partial_resolve,
    resolve,
    split_union,
    trace_components,
)
from diagram.moves import add_kink, alternating_three_braid, random_diagram, reidemeister_three, reidemeister_two
from models.diagram import Crossing
from models.errors import CapacityError, DiagramParseError, DisconnectedDiagramError, InvariantViolation

FIGURE_EIGHT = "3: 1 -2 1 -2"
TREFOIL = "2: 1 1 1"

HOPF_LIKE_PD = {
    "crossings": [{"arcs": [1, 1, 0, 0], "sign": 1}],
    "arcs": [{"label": 0, "ray_count": 1}, {"label": 1, "ray_count": 1}],
    "marked": 0,
}


def test_positive_generator_closure():
    d = parse_braid_word("2: 1")
    assert [c.arcs for c in d.crossings] == [(1, 1, 0, 0)]
    assert [c.sign for c in d.crossings] == [1]
    assert d.marked_arc == 0
    assert not d.odd_linking


def test_negative_generator_closure():
    d = parse_braid_word("2: -1")
    assert d.crossings == (Crossing(arcs=(0, 1, 1, 0), sign=-1),)
    assert (d.n_plus, d.n_minus) == (0, 1)


def test_crossingless_braid_gives_loops():
    d = parse_braid_word("3:")
    assert d.crossing_count == 0
    assert d.loop_labels == [0, 1, 2]
    assert d.odd_linking
    assert d.ray_intersections == 3


@pytest.mark.parametrize("text", ["2: 5", "2 1", "2: 0", "", "two: 1"])
def test_bad_braid_text_is_rejected(text):
    with pytest.raises(DiagramParseError):
        parse_braid_word(text)


def test_pd_document_matches_braid_closure():
    d = parse_annular_pd(HOPF_LIKE_PD)
    braid = parse_braid_word("2: 1")
    assert d.crossings == braid.crossings
    assert d.arcs == braid.arcs
    assert d.braid is None


def test_pd_round_trip_through_json():
    d = parse_braid_word(FIGURE_EIGHT)
    again = parse_annular_pd(dump_annular_pd(d))
    assert again.crossings == d.crossings
    assert again.arcs == d.arcs
    assert again.marked_arc == d.marked_arc


def test_load_pd_file(tmp_path):
    path = tmp_path / "diagram.json"
    path.write_text(json.dumps(HOPF_LIKE_PD))
    assert load_annular_pd(path).crossing_count == 1


def test_missing_pd_file():
    with pytest.raises(DiagramParseError):
        load_annular_pd("/nonexistent/diagram.json")


def test_pd_rejects_winding_two_loop():
    document = {"arcs": [{"label": 0, "ray_count": 2}], "marked": 0}
    with pytest.raises(DiagramParseError):
        parse_annular_pd(document)


def test_pd_rejects_inconsistent_orientation():
    document = dict(HOPF_LIKE_PD, crossings=[{"arcs": [1, 0, 0, 1], "sign": 1}])
    with pytest.raises(DiagramParseError):
        parse_annular_pd(document)


def test_pd_rejects_unknown_marked_arc():
    with pytest.raises(DiagramParseError):
        parse_annular_pd(dict(HOPF_LIKE_PD, marked=7))


def test_pd_rejects_bad_json():
    with pytest.raises(DiagramParseError):
        parse_annular_pd("{not json")


def test_resolutions_of_single_crossing():
    d = parse_braid_word("2: 1")
    zero = resolve(d, (0,))
    one = resolve(d, (1,))
    assert (zero.l, zero.m) == (2, 0)
    assert (one.l, one.m) == (0, 1)
    assert one.degree == 1
    assert sum(1 for circle in zero.circles if circle.marked) == 1


def test_resolution_word_must_match():
    with pytest.raises(InvariantViolation):
        resolve(parse_braid_word("2: 1"), (0, 1))


def test_all_resolutions_enumerates_cube():
    configs = list(all_resolutions(parse_braid_word(FIGURE_EIGHT)))
    assert len(configs) == 16
    assert configs[0].word == (0, 0, 0, 0)
    assert configs[-1].word == (1, 1, 1, 1)


def test_capacity_is_enforced():
    d = parse_braid_word(TREFOIL)
    with pytest.raises(CapacityError):
        check_capacity(d, 2)
    assert check_capacity(d, 3) == 3


def test_mirror_flips_records():
    d = parse_braid_word("2: 1")
    m = mirror(d)
    assert m.crossings == parse_braid_word("2: -1").crossings
    assert m.braid.word == (-1,)
    assert mirror(m).crossings == d.crossings


def test_meridians_are_marked_innermost():
    d = add_split_meridians(parse_braid_word("2: 1"))
    assert d.meridians == 2
    assert d.marked_arc == 2
    assert len(d.loop_labels) == 2
    with pytest.raises(InvariantViolation):
        add_split_meridians(d)


@pytest.mark.parametrize("text", ["2: 1", FIGURE_EIGHT])
def test_meridians_add_two_circles_to_every_resolution(text):
    d = parse_braid_word(text)
    dm = add_split_meridians(d)
    inner = max(arc.label for arc in d.arcs) + 1
    assert dm.meridians == 2
    assert dm.crossings == d.crossings
    for word in itertools.product((0, 1), repeat=d.crossing_count):
        before, after = resolve(d, word), resolve(dm, word)
        assert len(after.circles) == len(before.circles) + 2
        assert after.l == before.l + 2
        assert after.m == before.m
        assert after.circles[0].members == (inner,)
        assert after.circles[0].marked
        assert any(c.members == (inner + 1,) and not c.trivial and not c.marked for c in after.circles)


def test_split_union_offsets_outer_labels():
    inner = parse_braid_word("2: 1")
    outer = parse_braid_word("2: -1")
    union, offset = split_union(inner, outer)
    assert offset == 2
    assert union.crossing_count == 2
    assert union.crossings[1].arcs == (2, 3, 3, 2)
    assert union.marked_arc == inner.marked_arc
    assert not is_connected(union)


def test_partial_resolution_removes_crossings():
    d = parse_braid_word(TREFOIL)
    partial = partial_resolve(d, {0: 0})
    assert partial.crossing_count == 2
    full = partial_resolve(d, {0: 0, 1: 0, 2: 0})
    assert full.crossing_count == 0
    assert resolve(full, ()).l == resolve(d, (0, 0, 0)).l


def test_face_counts():
    assert len(faces(parse_braid_word("2: 1"))) == 3
    assert len(faces(parse_braid_word(TREFOIL))) == 5


def test_faces_need_a_connected_diagram():
    with pytest.raises(DisconnectedDiagramError):
        faces(parse_braid_word("2:"))


def test_trefoil_goeritz():
    data = goeritz(parse_braid_word(TREFOIL))
    assert data.signature == -2
    assert data.determinant == 3
    assert data.mu == 0


def test_figure_eight_goeritz():
    data = goeritz(parse_braid_word(FIGURE_EIGHT))
    assert data.signature == 0
    assert data.determinant == 5


def test_mirror_trefoil_goeritz():
    data = goeritz(mirror(parse_braid_word(TREFOIL)))
    assert data.signature == 2
    assert data.determinant == 3


def test_goeritz_under_mirror():
    rng = random.Random(5)
    for _ in range(15):
        d = braid_closure(alternating_three_braid(rng, 6))
        assert is_alternating(d) and is_connected(d)
        data, image = goeritz(d), goeritz(mirror(d))
        assert image.signature == -data.signature
        assert image.determinant == data.determinant


@pytest.mark.parametrize("text,expected", [("2: 1", -1), ("2: -1", 1), (FIGURE_EIGHT, 0)])
def test_m_number(text, expected):
    _, M = checkerboard_and_M(parse_braid_word(text))
    assert M == expected


def test_alternating_detection():
    assert is_alternating(parse_braid_word(FIGURE_EIGHT))
    assert is_alternating(parse_braid_word(TREFOIL))
    assert not is_alternating(parse_braid_word("2: 1 -1"))


@pytest.mark.parametrize("variant", ["under-positive", "under-negative", "over-positive", "over-negative"])
def test_kink_adds_one_crossing(variant):
    d = parse_braid_word("2: 1")
    kinked = add_kink(d, 0, variant)
    assert kinked.crossing_count == 2
    assert kinked.ray_intersections == d.ray_intersections
    assert is_connected(kinked)


def test_braid_moves():
    base = parse_braid_word("3: 1").braid
    assert reidemeister_two(base, 1, 2).word == (1, 2, -2)
    left, right = reidemeister_three(base, 0, 1, -1)
    assert left.word == (-1, -2, -1, 1)
    assert right.word == (-2, -1, -2, 1)


def _component_windings(d):
    index = diagram_index(d)
    return [
        sum(index.winding[arc] if forward else -index.winding[arc] for arc, forward in steps)
        for steps in trace_components(index, {})
    ]


def test_disc_diagram_winds_zero_times():
    d = disc_diagram(parse_braid_word(TREFOIL))
    assert d.ray_intersections == 0
    assert not d.odd_linking
    assert d.braid is None
    assert _component_windings(d) == [0]
    assert all(config.l == 0 for config in all_resolutions(d))


def test_random_diagrams_include_summands_away_from_the_axis():
    rng = random.Random(7)
    draws = [random_diagram(rng, 6) for _ in range(60)]
    assert all(d.crossing_count <= 6 for d in draws)
    summed = [d for d in draws if 0 in _component_windings(d)]
    assert summed
    assert all(not is_connected(d) for d in summed)
