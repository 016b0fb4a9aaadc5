"""
Resolutions of annular diagrams.

Circles are traced through endpoint pairs (crossing, slot): an arc joins
its tail endpoint to its head endpoint, and a resolved crossing joins the
slots paired by its smoothing. Unresolved crossings pass strands straight
through (a with c, b with d).
"""

import itertools
import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from config import get_settings
from models.diagram import (
    AnnularDiagram,
    Circle,
    CircleConfiguration,
    head_slots,
    smoothing_partner,
    tail_slots,
)
from models.errors import CapacityError, InvariantViolation
from models.validators import ValidationUtils

logger = logging.getLogger(__name__)

Endpoint = Tuple[int, int]
Step = Tuple[int, bool]


class DiagramIndex:
    """Endpoint lookups for one diagram."""

    def __init__(self, d: AnnularDiagram):
        self.diagram = d
        self.slots: List[Tuple[int, int, int, int]] = [c.arcs for c in d.crossings]
        self.signs: List[int] = [c.sign for c in d.crossings]
        self.winding: Dict[int, int] = {arc.label: arc.winding for arc in d.arcs}
        self.head: Dict[int, Endpoint] = {}
        self.tail: Dict[int, Endpoint] = {}
        for x, crossing in enumerate(d.crossings):
            for s in head_slots(crossing.sign):
                self.head[crossing.arcs[s]] = (x, s)
            for s in tail_slots(crossing.sign):
                self.tail[crossing.arcs[s]] = (x, s)
        self.loops: List[int] = d.loop_labels
        self.crossing_arcs: List[frozenset] = [frozenset(c.arcs) for c in d.crossings]

    def arc_at(self, endpoint: Endpoint) -> int:
        x, s = endpoint
        return self.slots[x][s]

    def other_end(self, endpoint: Endpoint) -> Endpoint:
        """The opposite endpoint of the arc attached at `endpoint`."""
        arc = self.arc_at(endpoint)
        return self.tail[arc] if self.head[arc] == endpoint else self.head[arc]

    def is_head(self, endpoint: Endpoint) -> bool:
        return self.head[self.arc_at(endpoint)] == endpoint


@lru_cache(maxsize=256)
def diagram_index(d: AnnularDiagram) -> DiagramIndex:
    return DiagramIndex(d)


def check_capacity(d: AnnularDiagram, cap: Optional[int] = None) -> int:
    """Raise CapacityError when the crossing count exceeds the effective cap."""
    limit = get_settings().get_cube_cap(cap)
    if d.crossing_count > limit:
        raise CapacityError(d.crossing_count, limit)
    return limit


def trace_components(
    index: DiagramIndex, values: Mapping[int, Optional[int]]
) -> List[List[Step]]:
    """
    Closed curves of a (partial) resolution as lists of (arc, forward) steps.

    `values` maps crossing -> 0/1, or None for crossings left unresolved.
    Crossingless loops are not included.
    """
    visited = set()
    components: List[List[Step]] = []
    for start in sorted(index.head):
        if start in visited:
            continue
        steps: List[Step] = []
        arc, forward = start, True
        while True:
            visited.add(arc)
            steps.append((arc, forward))
            x, s = index.head[arc] if forward else index.tail[arc]
            value = values.get(x)
            exit_slot = (s + 2) % 4 if value is None else smoothing_partner(s, value)
            nxt = index.slots[x][exit_slot]
            forward = index.tail[nxt] == (x, exit_slot)
            arc = nxt
            if arc == start:
                break
        components.append(steps)
    return components


def _winding(index: DiagramIndex, steps: Sequence[Step]) -> int:
    return sum(index.winding[arc] if forward else -index.winding[arc] for arc, forward in steps)


def _order_circles(circles: List[Circle]) -> Tuple[Circle, ...]:
    return tuple(sorted(circles, key=lambda c: (not c.marked, c.trivial, c.members[0])))


@lru_cache(maxsize=8192)
def resolve(d: AnnularDiagram, word: Tuple[int, ...]) -> CircleConfiguration:
    """
    Circles of the complete resolution given by `word`.

    Raises:
        InvariantViolation: If the word has the wrong length or a circle winds twice
    """
    word = tuple(word)
    if not ValidationUtils.validate_resolution_word(word, d.crossing_count):
        raise InvariantViolation("resolution word does not match the diagram", witness=word)
    index = diagram_index(d)
    circles: List[Circle] = []
    for steps in trace_components(index, dict(enumerate(word))):
        winding = _winding(index, steps)
        members = tuple(sorted(arc for arc, _ in steps))
        if abs(winding) > 1:
            raise InvariantViolation("resolution circle winds more than once", witness=(word, members))
        circles.append(Circle(members=members, winding=winding, marked=d.marked_arc in members))
    for label in index.loops:
        circles.append(Circle(members=(label,), winding=index.winding[label], marked=label == d.marked_arc))
    return CircleConfiguration(word=word, circles=_order_circles(circles))


def all_resolutions(d: AnnularDiagram, cap: Optional[int] = None) -> Iterator[CircleConfiguration]:
    """All 2^c configurations in lexicographic order of the resolution word."""
    check_capacity(d, cap)
    for word in itertools.product((0, 1), repeat=d.crossing_count):
        yield resolve(d, word)


def max_winding(d: AnnularDiagram, cap: Optional[int] = None) -> Tuple[int, Optional[Tuple[int, ...]]]:
    """Largest circle winding over all complete resolutions, with a witness word."""
    check_capacity(d, cap)
    index = diagram_index(d)
    best, witness = max([abs(index.winding[label]) for label in index.loops] or [0]), None
    for word in itertools.product((0, 1), repeat=d.crossing_count):
        for steps in trace_components(index, dict(enumerate(word))):
            value = abs(_winding(index, steps))
            if value > best:
                best, witness = value, word
    return best, witness


class _ArcUnion:
    def __init__(self, labels):
        self.parent = {label: label for label in labels}

    def find(self, label):
        while self.parent[label] != label:
            self.parent[label] = self.parent[self.parent[label]]
            label = self.parent[label]
        return label

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def piece_count(d: AnnularDiagram, values: Optional[Mapping[int, int]] = None) -> int:
    """
    Number of connected pieces of a partially resolved diagram.

    Unresolved crossings tie their four arcs together; resolved crossings
    tie only the arcs their smoothing joins.
    """
    values = values or {}
    union = _ArcUnion([arc.label for arc in d.arcs])
    for x, crossing in enumerate(d.crossings):
        a, b, c, e = crossing.arcs
        if x not in values:
            union.union(a, b)
            union.union(a, c)
            union.union(a, e)
        elif values[x] == 0:
            union.union(a, b)
            union.union(c, e)
        else:
            union.union(a, e)
            union.union(b, c)
    return len({union.find(arc.label) for arc in d.arcs})


def is_connected(d: AnnularDiagram, values: Optional[Mapping[int, int]] = None) -> bool:
    return piece_count(d, values) == 1
