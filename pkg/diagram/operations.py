"""
Structural operations on annular diagrams: mirror image, split meridians,
partial resolution and split union.
"""

import logging
from typing import Dict, List, Mapping, Optional, Tuple

from models.diagram import AnnularDiagram, Arc, BraidWord, Crossing, smoothing_partner
from models.errors import InvariantViolation

from .resolutions import DiagramIndex, diagram_index

logger = logging.getLogger(__name__)


def mirror(d: AnnularDiagram) -> AnnularDiagram:
    """
    Change every crossing.

    The over strand becomes the under strand, so each record is rotated to
    start at the new incoming under-arc and its sign flips. Arcs and ray
    counts are unchanged.
    """
    crossings = []
    for crossing in d.crossings:
        a, b, c, e = crossing.arcs
        if crossing.sign > 0:
            crossings.append(Crossing(arcs=(e, a, b, c), sign=-1))
        else:
            crossings.append(Crossing(arcs=(b, c, e, a), sign=1))
    braid = None
    if d.braid is not None:
        braid = BraidWord(strands=d.braid.strands, word=tuple(-w for w in d.braid.word))
    return d.model_copy(update={"crossings": tuple(crossings), "braid": braid})


def add_split_meridians(d: AnnularDiagram) -> AnnularDiagram:
    """
    Add two crossingless meridian circles innermost, marking the innermost one.

    Both meridians have winding +1, so the ray still meets the link an odd
    number of times exactly when it did before.
    """
    if d.meridians:
        raise InvariantViolation("diagram already carries meridians", witness=d.meridians)
    top = max(arc.label for arc in d.arcs)
    inner, outer = top + 1, top + 2
    arcs = (Arc(label=inner, ray_count=1), Arc(label=outer, ray_count=1)) + tuple(d.arcs)
    return d.model_copy(update={"arcs": arcs, "marked_arc": inner, "meridians": 2})


def relabel(d: AnnularDiagram, offset: int) -> AnnularDiagram:
    """Shift every arc label by `offset`."""
    return AnnularDiagram(
        crossings=tuple(
            Crossing(arcs=tuple(label + offset for label in c.arcs), sign=c.sign) for c in d.crossings
        ),
        arcs=tuple(arc.model_copy(update={"label": arc.label + offset}) for arc in d.arcs),
        marked_arc=d.marked_arc + offset,
        odd_linking=d.odd_linking,
        braid=d.braid,
        meridians=d.meridians,
    )


def split_union(inner: AnnularDiagram, outer: AnnularDiagram) -> Tuple[AnnularDiagram, int]:
    """
    Radially stacked split union: `inner` near the axis, `outer` around it.

    Crossings of `inner` come first and keep their arc labels; `outer` is
    relabeled by the returned offset. The marked arc is that of `inner`.
    """
    offset = max(arc.label for arc in inner.arcs) + 1
    shifted = relabel(outer, offset)
    union = AnnularDiagram(
        crossings=inner.crossings + shifted.crossings,
        arcs=inner.arcs + shifted.arcs,
        marked_arc=inner.marked_arc,
        odd_linking=(inner.ray_intersections + outer.ray_intersections) % 2 == 1,
    )
    return union, offset


def disc_diagram(d: AnnularDiagram) -> AnnularDiagram:
    """
    The same diagram with the axis moved out to the unbounded face.

    No arc meets the ray any more, so every component winds zero times and
    every resolution circle is trivial.
    """
    arcs = tuple(arc.model_copy(update={"ray_count": 0}) for arc in d.arcs)
    return d.model_copy(update={"arcs": arcs, "odd_linking": False, "braid": None})


class _Segment:
    """A strand of a partial resolution between two unresolved crossings."""

    def __init__(self, start, end, winding, old_arcs):
        self.start = start
        self.end = end
        self.winding = winding
        self.old_arcs = old_arcs


def _walk_segment(index: DiagramIndex, values: Mapping[int, int], start) -> _Segment:
    """Follow arcs from an endpoint of an unresolved crossing through resolved crossings."""
    endpoint = start
    winding = 0
    old_arcs = []
    while True:
        arc = index.arc_at(endpoint)
        other = index.other_end(endpoint)
        old_arcs.append(arc)
        # leaving through a tail endpoint means travelling along the arc
        winding += index.winding[arc] if index.tail[arc] == endpoint else -index.winding[arc]
        x, s = other
        if x not in values:
            return _Segment(start, other, winding, old_arcs)
        endpoint = (x, smoothing_partner(s, values[x]))


def _closed_loops(index: DiagramIndex, values: Mapping[int, int], seen) -> List[Tuple[int, List[int]]]:
    """Circles made entirely of resolved crossings, as (winding, arcs)."""
    loops = []
    for start in sorted(index.head):
        if start in seen:
            continue
        endpoint = index.tail[start]
        winding = 0
        arcs = []
        while True:
            arc = index.arc_at(endpoint)
            seen.add(arc)
            arcs.append(arc)
            winding += index.winding[arc] if index.tail[arc] == endpoint else -index.winding[arc]
            x, s = index.other_end(endpoint)
            endpoint = (x, smoothing_partner(s, values[x]))
            if index.arc_at(endpoint) == start:
                break
        loops.append((winding, arcs))
    return loops


def partial_resolve(d: AnnularDiagram, assignment: Mapping[int, int]) -> AnnularDiagram:
    """
    Resolve the crossings in `assignment` and return the remaining diagram.

    Strands through resolved crossings merge into single arcs whose ray
    counts add up along the walk. Every component is re-oriented (keeping
    the old direction where possible), so remaining crossings may change
    sign. The remaining crossings keep their relative order.
    """
    index = diagram_index(d)
    values = {x: v for x, v in assignment.items()}
    for x, v in values.items():
        if not 0 <= x < d.crossing_count or v not in (0, 1):
            raise InvariantViolation("invalid partial resolution", witness=(x, v))
    remaining = [x for x in range(d.crossing_count) if x not in values]

    segments: List[_Segment] = []
    by_endpoint: Dict[Tuple[int, int], int] = {}
    for x in remaining:
        for s in range(4):
            if (x, s) in by_endpoint:
                continue
            segment = _walk_segment(index, values, (x, s))
            by_endpoint[segment.start] = len(segments)
            by_endpoint[segment.end] = len(segments)
            segments.append(segment)

    seen = {arc for segment in segments for arc in segment.old_arcs}
    loops = _closed_loops(index, values, seen)

    # orient each component running straight through unresolved crossings
    direction: Dict[int, Tuple[Tuple[int, int], Tuple[int, int]]] = {}
    for first in range(len(segments)):
        if first in direction:
            continue
        segment = segments[first]
        keep = index.tail[segment.old_arcs[0]] == segment.start
        begin, end = (segment.start, segment.end) if keep else (segment.end, segment.start)
        current = first
        while current not in direction:
            direction[current] = (begin, end)
            x, s = end
            begin = (x, (s + 2) % 4)
            current = by_endpoint[begin]
            seg = segments[current]
            end = seg.end if seg.start == begin else seg.start

    labels: Dict[int, int] = {}
    arcs: List[Arc] = []
    for number, segment in enumerate(segments):
        begin, _ = direction[number]
        winding = segment.winding if begin == segment.start else -segment.winding
        labels[number] = number
        arcs.append(Arc(label=number, ray_count=winding))
    loop_labels: List[Tuple[int, List[int]]] = []
    for winding, old in loops:
        label = len(arcs)
        arcs.append(Arc(label=label, ray_count=winding))
        loop_labels.append((label, old))
    for old in d.loop_labels:
        label = len(arcs)
        arcs.append(Arc(label=label, ray_count=index.winding[old]))
        loop_labels.append((label, [old]))

    crossings: List[Crossing] = []
    for x in remaining:
        slots = [by_endpoint[(x, s)] for s in range(4)]
        incoming = [direction[slots[s]][1] == (x, s) for s in range(4)]
        if not incoming[0]:
            slots = slots[2:] + slots[:2]
            incoming = incoming[2:] + incoming[:2]
        sign = 1 if incoming[3] else -1
        crossings.append(Crossing(arcs=tuple(slots), sign=sign))

    marked: Optional[int] = None
    for number, segment in enumerate(segments):
        if d.marked_arc in segment.old_arcs:
            marked = number
    for label, old in loop_labels:
        if d.marked_arc in old:
            marked = label
    if marked is None:
        raise InvariantViolation("marked arc lost in partial resolution", witness=d.marked_arc)

    logger.debug("partial resolution of %d crossings leaves %d", len(values), len(remaining))
    return AnnularDiagram(
        crossings=tuple(crossings),
        arcs=tuple(arcs),
        marked_arc=marked,
        odd_linking=d.odd_linking,
        meridians=d.meridians,
    )
