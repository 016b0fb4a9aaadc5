"""
Resolution-tree leaves of a connected diagram.

Starting from the whole diagram, resolve the first crossing (in input
order) both of whose smoothings stay connected and recurse on both
halves. A node where no crossing qualifies is a leaf; completing it by
the unique connected smoothing at each remaining crossing gives a
one-circle resolution, and the partially resolved diagram is a twisted
unknot.
"""

import itertools
import logging
from typing import Dict, List, Optional

from diagram.operations import partial_resolve
from diagram.planar import goeritz, is_alternating
from diagram.resolutions import check_capacity, is_connected, resolve
from models.diagram import AnnularDiagram
from models.errors import DisconnectedDiagramError, InvariantViolation
from models.results import CheckResult, SpanningLeaf, SpanningReport

from .euler import EulerPolynomial, euler_from_homology
from .homology import skein_homology

logger = logging.getLogger(__name__)


def _grow(d: AnnularDiagram, assignment: Dict[int, int]) -> List[Dict[int, int]]:
    for x in range(d.crossing_count):
        if x in assignment:
            continue
        zero, one = {**assignment, x: 0}, {**assignment, x: 1}
        if is_connected(d, zero) and is_connected(d, one):
            return _grow(d, zero) + _grow(d, one)
    return [assignment]


def _complete(d: AnnularDiagram, assignment: Dict[int, int]) -> tuple:
    values = dict(assignment)
    for x in range(d.crossing_count):
        if x in values:
            continue
        options = [v for v in (0, 1) if is_connected(d, {**values, x: v})]
        if not options:
            raise InvariantViolation("leaf crossing disconnects under both smoothings", witness=x)
        values[x] = options[0]
    word = tuple(values[x] for x in range(d.crossing_count))
    if len(resolve(d, word).circles) != 1:
        raise InvariantViolation("leaf completion is not a single circle", witness=word)
    return word


def tree_leaves(d: AnnularDiagram, cap: Optional[int] = None) -> List[SpanningLeaf]:
    """
    Leaves of the resolution tree in depth-first order, 0-branch first.

    Raises:
        DisconnectedDiagramError: If the diagram is split
    """
    check_capacity(d, cap)
    if not is_connected(d):
        raise DisconnectedDiagramError("resolution tree needs a connected diagram")
    leaves = []
    for assignment in _grow(d, {}):
        completion = _complete(d, assignment)
        leaf = partial_resolve(d, assignment)
        leaves.append(SpanningLeaf(
            partial={int(x): v for x, v in sorted(assignment.items())},
            completion=completion,
            diagram=leaf,
            writhe=leaf.writhe,
            r=sum(completion),
            r_partial=sum(assignment.values()),
            twist_profile=(leaf.n_plus, leaf.n_minus),
        ))
    logger.debug("%d leaves for %d crossings", len(leaves), d.crossing_count)
    return leaves


def spanning_leaves(d: AnnularDiagram, cap: Optional[int] = None) -> SpanningReport:
    """
    Leaves plus the checks tying them to the homology of the whole diagram.

    Leaf homologies are taken unshifted and moved by t^r q^r for the
    crossings resolved by 1 on the way to the leaf.
    """
    leaves = tree_leaves(d, cap)
    full = skein_homology(d, shifted=False, cap=cap)

    assembled = EulerPolynomial()
    leaf_total = 0
    for leaf in leaves:
        table = skein_homology(leaf.diagram, shifted=False, cap=cap)
        leaf_total += table.total
        assembled = assembled + euler_from_homology(table).shifted(leaf.r_partial, leaf.r_partial, 0)

    checks = [
        CheckResult(
            name="leaf Euler characteristics assemble to the whole",
            passed=assembled.at_t_minus_one() == euler_from_homology(full).at_t_minus_one(),
            detail=str(assembled.at_t_minus_one()),
        ),
        CheckResult(
            name="total rank bounded by leaf ranks",
            passed=full.total <= leaf_total,
            detail=f"{full.total} <= {leaf_total}",
        ),
    ]
    one_circle = sum(
        1 for word in itertools.product((0, 1), repeat=d.crossing_count) if len(resolve(d, word).circles) == 1
    )
    checks.append(CheckResult(name="one leaf per one-circle resolution", passed=one_circle == len(leaves),
                              detail=f"{len(leaves)} leaves, {one_circle} one-circle resolutions"))
    if is_alternating(d) and d.ray_intersections % 2:
        rs = sorted({leaf.r for leaf in leaves})
        sigma = goeritz(d).signature
        checks.append(CheckResult(name="r constant over leaves", passed=len(rs) == 1, detail=str(rs)))
        checks.append(CheckResult(name="r - n_plus equals signature",
                                  passed=len(rs) == 1 and rs[0] - d.n_plus == sigma,
                                  detail=f"r={rs}, n_plus={d.n_plus}, sigma={sigma}"))
    return SpanningReport(crossing_order=list(range(d.crossing_count)), leaves=leaves, checks=checks)
