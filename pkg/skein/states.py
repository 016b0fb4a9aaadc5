"""
Enhanced Kauffman states: a complete resolution plus a sign on each circle.
"""

import itertools
import logging
from typing import List, NamedTuple, Optional, Tuple

from diagram.resolutions import all_resolutions
from models.diagram import AnnularDiagram, CircleConfiguration

logger = logging.getLogger(__name__)


class EnhancedState(NamedTuple):
    """
    A generator of the skein complex.

    `labels` follows the circle order of the resolution (marked, then
    non-trivial, then trivial). Gradings are unshifted.
    """
    word: Tuple[int, ...]
    labels: Tuple[int, ...]
    I: int
    tau: int
    psi: int

    @property
    def J(self) -> int:
        return self.I + self.tau + self.psi

    @property
    def key(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return (self.word, self.labels)


def state_gradings(config: CircleConfiguration, labels: Tuple[int, ...]) -> Tuple[int, int]:
    """(tau, psi) of a labelling."""
    tau = sum(label for circle, label in zip(config.circles, labels) if circle.trivial)
    psi = sum(label for circle, label in zip(config.circles, labels) if not circle.trivial)
    return tau, psi


def make_state(config: CircleConfiguration, labels: Tuple[int, ...]) -> EnhancedState:
    tau, psi = state_gradings(config, labels)
    return EnhancedState(config.word, tuple(labels), config.degree, tau, psi)


def labellings(config: CircleConfiguration, reduced: bool) -> List[Tuple[int, ...]]:
    """All sign choices, + before -, with the marked circle forced + when reduced."""
    out = []
    for labels in itertools.product((1, -1), repeat=len(config.circles)):
        if reduced and any(c.marked and l < 0 for c, l in zip(config.circles, labels)):
            continue
        out.append(labels)
    return out


def enumerate_states(d: AnnularDiagram, reduced: bool = False, cap: Optional[int] = None) -> List[EnhancedState]:
    """
    Every enhanced state of the diagram in lexicographic order.

    Raises:
        CapacityError: If the diagram has more crossings than the cube cap
    """
    states = [
        make_state(config, labels)
        for config in all_resolutions(d, cap)
        for labels in labellings(config, reduced)
    ]
    logger.debug("%d enhanced states for %d crossings", len(states), d.crossing_count)
    return states
