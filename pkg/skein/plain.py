"""
Ordinary Khovanov complex, built without any annular data.

Circles come from a union-find over arcs, so this path shares nothing with
the annular circle tracer and serves as an independent check of the
Khovanov-mode skein complex.
"""

import itertools
import logging
from typing import Dict, FrozenSet, List, Optional, Tuple

from diagram.resolutions import check_capacity
from f2algebra.complexes import GradedComplexF2
from models.diagram import SMOOTHING_PAIRS, AnnularDiagram

logger = logging.getLogger(__name__)

PlainCircle = FrozenSet[int]


def plain_circles(d: AnnularDiagram, word: Tuple[int, ...]) -> List[PlainCircle]:
    """Circles of a resolution as arc sets, ordered by least arc."""
    parent = {arc.label: arc.label for arc in d.arcs}

    def find(label):
        while parent[label] != label:
            parent[label] = parent[parent[label]]
            label = parent[label]
        return label

    for crossing, value in zip(d.crossings, word):
        for first, second in SMOOTHING_PAIRS[value]:
            ra, rb = find(crossing.arcs[first]), find(crossing.arcs[second])
            if ra != rb:
                parent[ra] = rb
    groups: Dict[int, set] = {}
    for arc in d.arcs:
        groups.setdefault(find(arc.label), set()).add(arc.label)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def _merge(a: int, b: int) -> List[int]:
    if a > 0 and b > 0:
        return [1]
    if a > 0 or b > 0:
        return [-1]
    return []


def _split(a: int) -> List[Tuple[int, int]]:
    return [(1, -1), (-1, 1)] if a > 0 else [(-1, -1)]


def plain_khovanov_complex(d: AnnularDiagram, reduced: bool = False, cap: Optional[int] = None) -> GradedComplexF2:
    """
    Khovanov complex with gradings (i, j) in the usual normalization.

    In the reduced theory the circle through the marked arc is labelled +;
    with split meridians present the quantum grading drops by one more so
    that the result matches the meridian convention of the skein complex.
    """
    check_capacity(d, cap)
    c = d.crossing_count
    meridian = reduced and d.meridians > 0
    j_shift = d.n_plus - 2 * d.n_minus - (1 if meridian else 0)

    keys: List[Tuple] = []
    degrees: List[int] = []
    gradings: List[Tuple[int]] = []
    circles_of: Dict[Tuple[int, ...], List[PlainCircle]] = {}
    for word in itertools.product((0, 1), repeat=c):
        circles = plain_circles(d, word)
        circles_of[word] = circles
        for labels in itertools.product((1, -1), repeat=len(circles)):
            if reduced and any(d.marked_arc in circle and l < 0 for circle, l in zip(circles, labels)):
                continue
            keys.append((word, labels))
            degrees.append(sum(word) - d.n_minus)
            gradings.append((sum(word) + sum(labels) + j_shift,))
    index = {key: g for g, key in enumerate(keys)}

    differential: List[set] = [set() for _ in keys]
    for g, (word, labels) in enumerate(keys):
        source = circles_of[word]
        for x, value in enumerate(word):
            if value:
                continue
            successor = word[:x] + (1,) + word[x + 1:]
            target = circles_of[successor]
            gone = [n for n, circle in enumerate(source) if circle not in target]
            new = [n for n, circle in enumerate(target) if circle not in source]
            label_of = {circle: labels[n] for n, circle in enumerate(source)}
            if len(gone) == 2:
                outputs = [(out,) for out in _merge(labels[gone[0]], labels[gone[1]])]
            else:
                outputs = _split(labels[gone[0]])
            for out in outputs:
                assigned = dict(label_of)
                for n, label in zip(new, out):
                    assigned[target[n]] = label
                t = index.get((successor, tuple(assigned[circle] for circle in target)))
                if t is not None:
                    differential[g] ^= {t}
    logger.debug("plain Khovanov complex with %d generators", len(keys))
    return GradedComplexF2(degrees, differential, gradings, (0,), keys)
