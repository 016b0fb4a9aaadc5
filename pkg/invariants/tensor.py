"""
Split unions of radially stacked diagrams.

The skein complex of a split union is the tensor product of the factors'
complexes, so its homology is the graded convolution of the factors'
tables and T-values of product classes add.
"""

import logging
from collections import defaultdict
from typing import Dict, Iterable, Optional, Tuple

from diagram.operations import split_union
from diagram.resolutions import resolve
from f2algebra.homology import homology
from models.diagram import AnnularDiagram
from models.results import SuiteReport, TrigradedRanks
from models.run_config import ComplexMode
from skein.complex import SkeinComplex, build

from .homology import ranks_of
from .tvalues import class_representative, filtration_level

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]

UNKNOT_KHOVANOV = {(0, 1): 1, (0, -1): 1}


def convolve(first: TrigradedRanks, second: TrigradedRanks) -> Dict[Triple, int]:
    """Rank table of the tensor product of two graded vector spaces over F2."""
    out: Dict[Triple, int] = defaultdict(int)
    for (i1, j1, k1), r1 in first.as_dict().items():
        for (i2, j2, k2), r2 in second.as_dict().items():
            out[(i1 + i2, j1 + j2, k1 + k2)] += r1 * r2
    return dict(out)


def tensor_cycle(
    union: SkeinComplex,
    left: SkeinComplex,
    right: SkeinComplex,
    offset: int,
    first: Iterable[int],
    second: Iterable[int],
) -> Tuple[int, ...]:
    """
    The chain z1 (x) z2 of the union complex.

    Union circles are matched to factor circles by their member arcs, the
    right factor's arcs being relabeled by `offset`.
    """
    second = list(second)
    out = set()
    for g1 in first:
        s1 = left.states[g1]
        config1 = resolve(left.diagram, s1.word)
        for g2 in second:
            s2 = right.states[g2]
            config2 = resolve(right.diagram, s2.word)
            label_of = {circle.members: label for circle, label in zip(config1.circles, s1.labels)}
            for circle, label in zip(config2.circles, s2.labels):
                label_of[tuple(m + offset for m in circle.members)] = label
            word = s1.word + s2.word
            config = resolve(union.diagram, word)
            labels = tuple(label_of[circle.members] for circle in config.circles)
            out ^= {union.state_of(word, labels)}
    return tuple(sorted(out))


def _khovanov(C: SkeinComplex) -> Dict[Tuple[int, int], int]:
    result = homology(C.filtered(ComplexMode.KHOVANOV))
    return {(degree, key[0]): rank for (degree, key), rank in result.ranks.items() if rank}


def split_union_check(
    inner: AnnularDiagram,
    outer: AnnularDiagram,
    cap: Optional[int] = None,
) -> SuiteReport:
    """
    Compare the union's skein homology with the convolution of the factors'.

    When both factors are unknots, T of every product u(+/-) (x) u(+/-) is
    compared with the sum of the factors' T-values.
    """
    union_diagram, offset = split_union(inner, outer)
    report = SuiteReport(suite="tensor")

    left = build(inner, mode=ComplexMode.KHOVANOV.value, cap=cap)
    right = build(outer, mode=ComplexMode.KHOVANOV.value, cap=cap)
    union = build(union_diagram, mode=ComplexMode.KHOVANOV.value, cap=cap)
    expected = convolve(ranks_of(left), ranks_of(right))
    actual = ranks_of(union).as_dict()
    report.add("union homology is the tensor product", actual == expected,
               f"{sum(actual.values())} vs {sum(expected.values())}")

    if _khovanov(left) != UNKNOT_KHOVANOV or _khovanov(right) != UNKNOT_KHOVANOV:
        logger.debug("T-additivity skipped: a factor is not an unknot")
        return report

    F1 = left.filtered(ComplexMode.KHOVANOV)
    F2 = right.filtered(ComplexMode.KHOVANOV)
    F = union.filtered(ComplexMode.KHOVANOV)
    for j1 in (1, -1):
        z1 = class_representative(F1, (0, j1))
        for j2 in (1, -1):
            z2 = class_representative(F2, (0, j2))
            expected_level = filtration_level(F1, z1) + filtration_level(F2, z2)
            level = filtration_level(F, tensor_cycle(union, left, right, offset, z1, z2))
            report.add(f"T additive on u{'+' if j1 > 0 else '-'} x u{'+' if j2 > 0 else '-'}",
                       level == expected_level, f"{level} vs {expected_level}")
    return report
