"""
Filtered chain maps and their mapping cones.

The cone of f: A -> B is A[1] + B with differential
(a, b) -> (d_A a, f a + d_B b); a generator of A in degree n sits in
cone degree n - 1. Filtrations are inherited levelwise.
"""

import logging
from collections import defaultdict
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from models.errors import InvariantViolation

from .complexes import FilteredComplexF2, GradedComplexF2
from .homology import homology, induced_rank
from .matrix import indices_to_bits

logger = logging.getLogger(__name__)


class FilteredChainMap:
    """
    A map between filtered complexes given by the image of every source generator.

    Args:
        source: domain A
        target: codomain B
        columns: f(a) as target generator indices, per source generator
        degree: homological degree of the map (0 for chain maps, -1 for homotopies)
    """

    def __init__(
        self,
        source: FilteredComplexF2,
        target: FilteredComplexF2,
        columns: Sequence[Iterable[int]],
        degree: int = 0,
        validate: bool = True,
    ):
        self.source = source
        self.target = target
        self.columns: Tuple[Tuple[int, ...], ...] = tuple(tuple(sorted(set(c))) for c in columns)
        self.degree = degree
        if len(self.columns) != len(source):
            raise InvariantViolation("map needs one column per source generator")
        if source.steps != target.steps:
            raise InvariantViolation("source and target filtrations use different steps")
        if validate:
            self.validate_filtered()
            if degree == 0:
                self.validate_chain()

    def image_bits(self, g: int) -> int:
        return indices_to_bits(self.columns[g])

    def apply(self, vector: int) -> int:
        out = 0
        g = 0
        while vector:
            if vector & 1:
                out ^= self.image_bits(g)
            vector >>= 1
            g += 1
        return out

    def validate_filtered(self) -> None:
        for g, images in enumerate(self.columns):
            for t in images:
                if self.target.degrees[t] != self.source.degrees[g] + self.degree:
                    raise InvariantViolation("map has the wrong homological degree", witness=self.source.names[g])
                for which in range(self.source.filtration_count):
                    if self.target.filtrations[t][which] > self.source.filtrations[g][which]:
                        raise InvariantViolation("map is not filtered", witness=self.source.names[g])

    def validate_chain(self) -> None:
        for g in range(len(self.source)):
            left = self.apply(self.source.image_bits(g))
            right = self.target.apply(self.image_bits(g))
            if left != right:
                raise InvariantViolation("map does not commute with the differentials", witness=self.source.names[g])

    def graded_part(self, which: int = 0) -> Tuple[Tuple[int, ...], ...]:
        """Columns of the filtration-preserving component of the map."""
        return tuple(
            tuple(t for t in images
                  if self.target.filtrations[t][which] == self.source.filtrations[g][which])
            for g, images in enumerate(self.columns)
        )


def mapping_cone(f: FilteredChainMap) -> FilteredComplexF2:
    """
    Mapping cone of a filtered chain map.

    Generators are those of A (degree shifted down by one) followed by those
    of B. Names are tagged ("A", name) and ("B", name).
    """
    A, B = f.source, f.target
    offset = len(A)
    degrees = [A.degrees[g] - 1 for g in range(len(A))] + list(B.degrees)
    differential: List[Tuple[int, ...]] = []
    for g in range(len(A)):
        differential.append(tuple(A.differential[g]) + tuple(offset + t for t in f.columns[g]))
    for g in range(len(B)):
        differential.append(tuple(offset + t for t in B.differential[g]))
    filtrations = list(A.filtrations) + list(B.filtrations)
    gradings, preserved = _joint_gradings(A, B)
    names = [("A", A.names[g]) for g in range(len(A))] + [("B", B.names[g]) for g in range(len(B))]
    cone = FilteredComplexF2(degrees, differential, filtrations, A.steps, gradings, preserved, names)
    logger.debug("mapping cone with %d generators", len(cone))
    return cone


def _joint_gradings(*parts: GradedComplexF2):
    widths = {len(part.gradings[0]) for part in parts if len(part)}
    if len(widths) > 1:
        raise InvariantViolation("cone pieces carry different auxiliary gradings")
    gradings = [g for part in parts for g in part.gradings]
    preserved = next((part.preserved for part in parts if len(part)), ())
    return gradings, preserved


def iterated_cone(
    f12: FilteredChainMap,
    f23: FilteredChainMap,
    h13: FilteredChainMap,
) -> FilteredComplexF2:
    """
    Iterated mapping cone of A1 -> A2 -> A3 with a null-homotopy of the composite.

    The homotopy h13 has degree -1 and must satisfy f23 f12 = d3 h13 + h13 d1.
    The complex is A1[2] + A2[1] + A3 with
    a1 -> d1 a1 + f12 a1 + h13 a1, a2 -> d2 a2 + f23 a2, a3 -> d3 a3.
    """
    A1, A2, A3 = f12.source, f12.target, f23.target
    if f23.source is not A2 or h13.source is not A1 or h13.target is not A3:
        raise InvariantViolation("iterated cone maps do not compose")
    if h13.degree != -1:
        raise InvariantViolation("homotopy must have degree -1", witness=h13.degree)
    for g in range(len(A1)):
        composite = f23.apply(f12.image_bits(g))
        homotopy = A3.apply(h13.image_bits(g)) ^ h13.apply(A1.image_bits(g))
        if composite != homotopy:
            raise InvariantViolation("homotopy equation fails", witness=A1.names[g])

    o2, o3 = len(A1), len(A1) + len(A2)
    degrees = (
        [A1.degrees[g] - 2 for g in range(len(A1))]
        + [A2.degrees[g] - 1 for g in range(len(A2))]
        + list(A3.degrees)
    )
    differential: List[Tuple[int, ...]] = []
    for g in range(len(A1)):
        differential.append(
            tuple(A1.differential[g])
            + tuple(o2 + t for t in f12.columns[g])
            + tuple(o3 + t for t in h13.columns[g])
        )
    for g in range(len(A2)):
        differential.append(tuple(o2 + t for t in A2.differential[g]) + tuple(o3 + t for t in f23.columns[g]))
    for g in range(len(A3)):
        differential.append(tuple(o3 + t for t in A3.differential[g]))
    filtrations = list(A1.filtrations) + list(A2.filtrations) + list(A3.filtrations)
    gradings, preserved = _joint_gradings(A1, A2, A3)
    names = (
        [("A1", n) for n in A1.names] + [("A2", n) for n in A2.names] + [("A3", n) for n in A3.names]
    )
    return FilteredComplexF2(degrees, differential, filtrations, A1.steps, gradings, preserved, names)


def _level_piece(C: FilteredComplexF2, level: int, which: int) -> Tuple[GradedComplexF2, Dict[int, int]]:
    members = [g for g in range(len(C)) if C.filtrations[g][which] == level]
    position = {g: index for index, g in enumerate(members)}
    differential = [
        tuple(position[t] for t in C.differential[g] if t in position and C.jump(g, t, which) == 0)
        for g in members
    ]
    piece = GradedComplexF2([C.degrees[g] for g in members], differential, preserved=())
    return piece, position


def cone_of_page_one(f: FilteredChainMap, which: int = 0) -> Dict[Tuple[int, int], int]:
    """
    Ranks of the cone of the map induced on E^1, per (cone degree, level).

    Computed levelwise from the associated graded map through the long exact
    sequence: rank H^m(cone) = h^{m+1}(A) - r^{m+1} + h^m(B) - r^m, where r is
    the rank of the induced map.
    """
    A, B = f.source, f.target
    graded = f.graded_part(which)
    levels = sorted({fl[which] for fl in A.filtrations} | {fl[which] for fl in B.filtrations})
    out: Dict[Tuple[int, int], int] = defaultdict(int)
    for level in levels:
        piece_a, pos_a = _level_piece(A, level, which)
        piece_b, pos_b = _level_piece(B, level, which)
        columns = [
            tuple(pos_b[t] for t in graded[g] if t in pos_b)
            for g in sorted(pos_a, key=pos_a.get)
        ]
        h_a = homology(piece_a).by_degree()
        h_b = homology(piece_b).by_degree()
        ranks = induced_rank(columns, piece_a, piece_b)
        degrees = set(h_a) | set(h_b)
        for n in degrees:
            # A^n contributes to cone degree n - 1, B^n to cone degree n
            out[(n - 1, level)] += h_a.get(n, 0) - ranks.get(n, 0)
            out[(n, level)] += h_b.get(n, 0) - ranks.get(n, 0)
    return {key: value for key, value in out.items() if value}
