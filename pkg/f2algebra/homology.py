"""
Homology of graded complexes over F2 with explicit cycle representatives.

Work is split by the gradings the differential preserves; within a block
columns are reduced with the lowest-index pivot rule so results are
deterministic.
"""

import logging
from collections import defaultdict
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from models.errors import InvariantViolation

from .complexes import GradedComplexF2
from .matrix import EchelonBasisF2, bits_to_indices

logger = logging.getLogger(__name__)

HomologyKey = Tuple[int, Tuple[int, ...]]


class HomologyResult:
    """
    Ranks and representatives keyed by (degree, preserved gradings).

    Representatives are cycles given as sorted tuples of generator indices.
    """

    def __init__(self):
        self.ranks: Dict[HomologyKey, int] = {}
        self.representatives: Dict[HomologyKey, List[Tuple[int, ...]]] = {}

    def add(self, key: HomologyKey, cycle: Tuple[int, ...]) -> None:
        self.ranks[key] = self.ranks.get(key, 0) + 1
        self.representatives.setdefault(key, []).append(cycle)

    @property
    def total(self) -> int:
        return sum(self.ranks.values())

    def by_degree(self) -> Dict[int, int]:
        out: Dict[int, int] = defaultdict(int)
        for (degree, _), rank in self.ranks.items():
            out[degree] += rank
        return dict(out)


class BlockReduction:
    """Kernel and image data for one block of a complex."""

    def __init__(self, C: GradedComplexF2, members: Sequence[int]):
        self.C = C
        self.by_degree: Dict[int, List[int]] = defaultdict(list)
        for g in sorted(members):
            self.by_degree[C.degrees[g]].append(g)
        self.local = {
            g: index for gens in self.by_degree.values() for index, g in enumerate(gens)
        }
        self.kernels: Dict[int, List[int]] = {}
        self.images: Dict[int, EchelonBasisF2] = defaultdict(EchelonBasisF2)
        for degree in sorted(self.by_degree):
            self._reduce_degree(degree)

    def to_local(self, vector_indices: Iterable[int]) -> int:
        out = 0
        for g in vector_indices:
            out ^= 1 << self.local[g]
        return out

    def to_global(self, degree: int, vector: int) -> Tuple[int, ...]:
        gens = self.by_degree[degree]
        return tuple(sorted(gens[i] for i in bits_to_indices(vector)))

    def _reduce_degree(self, degree: int) -> None:
        image = EchelonBasisF2()
        kernel: List[int] = []
        for index, g in enumerate(self.by_degree[degree]):
            column = self.to_local(self.C.differential[g])
            residual, combo = image.reduce(column, 1 << index)
            if residual:
                image.add(residual, combo)
            else:
                kernel.append(combo)
        self.kernels[degree] = kernel
        self.images[degree + 1] = image

    def boundaries(self, degree: int) -> EchelonBasisF2:
        return self.images.get(degree, EchelonBasisF2())


def homology(C: GradedComplexF2) -> HomologyResult:
    """
    Homology ranks and representative cycles of a complex.

    Args:
        C: A validated complex (d squared zero)

    Returns:
        HomologyResult keyed by (degree, preserved gradings)

    Raises:
        InvariantViolation: If d squared is nonzero, with a witness generator
    """
    witness = C.square_witness()
    if witness is not None:
        raise InvariantViolation("d squared is nonzero", witness=C.names[witness])

    result = HomologyResult()
    for key, members in C.blocks().items():
        block = BlockReduction(C, members)
        for degree in sorted(block.by_degree):
            boundaries = block.boundaries(degree)
            quotient = boundaries.copy()
            expected = len(block.kernels[degree]) - len(boundaries)
            found = 0
            for cycle in block.kernels[degree]:
                if quotient.add(cycle):
                    result.add((degree, key), block.to_global(degree, cycle))
                    found += 1
            if found != expected:
                raise InvariantViolation(
                    "kernel and image dimensions are inconsistent", witness=(degree, key)
                )
        logger.debug("block %s: %d generators", key, len(members))
    return result


def is_cycle(C: GradedComplexF2, cycle: Iterable[int]) -> bool:
    vector = 0
    for g in cycle:
        vector ^= 1 << g
    return C.apply(vector) == 0


def boundary_basis(C: GradedComplexF2, degree: int, among: Optional[Iterable[int]] = None) -> EchelonBasisF2:
    """Basis of the boundaries in a degree, as bitsets over global generator indices."""
    basis = EchelonBasisF2()
    pool = range(len(C)) if among is None else among
    for g in pool:
        if C.degrees[g] == degree - 1:
            basis.add(C.image_bits(g))
    return basis


def cycle_basis(C: GradedComplexF2, degree: int, among: Iterable[int]) -> List[int]:
    """
    Basis of the cycles of d restricted to the span of `among` in one degree.

    The span must be closed under d for the result to be a subcomplex's
    cycles; targets outside `among` still count toward d.
    """
    gens = [g for g in sorted(among) if C.degrees[g] == degree]
    image = EchelonBasisF2()
    cycles: List[int] = []
    for index, g in enumerate(gens):
        residual, combo = image.reduce(C.image_bits(g), 1 << index)
        if residual:
            image.add(residual, combo)
        else:
            vector = 0
            for i in bits_to_indices(combo):
                vector ^= 1 << gens[i]
            cycles.append(vector)
    return cycles


def induced_rank(
    columns: Sequence[Iterable[int]],
    source: GradedComplexF2,
    target: GradedComplexF2,
) -> Dict[int, int]:
    """
    Rank of the map induced on homology by a degree-preserving chain map, per degree.

    Args:
        columns: image in `target` of each generator of `source`
        source: domain complex
        target: codomain complex
    """
    reps = homology(source)
    out: Dict[int, int] = defaultdict(int)
    degrees = sorted({degree for degree, _ in reps.ranks})
    for degree in degrees:
        boundaries = boundary_basis(target, degree)
        span = boundaries.copy()
        base = len(span)
        for (d, _), cycles in reps.representatives.items():
            if d != degree:
                continue
            for cycle in cycles:
                image = 0
                for g in cycle:
                    for t in columns[g]:
                        image ^= 1 << t
                span.add(image)
        if len(span) - base:
            out[degree] = len(span) - base
    return dict(out)
