"""
Filtration levels T_L of Khovanov homology classes.

T_L(z) is the least k such that the class of z is represented by a cycle
of the subcomplex spanned by generators of annular grading at most k.
Membership is decided by reducing z against boundaries plus the cycles of
each truncation, so classes inside higher-rank groups are handled exactly.
"""

import logging
from typing import Iterable, Optional, Tuple

from f2algebra.complexes import FilteredComplexF2
from f2algebra.homology import boundary_basis, cycle_basis, homology
from f2algebra.matrix import bits_to_indices, indices_to_bits
from models.diagram import AnnularDiagram
from models.errors import TargetClassError
from models.run_config import ComplexMode
from skein.complex import SkeinComplex, build

logger = logging.getLogger(__name__)

ClassSelector = Tuple[int, int]


def filtration_level(F: FilteredComplexF2, cycle: Iterable[int]) -> int:
    """
    T of an explicit cycle of a complex filtered by the annular grading.

    Raises:
        TargetClassError: If the chain is zero, not a cycle, or a boundary
    """
    z = indices_to_bits(cycle)
    if not z:
        raise TargetClassError("target chain is zero")
    members = bits_to_indices(z)
    if F.apply(z):
        raise TargetClassError(f"target chain is not a cycle: {members}")
    degree = F.degrees[members[0]]
    key = F.block_key(members[0])
    block = [g for g in range(len(F)) if F.block_key(g) == key]

    boundaries = boundary_basis(F, degree, among=block)
    if boundaries.reduce(z)[0] == 0:
        raise TargetClassError(f"target cycle is a boundary: {members}")
    in_degree = [g for g in block if F.degrees[g] == degree]
    for level in sorted({F.filtrations[g][0] for g in in_degree}):
        truncated = [g for g in in_degree if F.filtrations[g][0] <= level]
        span = boundaries.copy()
        for vector in cycle_basis(F, degree, truncated):
            span.add(vector)
        if span.reduce(z)[0] == 0:
            return level
    raise TargetClassError("target class not reached by any truncation")


def class_representative(F: FilteredComplexF2, target: ClassSelector) -> Tuple[int, ...]:
    """
    The representative cycle of the rank-one Khovanov group at (i, j).

    Raises:
        TargetClassError: If the group is absent or has rank other than one
    """
    i, j = target
    reps = homology(F).representatives.get((i, (j,)), [])
    if len(reps) != 1:
        raise TargetClassError(f"homology at (i, j) = {target} has rank {len(reps)}, expected 1")
    return reps[0]


def cycle_t_value(C: SkeinComplex, cycle: Iterable[int]) -> int:
    """T of an explicit cycle of an assembled complex (generator indices)."""
    return filtration_level(C.filtered(ComplexMode.KHOVANOV), cycle)


def t_value(
    d: AnnularDiagram,
    target: ClassSelector,
    reduced: bool = False,
    meridians: bool = False,
    mirror_image: bool = False,
    cap: Optional[int] = None,
) -> int:
    """
    T_L of the class generating the rank-one Khovanov group at (i, j).

    Example:
        >>> t_value(parse_braid_word("1:"), (0, 1))
        1
    """
    C = build(d, reduced, meridians, mirror_image, True, ComplexMode.KHOVANOV.value, cap)
    F = C.filtered(ComplexMode.KHOVANOV)
    level = filtration_level(F, class_representative(F, target))
    logger.debug("T value %d at %s", level, target)
    return level


def unknot_t_values(d: AnnularDiagram, mirror_image: bool = False, cap: Optional[int] = None) -> Tuple[int, int]:
    """(T(u+), T(u-)) for an unknot diagram, u+ and u- sitting at j = 1 and j = -1."""
    C = build(d, False, False, mirror_image, True, ComplexMode.KHOVANOV.value, cap)
    F = C.filtered(ComplexMode.KHOVANOV)
    return (
        filtration_level(F, class_representative(F, (0, 1))),
        filtration_level(F, class_representative(F, (0, -1))),
    )
