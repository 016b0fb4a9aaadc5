"""
Graded, filtered and bifiltered chain complexes over F2.

Generators are indexed 0..n-1. Each has a homological degree, a tuple of
auxiliary gradings and, for filtered complexes, a tuple of filtration
values. The differential raises the degree by one and is stored as the
sorted target list of every generator.

Filtrations are descending: the differential never increases a
filtration value, and jumps f(source) - f(target) are multiples of the
declared step.
"""

import json
import logging
from collections import defaultdict
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from models.errors import InvariantViolation

from .matrix import SparseMatrixF2, bits_to_indices, indices_to_bits

logger = logging.getLogger(__name__)

Columns = Tuple[Tuple[int, ...], ...]


def _normalize_columns(differential: Sequence[Iterable[int]]) -> Columns:
    return tuple(tuple(sorted(set(targets))) for targets in differential)


class GradedComplexF2:
    """
    A bounded chain complex of F2 vector spaces with chosen generators.

    Args:
        degrees: homological degree of each generator
        differential: targets of d for each generator
        gradings: auxiliary gradings of each generator
        preserved: indexes of auxiliary gradings that d preserves
        names: optional labels used in dumps and witnesses
    """

    def __init__(
        self,
        degrees: Sequence[int],
        differential: Sequence[Iterable[int]],
        gradings: Optional[Sequence[Sequence[int]]] = None,
        preserved: Optional[Sequence[int]] = None,
        names: Optional[Sequence[object]] = None,
        validate: bool = True,
    ):
        self.degrees: Tuple[int, ...] = tuple(degrees)
        size = len(self.degrees)
        self.differential: Columns = _normalize_columns(differential)
        self.gradings: Tuple[Tuple[int, ...], ...] = (
            tuple(tuple(g) for g in gradings) if gradings is not None else tuple(() for _ in range(size))
        )
        width = len(self.gradings[0]) if size else 0
        self.preserved: Tuple[int, ...] = tuple(range(width)) if preserved is None else tuple(preserved)
        self.names: Tuple[object, ...] = tuple(names) if names is not None else tuple(range(size))
        if len(self.differential) != size or len(self.gradings) != size or len(self.names) != size:
            raise InvariantViolation("complex data has inconsistent lengths")
        if validate:
            self.validate()

    def __len__(self) -> int:
        return len(self.degrees)

    def block_key(self, g: int) -> Tuple[int, ...]:
        """Values of the preserved gradings of a generator."""
        return tuple(self.gradings[g][index] for index in self.preserved)

    def blocks(self) -> Dict[Tuple[int, ...], List[int]]:
        """Generators grouped by preserved gradings; d never leaves a block."""
        grouped: Dict[Tuple[int, ...], List[int]] = defaultdict(list)
        for g in range(len(self)):
            grouped[self.block_key(g)].append(g)
        return dict(sorted(grouped.items()))

    def generators_in_degree(self, degree: int, among: Optional[Iterable[int]] = None) -> List[int]:
        pool = range(len(self)) if among is None else among
        return [g for g in pool if self.degrees[g] == degree]

    def image_bits(self, g: int) -> int:
        return indices_to_bits(self.differential[g])

    def apply(self, vector: int) -> int:
        """Apply d to a bitset over generators."""
        out = 0
        for g in bits_to_indices(vector):
            out ^= self.image_bits(g)
        return out

    def block_matrix(self, degree: int) -> Tuple[List[int], List[int], SparseMatrixF2]:
        """The differential from degree n to n+1 as a matrix, with its row and column generators."""
        sources = self.generators_in_degree(degree)
        targets = self.generators_in_degree(degree + 1)
        position = {g: index for index, g in enumerate(targets)}
        columns = [tuple(sorted(position[t] for t in self.differential[g])) for g in sources]
        return targets, sources, SparseMatrixF2(len(targets), len(sources), columns)

    def validate(self) -> None:
        for g, targets in enumerate(self.differential):
            key = self.block_key(g)
            for t in targets:
                if not 0 <= t < len(self):
                    raise InvariantViolation("differential target out of range", witness=self.names[g])
                if self.degrees[t] != self.degrees[g] + 1:
                    raise InvariantViolation(
                        "differential must raise homological degree by exactly 1", witness=self.names[g]
                    )
                if self.block_key(t) != key:
                    raise InvariantViolation(
                        "differential changes a grading declared as preserved", witness=self.names[g]
                    )
        witness = self.square_witness()
        if witness is not None:
            raise InvariantViolation("d squared is nonzero", witness=self.names[witness])

    def square_witness(self) -> Optional[int]:
        """A generator g with d(d(g)) != 0, or None."""
        for g in range(len(self)):
            if self.apply(self.image_bits(g)):
                return g
        return None

    def with_differential(self, differential: Sequence[Iterable[int]], validate: bool = True,
                          preserved: Optional[Sequence[int]] = None) -> "GradedComplexF2":
        return GradedComplexF2(
            self.degrees, differential, self.gradings,
            self.preserved if preserved is None else preserved, self.names, validate,
        )

    def is_subcomplex(self, subset: Iterable[int]) -> bool:
        members = set(subset)
        return all(set(self.differential[g]) <= members for g in members)

    def dump(self) -> Dict:
        return {
            "generators": [
                {"index": g, "name": str(self.names[g]), "degree": self.degrees[g],
                 "gradings": list(self.gradings[g])}
                for g in range(len(self))
            ],
            "differential": [list(targets) for targets in self.differential],
            "preserved": list(self.preserved),
        }


class FilteredComplexF2(GradedComplexF2):
    """
    A graded complex with one or more descending filtrations.

    `filtrations[g]` holds one value per filtration; `steps` gives the unit
    in which jumps are measured (for example 2 for the annular grading).
    """

    def __init__(
        self,
        degrees: Sequence[int],
        differential: Sequence[Iterable[int]],
        filtrations: Sequence[Sequence[int]],
        steps: Optional[Sequence[int]] = None,
        gradings: Optional[Sequence[Sequence[int]]] = None,
        preserved: Optional[Sequence[int]] = None,
        names: Optional[Sequence[object]] = None,
        validate: bool = True,
    ):
        self.filtrations: Tuple[Tuple[int, ...], ...] = tuple(tuple(f) for f in filtrations)
        count = len(self.filtrations[0]) if self.filtrations else (len(steps) if steps else 1)
        self.steps: Tuple[int, ...] = tuple(steps) if steps is not None else tuple(1 for _ in range(count))
        super().__init__(degrees, differential, gradings, preserved, names, validate=False)
        if len(self.filtrations) != len(self):
            raise InvariantViolation("filtration data has inconsistent length")
        if validate:
            self.validate()

    @property
    def filtration_count(self) -> int:
        return len(self.steps)

    def jump(self, source: int, target: int, which: int = 0) -> int:
        """Filtration drop along an edge, in units of the step."""
        return (self.filtrations[source][which] - self.filtrations[target][which]) // self.steps[which]

    def validate(self) -> None:
        for g in range(len(self)):
            if len(self.filtrations[g]) != self.filtration_count:
                raise InvariantViolation("generator has the wrong number of filtration values", witness=self.names[g])
        for g, targets in enumerate(self.differential):
            for t in targets:
                for which, step in enumerate(self.steps):
                    drop = self.filtrations[g][which] - self.filtrations[t][which]
                    if drop < 0:
                        raise InvariantViolation("differential increases a filtration", witness=self.names[g])
                    if drop % step:
                        raise InvariantViolation("filtration jump is not a multiple of its step", witness=self.names[g])
        super().validate()

    def with_differential(self, differential: Sequence[Iterable[int]], validate: bool = True,
                          preserved: Optional[Sequence[int]] = None) -> "FilteredComplexF2":
        return type(self)(
            self.degrees, differential, self.filtrations, self.steps, self.gradings,
            self.preserved if preserved is None else preserved, self.names, validate,
        )

    def component(self, jumps: Sequence[int]) -> Columns:
        """The part of d whose jumps equal the given tuple, one value per filtration."""
        wanted = tuple(jumps)
        return tuple(
            tuple(t for t in targets
                  if tuple(self.jump(g, t, which) for which in range(self.filtration_count)) == wanted)
            for g, targets in enumerate(self.differential)
        )

    def associated_graded(self, which: int = 0) -> GradedComplexF2:
        """The complex with only the jump-zero part of d in the chosen filtration."""
        differential = [
            tuple(t for t in targets if self.jump(g, t, which) == 0)
            for g, targets in enumerate(self.differential)
        ]
        gradings = [tuple(self.gradings[g]) + (self.filtrations[g][which],) for g in range(len(self))]
        width = len(gradings[0]) if gradings else 0
        preserved = tuple(self.preserved) + (width - 1,) if width else ()
        return GradedComplexF2(self.degrees, differential, gradings, preserved, self.names)

    def dump(self) -> Dict:
        document = super().dump()
        for g, entry in enumerate(document["generators"]):
            entry["filtrations"] = list(self.filtrations[g])
        document["steps"] = list(self.steps)
        return document


class BifilteredComplexF2(FilteredComplexF2):
    """A filtered complex with exactly two filtrations."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        if self.filtration_count != 2:
            raise InvariantViolation("a bifiltered complex needs exactly two filtrations")

    def doubly_preserving(self) -> Columns:
        """The component d00 that preserves both filtrations."""
        return self.component((0, 0))


def quotient_complex(C: GradedComplexF2, subcomplex: Iterable[int]) -> Tuple[GradedComplexF2, List[int]]:
    """
    The quotient C / S for a subcomplex spanned by a set of generators.

    Returns the quotient complex and the original index of each of its
    generators.
    """
    members = set(subcomplex)
    if not C.is_subcomplex(members):
        leaking = next(g for g in members if not set(C.differential[g]) <= members)
        raise InvariantViolation("generator set is not a subcomplex", witness=C.names[leaking])
    kept = [g for g in range(len(C)) if g not in members]
    position = {g: index for index, g in enumerate(kept)}
    differential = [
        tuple(position[t] for t in C.differential[g] if t not in members)
        for g in kept
    ]
    quotient = GradedComplexF2(
        [C.degrees[g] for g in kept], differential,
        [C.gradings[g] for g in kept], C.preserved, [C.names[g] for g in kept],
    )
    return quotient, kept


def dump_complex(C: GradedComplexF2) -> str:
    """Structured text dump of a complex for external verification."""
    return json.dumps(C.dump(), indent=2, sort_keys=True)
