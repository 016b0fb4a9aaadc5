"""
Core Pydantic models for annular link diagrams.

A diagram lives in the thickened annulus. Annularity is encoded
combinatorially: every arc carries the signed number of times it crosses a
fixed reference ray running from the axis point to infinity. Crossings use
planar-diagram records listed counterclockwise from the incoming under-arc.
"""

from collections import Counter
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

# Slot indices of a crossing record (a, b, c, d).
SLOT_A, SLOT_B, SLOT_C, SLOT_D = 0, 1, 2, 3

# Smoothing pairings: resolution value -> pairs of slots joined.
SMOOTHING_PAIRS: Dict[int, Tuple[Tuple[int, int], Tuple[int, int]]] = {
    0: ((SLOT_A, SLOT_B), (SLOT_C, SLOT_D)),
    1: ((SLOT_A, SLOT_D), (SLOT_B, SLOT_C)),
}


def smoothing_partner(slot: int, value: int) -> int:
    """Return the slot joined to `slot` by the 0- or 1-smoothing."""
    for first, second in SMOOTHING_PAIRS[value]:
        if slot == first:
            return second
        if slot == second:
            return first
    raise ValueError(f"invalid slot {slot}")


def head_slots(sign: int) -> Tuple[int, int]:
    """Slots where an arc ends (enters the crossing) for a crossing of the given sign."""
    return (SLOT_A, SLOT_D) if sign > 0 else (SLOT_A, SLOT_B)


def tail_slots(sign: int) -> Tuple[int, int]:
    """Slots where an arc starts (leaves the crossing)."""
    return (SLOT_C, SLOT_B) if sign > 0 else (SLOT_C, SLOT_D)


def oriented_smoothing(sign: int) -> int:
    """Resolution value of the orientation-respecting smoothing."""
    return 0 if sign > 0 else 1


class BraidWord(BaseModel):
    """
    Braid word on a fixed number of strands.

    Example:
        >>> BraidWord(strands=3, word=(1, -2, 1, -2)).text
        '3: 1 -2 1 -2'
    """
    model_config = ConfigDict(frozen=True)

    strands: int = Field(..., ge=1)
    word: Tuple[int, ...] = ()

    @model_validator(mode='after')
    def validate_generators(self):
        for letter in self.word:
            if letter == 0 or abs(letter) > self.strands - 1:
                raise ValueError(
                    f"generator {letter} out of range for {self.strands} strands"
                )
        return self

    @property
    def text(self) -> str:
        letters = " ".join(str(w) for w in self.word)
        return f"{self.strands}: {letters}".rstrip()


class Crossing(BaseModel):
    """A crossing record: four arc labels counterclockwise from the incoming under-arc."""
    model_config = ConfigDict(frozen=True)

    arcs: Tuple[int, int, int, int]
    sign: int

    @field_validator('sign')
    @classmethod
    def validate_sign(cls, v):
        if v not in (1, -1):
            raise ValueError('crossing sign must be +1 or -1')
        return v


class Arc(BaseModel):
    """
    An edge of the diagram.

    `ray_count` is the algebraic number of intersections with the reference
    ray, measured along the arc when `orientation` is +1 and against it when
    `orientation` is -1. Arcs that appear in no crossing are crossingless
    circles whose winding number is their effective ray count.
    """
    model_config = ConfigDict(frozen=True)

    label: int
    ray_count: int = 0
    orientation: int = 1

    @field_validator('orientation')
    @classmethod
    def validate_orientation(cls, v):
        if v not in (1, -1):
            raise ValueError('arc orientation must be +1 or -1')
        return v

    @property
    def winding(self) -> int:
        """Signed ray count along the arc's own direction."""
        return self.orientation * self.ray_count


class AnnularDiagram(BaseModel):
    """
    Combinatorial diagram of a link in the thickened annulus.

    Example:
        >>> d = AnnularDiagram(
        ...     crossings=(Crossing(arcs=(1, 1, 0, 0), sign=1),),
        ...     arcs=(Arc(label=0, ray_count=1), Arc(label=1, ray_count=1)),
        ...     marked_arc=0,
        ... )
        >>> (d.n_plus, d.n_minus)
        (1, 0)
    """
    model_config = ConfigDict(frozen=True)

    crossings: Tuple[Crossing, ...] = ()
    arcs: Tuple[Arc, ...]
    marked_arc: int
    odd_linking: bool = False
    braid: Optional[BraidWord] = None
    meridians: int = Field(0, ge=0)

    @model_validator(mode='after')
    def validate_structure(self):
        labels = [arc.label for arc in self.arcs]
        if len(set(labels)) != len(labels):
            raise ValueError('arc labels must be unique')
        known = set(labels)
        if self.marked_arc not in known:
            raise ValueError(f"marked arc {self.marked_arc} is not an arc of the diagram")

        appearances = Counter()
        heads = Counter()
        tails = Counter()
        for index, crossing in enumerate(self.crossings):
            for slot, label in enumerate(crossing.arcs):
                if label not in known:
                    raise ValueError(f"crossing {index} uses unknown arc {label}")
                appearances[label] += 1
            for slot in head_slots(crossing.sign):
                heads[crossing.arcs[slot]] += 1
            for slot in tail_slots(crossing.sign):
                tails[crossing.arcs[slot]] += 1

        for arc in self.arcs:
            count = appearances[arc.label]
            if count == 0:
                if abs(arc.winding) > 1:
                    raise ValueError(
                        f"crossingless circle {arc.label} has winding {arc.winding}"
                    )
            elif count != 2:
                raise ValueError(f"arc {arc.label} appears {count} times, expected 2")
            elif heads[arc.label] != 1 or tails[arc.label] != 1:
                raise ValueError(
                    f"arc {arc.label} is not consistently oriented through its crossings"
                )

        if self.odd_linking and self.ray_intersections % 2 == 0:
            raise ValueError('odd-linking flag set but the ray meets the link an even number of times')
        return self

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def n_plus(self) -> int:
        return sum(1 for c in self.crossings if c.sign > 0)

    @property
    def n_minus(self) -> int:
        return sum(1 for c in self.crossings if c.sign < 0)

    @property
    def writhe(self) -> int:
        return self.n_plus - self.n_minus

    @property
    def ray_intersections(self) -> int:
        """Total number of strand/ray intersections, counted without sign."""
        return sum(abs(arc.ray_count) for arc in self.arcs)

    @property
    def loop_labels(self) -> List[int]:
        used = {label for c in self.crossings for label in c.arcs}
        return [arc.label for arc in self.arcs if arc.label not in used]

    def arc(self, label: int) -> Arc:
        for arc in self.arcs:
            if arc.label == label:
                return arc
        raise KeyError(label)


class Circle(BaseModel):
    """One circle of a complete resolution."""
    model_config = ConfigDict(frozen=True)

    members: Tuple[int, ...]
    winding: int = Field(..., ge=-1, le=1)
    marked: bool = False

    @property
    def trivial(self) -> bool:
        return self.winding == 0


class CircleConfiguration(BaseModel):
    """
    The circles of one complete resolution.

    Circles are ordered marked first, then non-trivial, then trivial, each
    group by least member arc.
    """
    model_config = ConfigDict(frozen=True)

    word: Tuple[int, ...]
    circles: Tuple[Circle, ...]

    @model_validator(mode='after')
    def validate_marking(self):
        if sum(1 for circle in self.circles if circle.marked) != 1:
            raise ValueError('exactly one circle must be marked')
        return self

    @property
    def l(self) -> int:  # noqa: E743
        return sum(1 for circle in self.circles if not circle.trivial)

    @property
    def m(self) -> int:
        return sum(1 for circle in self.circles if circle.trivial)

    @property
    def degree(self) -> int:
        """I(R), the number of 1-smoothings."""
        return sum(self.word)


class GoeritzData(BaseModel):
    """Checkerboard coloring, Goeritz form and the resulting signature and determinant."""

    faces: List[Tuple[Tuple[int, int], ...]]
    white: List[bool]
    matrix: List[List[int]]
    mu: int
    signature: int
    determinant: int = Field(..., ge=0)

    @model_validator(mode='after')
    def validate_form(self):
        size = len(self.matrix)
        for row in range(size):
            if len(self.matrix[row]) != size:
                raise ValueError('Goeritz matrix must be square')
            if sum(self.matrix[row]) != 0:
                raise ValueError('Goeritz row sums must vanish')
            for col in range(size):
                if self.matrix[row][col] != self.matrix[col][row]:
                    raise ValueError('Goeritz matrix must be symmetric')
        return self
