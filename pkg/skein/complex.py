"""
Assembly of the annular Khovanov skein complex.

Every cube edge R -> R' (one 0 changed to 1) merges two circles or splits
one. The rule table decides the terms; those lowering the annular grading
by two form d1, the rest form d0. The skein differential is d0 and the
Khovanov differential is d0 + d1.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from diagram.operations import add_split_meridians, mirror
from diagram.resolutions import check_capacity, diagram_index, resolve
from f2algebra.complexes import BifilteredComplexF2, FilteredComplexF2, GradedComplexF2, quotient_complex
from models.diagram import AnnularDiagram, CircleConfiguration
from models.errors import InvariantViolation
from models.results import ShiftRecord
from models.run_config import ComplexMode

from .rules import MERGE, SPLIT, lookup
from .states import EnhancedState, enumerate_states

logger = logging.getLogger(__name__)

Columns = List[Tuple[int, ...]]


class SkeinComplex:
    """
    The enhanced-state complex of one diagram.

    Gradings are kept unshifted on the states; `shift` translates them to
    the invariant normalization when applied.
    """

    def __init__(
        self,
        diagram: AnnularDiagram,
        states: Sequence[EnhancedState],
        d0: Columns,
        d1: Columns,
        reduced: bool = False,
        mode: str = ComplexMode.SKEIN.value,
        shift: Optional[ShiftRecord] = None,
        mirrored: bool = False,
    ):
        self.diagram = diagram
        self.states = list(states)
        self.d0 = [tuple(sorted(c)) for c in d0]
        self.d1 = [tuple(sorted(c)) for c in d1]
        self.reduced = reduced
        self.mode = ComplexMode(mode).value
        self.shift = shift or ShiftRecord()
        self.mirrored = mirrored
        self.index: Dict[Tuple, int] = {s.key: g for g, s in enumerate(self.states)}

    def __len__(self) -> int:
        return len(self.states)

    @property
    def shifted(self) -> bool:
        return self.shift.applied

    def gradings(self, g: int) -> Tuple[int, int, int]:
        """(i, j, k) of a generator after the recorded shift."""
        s = self.states[g]
        return self.shift.apply(s.I, s.J, s.psi)

    def differential(self, mode: Optional[str] = None) -> Columns:
        mode = ComplexMode(mode or self.mode)
        if mode == ComplexMode.SKEIN:
            return list(self.d0)
        return [tuple(sorted(set(a) ^ set(b))) for a, b in zip(self.d0, self.d1)]

    def _tables(self):
        triples = [self.gradings(g) for g in range(len(self))]
        degrees = [t[0] for t in triples]
        gradings = [(t[1], t[2]) for t in triples]
        return degrees, gradings

    def filtered(self, mode: Optional[str] = None, validate: bool = True) -> FilteredComplexF2:
        """
        The complex filtered by the annular grading (step 2).

        In skein mode both j and k are preserved; in khovanov mode only j is.
        """
        mode = ComplexMode(mode or self.mode)
        degrees, gradings = self._tables()
        preserved = (0, 1) if mode == ComplexMode.SKEIN else (0,)
        return FilteredComplexF2(
            degrees, self.differential(mode), [(k,) for _, k in gradings], (2,),
            gradings, preserved, [s.key for s in self.states], validate,
        )

    def bifiltered(self, validate: bool = True) -> BifilteredComplexF2:
        """d0 + d1 bifiltered by (k, j); its doubly preserving part is d0."""
        degrees, gradings = self._tables()
        return BifilteredComplexF2(
            degrees, self.differential(ComplexMode.KHOVANOV), [(k, j) for j, k in gradings], (2, 1),
            gradings, (0,), [s.key for s in self.states], validate,
        )

    def state_of(self, word: Tuple[int, ...], labels: Tuple[int, ...]) -> int:
        return self.index[(tuple(word), tuple(labels))]


def _touching(config: CircleConfiguration, arcs: frozenset) -> List[int]:
    return [n for n, circle in enumerate(config.circles) if arcs.intersection(circle.members)]


def _types(config: CircleConfiguration, positions: Sequence[int]) -> Tuple[str, ...]:
    return tuple("w" if config.circles[n].trivial else "v" for n in positions)


def _edge_terms(
    d: AnnularDiagram,
    source: CircleConfiguration,
    target: CircleConfiguration,
    crossing: int,
):
    """Circle correspondence of one cube edge: (kind, before, after, unchanged pairs)."""
    arcs = diagram_index(d).crossing_arcs[crossing]
    before = _touching(source, arcs)
    after = _touching(target, arcs)
    if len(before) == 2 and len(after) == 1:
        kind = MERGE
    elif len(before) == 1 and len(after) == 2:
        kind = SPLIT
    else:
        raise InvariantViolation("cube edge is neither a merge nor a split",
                                 witness=(source.word, target.word))
    by_members = {circle.members: n for n, circle in enumerate(target.circles)}
    unchanged = [
        (n, by_members[circle.members])
        for n, circle in enumerate(source.circles) if n not in before
    ]
    return kind, before, after, unchanged


def assemble_differential(
    d: AnnularDiagram,
    states: Sequence[EnhancedState],
    mode: str = ComplexMode.SKEIN.value,
    reduced: bool = False,
) -> SkeinComplex:
    """
    Build d0 and d1 over the given states.

    Raises:
        InvariantViolation: On an impossible merge/split, a grading law
            violation or a nonzero square, with a witness state
    """
    index = {s.key: g for g, s in enumerate(states)}
    by_word: Dict[Tuple[int, ...], List[int]] = {}
    for g, s in enumerate(states):
        by_word.setdefault(s.word, []).append(g)

    d0: List[set] = [set() for _ in states]
    d1: List[set] = [set() for _ in states]
    for word, members in by_word.items():
        source = resolve(d, word)
        for x, value in enumerate(word):
            if value:
                continue
            successor = word[:x] + (1,) + word[x + 1:]
            target = resolve(d, successor)
            kind, before, after, unchanged = _edge_terms(d, source, target, x)
            in_types, out_types = _types(source, before), _types(target, after)
            marked = next(n for n, circle in enumerate(target.circles) if circle.marked)
            for g in members:
                labels = states[g].labels
                for out_labels, lowers in lookup(kind, in_types, out_types, tuple(labels[n] for n in before)):
                    new = [0] * len(target.circles)
                    for old, now in unchanged:
                        new[now] = labels[old]
                    for position, label in zip(after, out_labels):
                        new[position] = label
                    t = index.get((successor, tuple(new)))
                    if t is None:
                        if reduced and new[marked] < 0:
                            # the term lies in the quotiented -marked subcomplex
                            continue
                        raise InvariantViolation("edge term has no target state", witness=(successor, tuple(new)))
                    (d1 if lowers else d0)[g] ^= {t}

    _check_grading_law(states, d0, d1)
    complex_ = SkeinComplex(d, states, [tuple(c) for c in d0], [tuple(c) for c in d1], reduced, mode)
    _check_squares(complex_)
    logger.debug("assembled %d generators, %d d0 and %d d1 entries",
                 len(states), sum(map(len, d0)), sum(map(len, d1)))
    return complex_


def _check_grading_law(states: Sequence[EnhancedState], d0, d1) -> None:
    for g, s in enumerate(states):
        for part, drop in ((d0, 0), (d1, 2)):
            for t in part[g]:
                u = states[t]
                if (u.I - s.I, u.J - s.J, s.psi - u.psi) != (1, 0, drop):
                    raise InvariantViolation("edge term breaks the grading law", witness=(s.key, u.key))


def _check_squares(C: SkeinComplex) -> None:
    degrees = [s.I for s in C.states]
    names = [s.key for s in C.states]
    for mode in ComplexMode:
        GradedComplexF2(degrees, C.differential(mode), preserved=(), names=names)


def shift_for(d: AnnularDiagram, reduced: bool) -> ShiftRecord:
    """
    The normalizing shift [-n_minus]{(n_plus - 2 n_minus, 0)}.

    With a marked meridian in the reduced theory the quantum and annular
    shifts each drop by one more.
    """
    meridian = reduced and d.meridians > 0
    return ShiftRecord(
        homological=-d.n_minus,
        quantum=d.n_plus - 2 * d.n_minus - (1 if meridian else 0),
        annular=-1 if meridian else 0,
        applied=True,
    )


def apply_final_shift(C: SkeinComplex) -> SkeinComplex:
    """
    Return the complex with the normalizing shift applied.

    Raises:
        InvariantViolation: If the complex is already shifted
    """
    if C.shifted:
        raise InvariantViolation("complex is already shifted", witness=C.shift.model_dump())
    shifted = SkeinComplex(C.diagram, C.states, C.d0, C.d1, C.reduced, C.mode,
                           shift_for(C.diagram, C.reduced), C.mirrored)
    return shifted


def prepare_diagram(d: AnnularDiagram, meridians: bool = False, mirror_image: bool = False) -> AnnularDiagram:
    if mirror_image:
        d = mirror(d)
    if meridians:
        d = add_split_meridians(d)
    return d


def build(
    d: AnnularDiagram,
    reduced: bool = False,
    meridians: bool = False,
    mirror_image: bool = False,
    shifted: bool = True,
    mode: str = ComplexMode.SKEIN.value,
    cap: Optional[int] = None,
) -> SkeinComplex:
    """
    One-call pipeline: optional mirror and meridians, states, differential, shift.

    Example:
        >>> C = build(parse_braid_word("2: 1"))
        >>> len(C)
        6
    """
    d = prepare_diagram(d, meridians, mirror_image)
    check_capacity(d, cap)
    states = enumerate_states(d, reduced, cap)
    C = assemble_differential(d, states, mode, reduced)
    C.mirrored = mirror_image
    if shifted:
        C = apply_final_shift(C)
    return C


def quotient_reduced(C: SkeinComplex, mode: Optional[str] = None) -> GradedComplexF2:
    """
    The reduced complex as the quotient of an unreduced one by its
    subcomplex of states labelling the marked circle -.

    Gradings follow the reduced normalization of the same diagram.
    """
    if C.reduced:
        raise InvariantViolation("quotient construction needs the unreduced complex")
    mode = ComplexMode(mode or C.mode)
    minus = []
    for g, s in enumerate(C.states):
        config = resolve(C.diagram, s.word)
        position = next(n for n, circle in enumerate(config.circles) if circle.marked)
        if s.labels[position] < 0:
            minus.append(g)
    full = C.filtered(mode, validate=False)
    quotient, kept = quotient_complex(full, minus)
    if C.shifted:
        meridian = C.diagram.meridians > 0
        offset = (-1, -1) if meridian else (0, 0)
        gradings = [(j + offset[0], k + offset[1]) for j, k in quotient.gradings]
        quotient = GradedComplexF2(quotient.degrees, quotient.differential, gradings,
                                   quotient.preserved, quotient.names)
    return quotient
