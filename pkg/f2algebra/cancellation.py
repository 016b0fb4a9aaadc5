"""
Cancellation engine for filtered complexes.

Cancelling an invertible entry x -> y removes both generators and adds
w -> z for every w hitting y and every z hit by x. Repeating this for the
entries of lowest filtration jump extracts the pages of the filtration
spectral sequence and, restricted to jumps that are zero in every
filtration, the reduced complex of a bifiltered complex.

Tie-breaking always picks the lowest (column, row) = (source, target) pair.
"""

import heapq
import logging
from collections import defaultdict
from typing import Callable, Dict, List, Optional, Set, Tuple

from models.errors import InvariantViolation
from models.results import PageEntry, SpectralPage, SpectralReport

from .complexes import BifilteredComplexF2, FilteredComplexF2

logger = logging.getLogger(__name__)


class CancellationEngine:
    """Mutable working copy of a filtered complex under cancellation."""

    def __init__(self, C: FilteredComplexF2):
        self.C = C
        self.active: Set[int] = set(range(len(C)))
        self.outgoing: Dict[int, Set[int]] = {g: set(C.differential[g]) for g in range(len(C))}
        self.incoming: Dict[int, Set[int]] = defaultdict(set)
        for g, targets in enumerate(C.differential):
            for t in targets:
                self.incoming[t].add(g)
        self.cancelled: List[Tuple[int, int]] = []

    def jumps(self, source: int, target: int) -> Tuple[int, ...]:
        return tuple(self.C.jump(source, target, which) for which in range(self.C.filtration_count))

    def entries(self):
        for x in sorted(self.active):
            for y in sorted(self.outgoing[x]):
                yield x, y

    def _toggle(self, source: int, target: int) -> bool:
        """Flip the entry source -> target; returns True if it is now present."""
        if target in self.outgoing[source]:
            self.outgoing[source].discard(target)
            self.incoming[target].discard(source)
            return False
        self.outgoing[source].add(target)
        self.incoming[target].add(source)
        return True

    def cancel(self, x: int, y: int, on_new: Optional[Callable[[int, int], None]] = None) -> None:
        if y not in self.outgoing[x]:
            raise InvariantViolation("cannot cancel a zero entry", witness=(x, y))
        sources = sorted(self.incoming[y] - {x})
        targets = sorted(self.outgoing[x] - {y})
        for w in sources:
            for z in targets:
                if self._toggle(w, z) and on_new is not None:
                    on_new(w, z)
        for g in (x, y):
            for t in list(self.outgoing[g]):
                self.incoming[t].discard(g)
            for s in list(self.incoming[g]):
                self.outgoing[s].discard(g)
            self.outgoing[g] = set()
            self.incoming[g] = set()
            self.active.discard(g)
        self.cancelled.append((x, y))

    def cancel_all(self, accept: Callable[[int, int], bool]) -> List[Tuple[int, int]]:
        """
        Cancel accepted entries until none remain, lowest pair first.

        `accept` must be stable under cancellation: an entry it accepts keeps
        being accepted while present.
        """
        heap = [(x, y) for x, y in self.entries() if accept(x, y)]
        heapq.heapify(heap)
        done: List[Tuple[int, int]] = []

        def push(w: int, z: int) -> None:
            if accept(w, z):
                heapq.heappush(heap, (w, z))

        while heap:
            x, y = heapq.heappop(heap)
            if x not in self.active or y not in self.active or y not in self.outgoing[x]:
                continue
            self.cancel(x, y, push)
            done.append((x, y))
        return done

    def residual_key(self, g: int) -> Tuple[int, ...]:
        return self.C.block_key(g)

    def page_entries(self, which: int) -> List[PageEntry]:
        counts: Dict[Tuple[int, int, Tuple[int, ...]], int] = defaultdict(int)
        for g in self.active:
            counts[(self.C.degrees[g], self.C.filtrations[g][which], self.residual_key(g))] += 1
        return [
            PageEntry(degree=degree, level=level, grading=grading, rank=rank)
            for (degree, level, grading), rank in sorted(counts.items())
        ]

    def remaining_differential(self) -> List[Tuple[int, ...]]:
        kept = sorted(self.active)
        position = {g: index for index, g in enumerate(kept)}
        return [tuple(sorted(position[t] for t in self.outgoing[g])) for g in kept]


def _differential_entries(C: FilteredComplexF2, pairs: List[Tuple[int, int]], which: int) -> List[PageEntry]:
    counts: Dict[Tuple[int, int, Tuple[int, ...]], int] = defaultdict(int)
    for x, _ in pairs:
        counts[(C.degrees[x], C.filtrations[x][which], C.block_key(x))] += 1
    return [
        PageEntry(degree=degree, level=level, grading=grading, rank=rank)
        for (degree, level, grading), rank in sorted(counts.items())
    ]


def spectral_pages(C: FilteredComplexF2, r_max: int, which: int = 0) -> SpectralReport:
    """
    Pages E^0 .. E^r_max of the spectral sequence of one filtration, plus E^infinity.

    E^{r+1} is what survives once every entry of jump r (in units of the
    filtration step) has been cancelled. The residual grading of a page cell
    is the tuple of gradings the differential preserves.

    Args:
        C: filtered complex
        r_max: last page to report (at least 1)
        which: index of the filtration to use

    Returns:
        SpectralReport with pages, the abutment and the first page equal to it
    """
    if r_max < 1:
        raise InvariantViolation("r_max must be at least 1", witness=r_max)
    engine = CancellationEngine(C)
    levels = [f[which] for f in C.filtrations]
    span = (max(levels) - min(levels)) // C.steps[which] if levels else 0

    pages: List[SpectralPage] = []
    history: List[Dict] = []
    r = 0
    while r <= max(r_max, span):
        entries = engine.page_entries(which)
        pairs = engine.cancel_all(lambda x, y, r=r: C.jump(x, y, which) == r)
        history.append({(e.degree, e.level, e.grading): e.rank for e in entries})
        if r <= r_max:
            pages.append(SpectralPage(
                page=r, entries=entries,
                differential_ranks=_differential_entries(C, pairs, which),
            ))
        r += 1

    final_entries = engine.page_entries(which)
    final = {(e.degree, e.level, e.grading): e.rank for e in final_entries}
    collapse = len(history)
    for index in range(len(history) - 1, -1, -1):
        if history[index] != final:
            break
        collapse = index
    logger.debug("spectral sequence: %d cancellations, collapse at page %d", len(engine.cancelled), collapse)
    return SpectralReport(
        pages=pages,
        infinity=SpectralPage(page=r, entries=final_entries),
        collapse_page=collapse,
    )


def reduce_bifiltered(C: BifilteredComplexF2) -> BifilteredComplexF2:
    """
    Cancel every entry preserving both filtrations.

    The result is bifiltered homotopy equivalent to C, has zero doubly
    preserving component, and keeps the names of surviving generators.
    """
    C.validate()
    engine = CancellationEngine(C)
    pairs = engine.cancel_all(lambda x, y: engine.jumps(x, y) == (0, 0))
    kept = sorted(engine.active)
    logger.debug("bifiltered reduction cancelled %d pairs, %d generators remain", len(pairs), len(kept))
    return BifilteredComplexF2(
        [C.degrees[g] for g in kept],
        engine.remaining_differential(),
        [C.filtrations[g] for g in kept],
        C.steps,
        [C.gradings[g] for g in kept],
        C.preserved,
        [C.names[g] for g in kept],
    )
