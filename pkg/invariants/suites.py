"""
Named property-check suites over seeded corpora.

Each suite runs on the diagram it is given or on a corpus drawn from a
seeded generator, and records one CheckResult per verified property.
Identical arguments give identical reports.
"""

import logging
import random
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Tuple

from tqdm import tqdm

from diagram.moves import (
    KINK_VARIANTS,
    MovePair,
    add_kink,
    alternating_three_braid,
    random_braid,
    random_diagram,
    random_move_pair,
    reidemeister_two,
    twisted_unknot_braid,
)
from diagram.parsers import braid_closure, parse_braid_word
from diagram.resolutions import is_connected
from f2algebra.cancellation import reduce_bifiltered, spectral_pages
from f2algebra.cones import FilteredChainMap, cone_of_page_one, iterated_cone, mapping_cone
from f2algebra.homology import homology
from f2algebra.random_complexes import random_filtered_complex, random_filtered_map
from models.diagram import AnnularDiagram, BraidWord
from models.errors import InvariantViolation, TargetClassError, UnknownSuiteError
from models.results import SuiteReport
from models.run_config import ComplexMode
from skein.complex import build, quotient_reduced

from .euler import euler_from_counts, euler_from_homology, euler_statesum
from .homology import khovanov_homology, plain_khovanov_homology, ranks_of, skein_homology
from .plamenevskaya import plamenevskaya
from .spanning import spanning_leaves
from .support import check_alternating_support
from .tensor import split_union_check
from .tvalues import unknot_t_values

logger = logging.getLogger(__name__)

FIGURE_EIGHT = "3: 1 -2 1 -2"


class SuiteRequest(NamedTuple):
    """What a suite runs on."""
    diagram: Optional[AnnularDiagram]
    count: int
    max_crossings: int
    rng: random.Random
    cap: Optional[int]
    progress: bool


SuiteFn = Callable[[SuiteRequest, SuiteReport], None]

SUITES: Dict[str, SuiteFn] = {}

# Corpus sizes used when no count is requested.
DEFAULT_COUNTS = {
    "d2": 50,
    "mirror": 50,
    "reidemeister": 30,
    "euler": 25,
    "alternating": 15,
    "tensor": 10,
    "tduality": 10,
    "spanning": 10,
    "cone": 100,
    "collapse": 50,
    "psi": 20,
}


def register(name: str):
    def decorator(fn: SuiteFn) -> SuiteFn:
        SUITES[name] = fn
        return fn
    return decorator


def _label(d: AnnularDiagram, n: int) -> str:
    return f"[{d.braid.text}]" if d.braid is not None else f"[diagram {n}]"


def _progress(items: Iterable, name: str, request: SuiteRequest, total: Optional[int] = None):
    return tqdm(items, desc=f"check {name}", unit="case", total=total, disable=not request.progress)


def _guarded(report: SuiteReport, name: str, case: Callable[[], Tuple[bool, str]]) -> None:
    """Run one case; invariant failures and missing classes count as failed checks."""
    try:
        passed, detail = case()
    except (InvariantViolation, TargetClassError) as e:
        logger.warning("%s failed: %s", name, e)
        passed, detail = False, str(e)
    report.add(name, passed, detail)


def random_corpus(request: SuiteRequest) -> List[AnnularDiagram]:
    if request.diagram is not None:
        return [request.diagram]
    return [random_diagram(request.rng, request.max_crossings) for _ in range(request.count)]


def alternating_corpus(request: SuiteRequest) -> List[AnnularDiagram]:
    """The figure-eight closure plus alternating 3-braid closures."""
    if request.diagram is not None:
        return [request.diagram]
    corpus = [parse_braid_word(FIGURE_EIGHT)]
    while len(corpus) < request.count:
        corpus.append(braid_closure(alternating_three_braid(request.rng, request.max_crossings)))
    return corpus


def twisted_unknot_corpus(request: SuiteRequest, max_crossings: Optional[int] = None) -> List[AnnularDiagram]:
    if request.diagram is not None:
        return [request.diagram]
    bound = request.max_crossings if max_crossings is None else max_crossings
    return [braid_closure(twisted_unknot_braid(request.rng, bound)) for _ in range(request.count)]


def connected_corpus(request: SuiteRequest) -> List[AnnularDiagram]:
    """Connected diagrams with at least one crossing; the figure-eight closure first."""
    if request.diagram is not None:
        return [request.diagram]
    corpus = [parse_braid_word(FIGURE_EIGHT)]
    attempts = 0
    while len(corpus) < request.count and attempts < 50 * request.count:
        attempts += 1
        d = random_diagram(request.rng, request.max_crossings)
        if d.crossing_count and is_connected(d):
            corpus.append(d)
    return corpus


def braid_corpus(request: SuiteRequest) -> List[AnnularDiagram]:
    if request.diagram is not None:
        return [request.diagram]
    bound = min(request.max_crossings, 6)
    return [braid_closure(random_braid(request.rng, bound, max_strands=4)) for _ in range(request.count)]


@register("d2")
def check_squares(request: SuiteRequest, report: SuiteReport) -> None:
    """Both differentials square to zero, and the reduced complex is the quotient of the unreduced one."""
    corpus = random_corpus(request)
    for n, d in enumerate(_progress(corpus, "d2", request)):
        def case(d=d):
            unreduced = build(d, mode=ComplexMode.KHOVANOV.value, cap=request.cap)
            reduced = build(d, reduced=True, mode=ComplexMode.KHOVANOV.value, cap=request.cap)
            quotient = homology(quotient_reduced(unreduced, ComplexMode.SKEIN))
            ranks = {(degree, j, k): r for (degree, (j, k)), r in quotient.ranks.items() if r}
            return ranks == ranks_of(reduced).as_dict(), f"{len(unreduced)} generators"
        _guarded(report, f"{_label(d, n)} d^2 = 0 and reduced quotient agrees", case)


@register("mirror")
def check_mirror(request: SuiteRequest, report: SuiteReport) -> None:
    corpus = random_corpus(request)
    for n, d in enumerate(_progress(corpus, "mirror", request)):
        def case(d=d):
            table = ranks_of(build(d, cap=request.cap))
            image = ranks_of(build(d, mirror_image=True, cap=request.cap))
            return table.negated() == image.as_dict(), f"total rank {table.total}"
        _guarded(report, f"{_label(d, n)} mirror negates all gradings", case)


def _moves_on(d: AnnularDiagram, rng: random.Random, count: int) -> List[MovePair]:
    """Moves applied to one given diagram: curls, and for braid closures RII and conjugation."""
    pairs = []
    arcs = [a.label for a in d.arcs if a.label not in d.loop_labels]
    for _ in range(count):
        if d.braid is not None and d.braid.strands > 1 and rng.random() < 0.5:
            braid = d.braid
            if braid.word and rng.random() < 0.5:
                rotated = BraidWord(strands=braid.strands, word=braid.word[1:] + braid.word[:1])
                pairs.append(MovePair("conjugation", d, braid_closure(rotated)))
                continue
            generator = rng.randint(1, braid.strands - 1) * rng.choice((1, -1))
            position = rng.randint(0, len(braid.word))
            pairs.append(MovePair(f"R2 at {position}", d, braid_closure(reidemeister_two(braid, position, generator))))
        elif arcs:
            label, variant = rng.choice(arcs), rng.choice(KINK_VARIANTS)
            pairs.append(MovePair(f"R1 {variant} on arc {label}", d, add_kink(d, label, variant)))
    return pairs


@register("reidemeister")
def check_reidemeister(request: SuiteRequest, report: SuiteReport) -> None:
    if request.diagram is not None:
        pairs = _moves_on(request.diagram, request.rng, request.count)
    else:
        pairs = [random_move_pair(request.rng, request.max_crossings) for _ in range(request.count)]
    for n, pair in enumerate(_progress(pairs, "reidemeister", request)):
        def case(pair=pair):
            before = skein_homology(pair.before, cap=request.cap).as_dict()
            after = skein_homology(pair.after, cap=request.cap).as_dict()
            return before == after, f"total rank {sum(before.values())} vs {sum(after.values())}"
        _guarded(report, f"{_label(pair.before, n)} {pair.name} preserves skein homology", case)


@register("euler")
def check_euler(request: SuiteRequest, report: SuiteReport) -> None:
    corpus = random_corpus(request)
    for n, d in enumerate(_progress(corpus, "euler", request)):
        C = build(d, cap=request.cap)
        statesum = euler_statesum(d, request.cap)
        chains = euler_from_counts((C.gradings(g), 1) for g in range(len(C)))
        report.add(f"{_label(d, n)} state sum counts generators", statesum == chains)
        from_homology = euler_from_homology(ranks_of(C))
        report.add(
            f"{_label(d, n)} state sum equals homology Euler characteristic",
            statesum.at_t_minus_one() == from_homology.at_t_minus_one(),
            str(statesum.at_t_minus_one()),
        )


@register("alternating")
def check_alternating(request: SuiteRequest, report: SuiteReport) -> None:
    corpus = alternating_corpus(request)
    for n, d in enumerate(_progress(corpus, "alternating", request)):
        def case(d=d):
            support = check_alternating_support(d, request.cap)
            report.extend(support.checks, prefix=f"{_label(d, n)} ")
            return not support.offending, f"{support.form}-form, offset {support.offset}, offending {support.offending}"
        _guarded(report, f"{_label(d, n)} support on k - j + 2i = const", case)


@register("tensor")
def check_tensor(request: SuiteRequest, report: SuiteReport) -> None:
    """Split unions: random pairs, then pairs of twisted unknots for T-additivity."""
    unknot = parse_braid_word("1:")
    if request.diagram is not None:
        pairs = [(request.diagram, unknot), (unknot, request.diagram)]
    else:
        half = max(1, request.max_crossings // 2)
        pairs = []
        for n in range(request.count):
            if n % 2:
                pairs.append(tuple(braid_closure(twisted_unknot_braid(request.rng, min(3, half))) for _ in range(2)))
            else:
                pairs.append(tuple(random_diagram(request.rng, half) for _ in range(2)))
    for n, (inner, outer) in enumerate(_progress(pairs, "tensor", request)):
        name = f"{_label(inner, n)} + {_label(outer, n)}"
        try:
            report.extend(split_union_check(inner, outer, request.cap).results, prefix=f"{name} ")
        except (InvariantViolation, TargetClassError) as e:
            report.add(f"{name} split union", False, str(e))


@register("tduality")
def check_tduality(request: SuiteRequest, report: SuiteReport) -> None:
    """T(u+/-) of braid-form twisted unknots is (n_minus - n_plus) +/- 1, and mirrors negate it."""
    corpus = twisted_unknot_corpus(request)
    for n, d in enumerate(_progress(corpus, "tduality", request)):
        try:
            plus, minus = unknot_t_values(d, cap=request.cap)
            mirror_plus, mirror_minus = unknot_t_values(d, mirror_image=True, cap=request.cap)
        except (InvariantViolation, TargetClassError) as e:
            report.add(f"{_label(d, n)} T-values", False, str(e))
            continue
        if d.braid is not None:
            twist = d.n_minus - d.n_plus
            report.add(f"{_label(d, n)} T(u+/-) = {twist} +/- 1", (plus, minus) == (twist + 1, twist - 1),
                       f"T(u+) = {plus}, T(u-) = {minus}")
        report.add(f"{_label(d, n)} T(u+/-) = -T_mirror(u-/+)",
                   plus == -mirror_minus and minus == -mirror_plus,
                   f"({plus}, {minus}) vs mirror ({mirror_plus}, {mirror_minus})")


@register("spanning")
def check_spanning(request: SuiteRequest, report: SuiteReport) -> None:
    corpus = connected_corpus(request)
    for n, d in enumerate(_progress(corpus, "spanning", request)):
        try:
            leaves = spanning_leaves(d, request.cap)
        except InvariantViolation as e:
            report.add(f"{_label(d, n)} resolution tree", False, str(e))
            continue
        report.extend(leaves.checks, prefix=f"{_label(d, n)} ")


def _page_without_residual(ranks: Dict[Tuple[int, int, Tuple[int, ...]], int]) -> Dict[Tuple[int, int], int]:
    out: Dict[Tuple[int, int], int] = {}
    for (degree, level, _), rank in ranks.items():
        out[(degree, level)] = out.get((degree, level), 0) + rank
    return out


@register("cone")
def check_cones(request: SuiteRequest, report: SuiteReport) -> None:
    """Mapping cones, iterated cones and bifiltered reduction on random complexes."""
    for n in _progress(range(request.count), "cone", request):
        def cone_case():
            f = random_filtered_map(request.rng)
            e1 = _page_without_residual(spectral_pages(mapping_cone(f), 1).page(1).as_dict())
            return e1 == cone_of_page_one(f), f"{len(f.source)} + {len(f.target)} generators"
        _guarded(report, f"[complex {n}] E1 of the cone is the cone on E1", cone_case)

        def iterated_case():
            f12 = random_filtered_map(request.rng)
            A3 = random_filtered_complex(request.rng)
            f23 = FilteredChainMap(f12.target, A3, [() for _ in range(len(f12.target))])
            h13 = FilteredChainMap(f12.source, A3, [() for _ in range(len(f12.source))], degree=-1)
            total = homology(iterated_cone(f12, f23, h13)).total
            expected = homology(mapping_cone(f12)).total + homology(A3).total
            return total == expected, f"{total} vs {expected}"
        _guarded(report, f"[complex {n}] iterated cone splits when the maps vanish", iterated_case)

        def reduction_case():
            C = random_filtered_complex(request.rng, filtrations=2)
            R = reduce_bifiltered(C)
            same = all(
                spectral_pages(C, 4, which).page(r).as_dict() == spectral_pages(R, 4, which).page(r).as_dict()
                for which in (0, 1) for r in range(1, 5)
            )
            vanishing = not any(R.doubly_preserving())
            return same and vanishing, f"{len(C)} -> {len(R)} generators"
        _guarded(report, f"[complex {n}] bifiltered reduction keeps pages and kills d00", reduction_case)


@register("collapse")
def check_collapse(request: SuiteRequest, report: SuiteReport) -> None:
    """
    The spectral sequence collapses at E2 and abuts to Khovanov homology,
    which agrees with the plain complex. Both are asserted on every diagram.
    """
    corpus = random_corpus(request)
    for n, d in enumerate(_progress(corpus, "collapse", request)):
        label = _label(d, n)
        try:
            ranks = khovanov_homology(d, cap=request.cap)
        except InvariantViolation as e:
            logger.warning("%s: %s", label, e)
            report.add(f"{label} E2 and abutment equal Khovanov homology", False, str(e))
            continue
        report.add(f"{label} abutment equals Khovanov homology", True, f"total rank {ranks.total}")
        report.add(f"{label} E2 equals Khovanov homology", ranks.e2_matches,
                   f"collapse at page {ranks.collapse_page}")
        plain = plain_khovanov_homology(d, cap=request.cap)
        report.add(f"{label} agrees with the plain Khovanov complex", ranks.as_dict() == plain)


@register("psi")
def check_psi(request: SuiteRequest, report: SuiteReport) -> None:
    corpus = braid_corpus(request)
    for n, d in enumerate(_progress(corpus, "psi", request)):
        try:
            psi = plamenevskaya(d, request.cap)
        except InvariantViolation as e:
            report.add(f"{_label(d, n)} Plamenevskaya state", False, str(e))
            continue
        report.extend(psi.checks, prefix=f"{_label(d, n)} ")


def run_suite(
    name: str,
    diagram: Optional[AnnularDiagram] = None,
    count: Optional[int] = None,
    max_crossings: int = 6,
    seed: int = 7,
    cap: Optional[int] = None,
    progress: bool = False,
) -> SuiteReport:
    """
    Run one named suite.

    With a diagram the suite checks that diagram only (the cone suite
    ignores it); otherwise it draws `count` cases from a generator seeded
    with `seed`.

    Raises:
        UnknownSuiteError: If no suite has that name
    """
    if name not in SUITES:
        raise UnknownSuiteError(f"unknown suite '{name}'; choose from {', '.join(sorted(SUITES))}")
    request = SuiteRequest(
        diagram=diagram,
        count=count if count is not None else DEFAULT_COUNTS[name],
        max_crossings=max_crossings,
        rng=random.Random(seed),
        cap=cap,
        progress=progress,
    )
    report = SuiteReport(suite=name)
    SUITES[name](request, report)
    logger.info(report.summary())
    return report
