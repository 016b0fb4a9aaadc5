"""
Seeded diagram generators for property checks: random braid closures,
Reidemeister move pairs away from the marked arc and the ray, alternating
3-braids, twisted unknot diagrams and knotted summands away from the axis.
"""

import logging
import random
from typing import List, NamedTuple, Tuple

from models.diagram import AnnularDiagram, Arc, BraidWord, Crossing

from .operations import disc_diagram, split_union
from .parsers import braid_closure
from .resolutions import diagram_index

logger = logging.getLogger(__name__)

# Curl shapes for add_kink: which strand of the new crossing comes first, and its sign.
KINK_VARIANTS = ("under-positive", "under-negative", "over-positive", "over-negative")


class MovePair(NamedTuple):
    name: str
    before: AnnularDiagram
    after: AnnularDiagram


def random_braid(rng: random.Random, max_crossings: int, min_strands: int = 2, max_strands: int = 4) -> BraidWord:
    """A braid word with at most `max_crossings` letters."""
    strands = rng.randint(min_strands, max_strands)
    length = rng.randint(0, max_crossings)
    word = tuple(rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length))
    return BraidWord(strands=strands, word=word)


def disc_summand(rng: random.Random, max_crossings: int) -> AnnularDiagram:
    """A (2, n) torus knot or link closure that winds zero times around the axis."""
    size = rng.randint(1, max(1, min(3, max_crossings)))
    sign = rng.choice((1, -1))
    return disc_diagram(braid_closure(BraidWord(strands=2, word=(sign,) * size)))


def random_diagram(rng: random.Random, max_crossings: int) -> AnnularDiagram:
    """
    A random braid closure. Sometimes a Reidemeister I curl is added, and
    sometimes a knotted summand winding zero times is placed around it.
    """
    roll = rng.random()
    if max_crossings >= 2 and roll < 0.25:
        d = braid_closure(random_braid(rng, max_crossings - 1))
        candidates = [a.label for a in d.arcs if a.label not in d.loop_labels]
        if candidates:
            return add_kink(d, rng.choice(candidates), rng.choice(KINK_VARIANTS))
        return d
    if max_crossings >= 2 and roll < 0.45:
        summand = disc_summand(rng, max_crossings - 1)
        inner = braid_closure(random_braid(rng, max_crossings - summand.crossing_count))
        return split_union(inner, summand)[0]
    return braid_closure(random_braid(rng, max_crossings))


def alternating_three_braid(rng: random.Random, max_crossings: int) -> BraidWord:
    """A 3-braid word in positive sigma_1 and negative sigma_2 using both generators."""
    length = rng.randint(2, max(2, max_crossings))
    word = [1, -2] + [rng.choice((1, -2)) for _ in range(length - 2)]
    rng.shuffle(word)
    return BraidWord(strands=3, word=tuple(word))


def twisted_unknot_braid(rng: random.Random, max_crossings: int) -> BraidWord:
    """A braid using every generator exactly once with random signs; its closure is an unknot."""
    strands = rng.randint(1, max_crossings + 1)
    generators = list(range(1, strands))
    rng.shuffle(generators)
    return BraidWord(strands=strands, word=tuple(rng.choice((1, -1)) * g for g in generators))


def add_kink(d: AnnularDiagram, arc_label: int, variant: str) -> AnnularDiagram:
    """
    Reidemeister I: put a small curl on an arc.

    The arc keeps its label and ray count up to the new crossing; the curl
    and the continuation get fresh labels and meet the ray nowhere.
    """
    head = diagram_index(d).head[arc_label]
    top = max(arc.label for arc in d.arcs)
    loop, out = top + 1, top + 2
    crossings: List[Crossing] = []
    for x, crossing in enumerate(d.crossings):
        arcs = list(crossing.arcs)
        if x == head[0]:
            arcs[head[1]] = out
        crossings.append(Crossing(arcs=tuple(arcs), sign=crossing.sign))

    records = {
        "under-positive": ((arc_label, out, loop, loop), 1),
        "under-negative": ((arc_label, loop, loop, out), -1),
        "over-positive": ((loop, loop, out, arc_label), 1),
        "over-negative": ((loop, arc_label, out, loop), -1),
    }
    arcs, sign = records[variant]
    crossings.append(Crossing(arcs=arcs, sign=sign))
    return AnnularDiagram(
        crossings=tuple(crossings),
        arcs=tuple(d.arcs) + (Arc(label=loop), Arc(label=out)),
        marked_arc=d.marked_arc,
        odd_linking=d.odd_linking,
        meridians=d.meridians,
    )


def reidemeister_two(braid: BraidWord, position: int, generator: int) -> BraidWord:
    """Insert sigma_i sigma_i^-1 at a position of the word."""
    word = braid.word[:position] + (generator, -generator) + braid.word[position:]
    return BraidWord(strands=braid.strands, word=word)


def reidemeister_three(braid: BraidWord, position: int, generator: int, sign: int) -> Tuple[BraidWord, BraidWord]:
    """The two sides of a braid relation s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1} inserted at a position."""
    i = generator
    left = tuple(sign * g for g in (i, i + 1, i))
    right = tuple(sign * g for g in (i + 1, i, i + 1))
    head, tail = braid.word[:position], braid.word[position:]
    return (
        BraidWord(strands=braid.strands, word=head + left + tail),
        BraidWord(strands=braid.strands, word=head + right + tail),
    )


def random_move_pair(rng: random.Random, max_crossings: int) -> MovePair:
    """A diagram and its image under one random Reidemeister move or conjugation."""
    kinds = ["R1", "R2", "conjugation"]
    if max_crossings >= 3:
        kinds.append("R3")
    kind = rng.choice(kinds)
    if kind == "R1":
        before = braid_closure(random_braid(rng, max(0, max_crossings - 1)))
        candidates = [a.label for a in before.arcs if a.label not in before.loop_labels]
        if not candidates:
            return MovePair("identity", before, before)
        label = rng.choice(candidates)
        variant = rng.choice(KINK_VARIANTS)
        return MovePair(f"R1 {variant} on arc {label}", before, add_kink(before, label, variant))
    if kind == "R2":
        braid = random_braid(rng, max(0, max_crossings - 2), min_strands=2)
        generator = rng.randint(1, braid.strands - 1) * rng.choice((1, -1))
        position = rng.randint(0, len(braid.word))
        after = reidemeister_two(braid, position, generator)
        return MovePair(f"R2 at {position}", braid_closure(braid), braid_closure(after))
    if kind == "R3":
        braid = random_braid(rng, max_crossings - 3, min_strands=3)
        generator = rng.randint(1, braid.strands - 2)
        position = rng.randint(0, len(braid.word))
        left, right = reidemeister_three(braid, position, generator, rng.choice((1, -1)))
        return MovePair(f"R3 at {position}", braid_closure(left), braid_closure(right))
    braid = random_braid(rng, max_crossings)
    if not braid.word:
        d = braid_closure(braid)
        return MovePair("identity", d, d)
    rotated = BraidWord(strands=braid.strands, word=braid.word[1:] + braid.word[:1])
    return MovePair("conjugation", braid_closure(braid), braid_closure(rotated))
