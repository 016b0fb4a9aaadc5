"""
Seeded random filtered complexes and chain maps for property checks.

A complex is produced as P D P^-1 where D is a direct sum of elementary
cancelling pairs and P is a unitriangular change of basis respecting the
filtrations, so d squared vanishes and d is filtered by construction.
"""

import random
from typing import List, Optional, Sequence, Tuple

from .complexes import BifilteredComplexF2, FilteredComplexF2
from .cones import FilteredChainMap
from .matrix import SparseMatrixF2, bits_to_indices


def _below(f_low: Sequence[int], f_high: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(f_low, f_high))


def _conjugated_differential(
    rng: random.Random,
    degrees: List[int],
    filtrations: List[Tuple[int, ...]],
    closed: List[bool],
    pair_probability: float,
    mix_probability: float,
) -> List[Tuple[int, ...]]:
    """
    Differential columns of P D P^-1.

    `closed[g]` marks generators of a subcomplex: D and P never map a closed
    generator outside the closed set.
    """
    n = len(degrees)
    order = sorted(range(n), key=lambda g: (sum(filtrations[g]), g))
    rank_of = {g: index for index, g in enumerate(order)}

    # elementary pairs x -> y
    used = set()
    pairs = []
    for x in rng.sample(range(n), n):
        if x in used or rng.random() > pair_probability:
            continue
        options = [
            y for y in range(n)
            if y not in used and y != x
            and degrees[y] == degrees[x] + 1
            and _below(filtrations[y], filtrations[x])
            and (closed[y] or not closed[x])
        ]
        if options:
            y = rng.choice(options)
            used.update((x, y))
            pairs.append((x, y))
    d_columns = [() for _ in range(n)]
    for x, y in pairs:
        d_columns[x] = (y,)
    D = SparseMatrixF2(n, n, d_columns)

    p_columns = []
    for x in range(n):
        column = {x}
        for y in range(n):
            if (
                y != x
                and rank_of[y] < rank_of[x]
                and degrees[y] == degrees[x]
                and _below(filtrations[y], filtrations[x])
                and (closed[y] or not closed[x])
                and rng.random() < mix_probability
            ):
                column.add(y)
        p_columns.append(tuple(sorted(column)))
    P = SparseMatrixF2(n, n, p_columns)
    d = P @ D @ P.inverse()
    return [tuple(column) for column in d.columns]


def random_filtered_complex(
    rng: random.Random,
    max_generators: int = 10,
    filtrations: int = 1,
    levels: int = 3,
    degrees: int = 3,
    step: int = 1,
    pair_probability: float = 0.7,
    mix_probability: float = 0.35,
) -> FilteredComplexF2:
    """A random bounded filtered complex with at most `max_generators` generators."""
    n = rng.randint(1, max_generators)
    degree_list = [rng.randrange(degrees) for _ in range(n)]
    filtration_list = [
        tuple(step * rng.randrange(levels) for _ in range(filtrations)) for _ in range(n)
    ]
    differential = _conjugated_differential(
        rng, degree_list, filtration_list, [False] * n, pair_probability, mix_probability
    )
    cls = BifilteredComplexF2 if filtrations == 2 else FilteredComplexF2
    return cls(degree_list, differential, filtration_list, tuple(step for _ in range(filtrations)))


def random_filtered_map(
    rng: random.Random,
    max_generators: int = 10,
    levels: int = 3,
    degrees: int = 3,
) -> FilteredChainMap:
    """
    A random filtered chain map f: A -> B.

    A filtered complex M is built with a subcomplex B; the component of d
    from the complementary generators into B is a chain map from the
    quotient A (degrees raised by one) to B.
    """
    n = rng.randint(2, max_generators)
    degree_list = [rng.randrange(degrees) for _ in range(n)]
    filtration_list = [(rng.randrange(levels),) for _ in range(n)]
    closed = [rng.random() < 0.5 for _ in range(n)]
    differential = _conjugated_differential(rng, degree_list, filtration_list, closed, 0.7, 0.35)

    a_gens = [g for g in range(n) if not closed[g]]
    b_gens = [g for g in range(n) if closed[g]]
    a_pos = {g: index for index, g in enumerate(a_gens)}
    b_pos = {g: index for index, g in enumerate(b_gens)}
    A = FilteredComplexF2(
        [degree_list[g] + 1 for g in a_gens],
        [tuple(a_pos[t] for t in differential[g] if t in a_pos) for g in a_gens],
        [filtration_list[g] for g in a_gens],
    )
    B = FilteredComplexF2(
        [degree_list[g] for g in b_gens],
        [tuple(b_pos[t] for t in differential[g]) for g in b_gens],
        [filtration_list[g] for g in b_gens],
        steps=(1,),
    )
    columns = [tuple(b_pos[t] for t in differential[g] if t in b_pos) for g in a_gens]
    return FilteredChainMap(A, B, columns)
