#!/usr/bin/env python3
"""
Tests for the F2 linear algebra layer: sparse matrices, chain complexes,
homology, spectral pages and mapping cones.
"""

import json
import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from f2algebra import (
    BifilteredComplexF2,
    FilteredChainMap,
    FilteredComplexF2,
    GradedComplexF2,
    SparseMatrixF2,
    cone_of_page_one,
    dump_complex,
    homology,
    induced_rank,
    iterated_cone,
    mapping_cone,
    quotient_complex,
    random_filtered_complex,
    random_filtered_map,
    rank_and_solve,
    reduce_bifiltered,
    spectral_pages,
)
from models.errors import DimensionMismatchError, InvariantViolation


def test_identity_rank_and_inverse():
    m = SparseMatrixF2.identity(4)
    assert m.rank() == 4
    assert m.inverse().to_dense() == m.to_dense()


def test_dense_round_trip_and_product():
    rows = [[1, 1, 0], [0, 1, 1], [0, 0, 1]]
    m = SparseMatrixF2.from_dense(rows)
    assert m.to_dense() == rows
    assert (m @ m.inverse()).to_dense() == SparseMatrixF2.identity(3).to_dense()


def test_singular_matrix_has_no_inverse():
    m = SparseMatrixF2.from_dense([[1, 1], [1, 1]])
    assert m.rank() == 1
    with pytest.raises(DimensionMismatchError):
        m.inverse()


def test_columns_must_be_in_range():
    with pytest.raises(DimensionMismatchError):
        SparseMatrixF2(2, 1, [(0, 5)])
    with pytest.raises(DimensionMismatchError):
        SparseMatrixF2(2, 2, [(0,)])


def test_solve_returns_preimage():
    result = rank_and_solve(SparseMatrixF2.identity(3), (1, 0, 1))
    assert result.rank == 3
    assert result.solution == (1, 0, 1)
    assert result.certificate is None


def test_solve_returns_certificate_outside_column_space():
    rows = [[1, 0], [1, 0]]
    b = (1, 0)
    result = rank_and_solve(SparseMatrixF2.from_dense(rows), b)
    assert result.rank == 1
    assert result.solution is None
    y = result.certificate
    for col in range(2):
        assert sum(y[r] * rows[r][col] for r in range(2)) % 2 == 0
    assert sum(y[r] * b[r] for r in range(2)) % 2 == 1


def test_homology_of_small_complex():
    # x -> y cancels, z survives
    C = GradedComplexF2([0, 1, 0], [(1,), (), ()])
    result = homology(C)
    assert result.total == 1
    assert result.by_degree() == {0: 1}


def test_nonzero_square_is_rejected():
    with pytest.raises(InvariantViolation):
        GradedComplexF2([0, 1, 2], [(1,), (2,), ()])


def test_differential_must_raise_degree():
    with pytest.raises(InvariantViolation):
        GradedComplexF2([0, 0], [(1,), ()])


def test_filtration_may_not_increase():
    with pytest.raises(InvariantViolation):
        FilteredComplexF2([0, 1], [(1,), ()], [(0,), (1,)])


def test_pages_of_single_jump():
    C = FilteredComplexF2([0, 1], [(1,), ()], [(1,), (0,)])
    report = spectral_pages(C, 2)
    assert [page.total for page in report.pages] == [2, 2, 0]
    assert report.infinity.total == 0
    assert report.collapse_page == 2
    assert report.collapsed_by_r_max


def test_pages_need_r_max():
    C = FilteredComplexF2([0], [()], [(0,)])
    with pytest.raises(InvariantViolation):
        spectral_pages(C, 0)


def test_random_complexes_abut_to_homology():
    rng = random.Random(11)
    for _ in range(20):
        C = random_filtered_complex(rng, max_generators=8)
        report = spectral_pages(C, 3)
        assert report.infinity.total == homology(C).total


def test_quotient_by_subcomplex():
    C = GradedComplexF2([0, 1, 0], [(1,), (), ()])
    Q, kept = quotient_complex(C, [1])
    assert kept == [0, 2]
    assert homology(Q).total == 2


def test_quotient_rejects_non_subcomplex():
    C = GradedComplexF2([0, 1], [(1,), ()])
    with pytest.raises(InvariantViolation):
        quotient_complex(C, [0])


def test_dump_lists_generators():
    C = GradedComplexF2([0, 1], [(1,), ()])
    document = json.loads(dump_complex(C))
    assert len(document["generators"]) == 2


def test_cone_of_identity_is_acyclic():
    A = FilteredComplexF2([0, 0], [(), ()], [(0,), (1,)])
    B = FilteredComplexF2([0, 0], [(), ()], [(0,), (1,)])
    cone = mapping_cone(FilteredChainMap(A, B, [(0,), (1,)]))
    assert len(cone) == 4
    assert homology(cone).total == 0


def test_map_must_be_filtered():
    A = FilteredComplexF2([0], [()], [(0,)])
    B = FilteredComplexF2([0], [()], [(1,)])
    with pytest.raises(InvariantViolation):
        FilteredChainMap(A, B, [(0,)])


def test_cone_page_one_matches_cone():
    rng = random.Random(3)
    for _ in range(20):
        f = random_filtered_map(rng, max_generators=8)
        cone = mapping_cone(f)
        report = spectral_pages(cone, 1)
        expected = {}
        for entry in report.page(1).entries:
            key = (entry.degree, entry.level)
            expected[key] = expected.get(key, 0) + entry.rank
        computed = {key: rank for key, rank in cone_of_page_one(f).items() if rank}
        assert computed == {key: rank for key, rank in expected.items() if rank}


def test_iterated_cone_with_zero_maps_splits():
    A1 = FilteredComplexF2([0], [()], [(0,)])
    A2 = FilteredComplexF2([0, 1], [(1,), ()], [(0,), (0,)])
    A3 = FilteredComplexF2([0], [()], [(0,)])
    f12 = FilteredChainMap(A1, A2, [()])
    f23 = FilteredChainMap(A2, A3, [(), ()])
    h13 = FilteredChainMap(A1, A3, [()], degree=-1)
    total = iterated_cone(f12, f23, h13)
    assert homology(total).total == 2


def test_iterated_cone_checks_homotopy():
    A1 = FilteredComplexF2([0], [()], [(0,)])
    A2 = FilteredComplexF2([0], [()], [(0,)])
    A3 = FilteredComplexF2([0], [()], [(0,)])
    f12 = FilteredChainMap(A1, A2, [(0,)])
    f23 = FilteredChainMap(A2, A3, [(0,)])
    h13 = FilteredChainMap(A1, A3, [()], degree=-1)
    with pytest.raises(InvariantViolation):
        iterated_cone(f12, f23, h13)


def test_bifiltered_reduction_clears_doubly_preserving_part():
    rng = random.Random(5)
    for _ in range(10):
        C = random_filtered_complex(rng, max_generators=8, filtrations=2)
        reduced = reduce_bifiltered(C)
        assert isinstance(reduced, BifilteredComplexF2)
        assert all(not column for column in reduced.doubly_preserving())
        for which in (0, 1):
            before = spectral_pages(C, 4, which)
            after = spectral_pages(reduced, 4, which)
            for r in range(1, 5):
                assert before.page(r).as_dict() == after.page(r).as_dict()


def _span(columns):
    span = {0}
    for column in columns:
        span |= {s ^ column for s in span}
    return span


def test_rank_and_solve_against_dense_span():
    rng = random.Random(13)
    for _ in range(60):
        n_rows, n_cols = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[rng.randint(0, 1) for _ in range(n_cols)] for _ in range(n_rows)]
        b = tuple(rng.randint(0, 1) for _ in range(n_rows))
        columns = [sum(rows[r][c] << r for r in range(n_rows)) for c in range(n_cols)]
        span = _span(columns)
        result = rank_and_solve(SparseMatrixF2.from_dense(rows), b)
        assert result.rank == len(span).bit_length() - 1
        if sum(b[r] << r for r in range(n_rows)) in span:
            x = result.solution
            assert result.certificate is None
            assert all(sum(rows[r][c] * x[c] for c in range(n_cols)) % 2 == b[r] for r in range(n_rows))
        else:
            y = result.certificate
            assert result.solution is None
            assert all(sum(y[r] * rows[r][c] for r in range(n_rows)) % 2 == 0 for c in range(n_cols))
            assert sum(y[r] * b[r] for r in range(n_rows)) % 2 == 1


def _permuted(C, order):
    position = {g: n for n, g in enumerate(order)}
    return FilteredComplexF2(
        [C.degrees[g] for g in order],
        [tuple(sorted(position[t] for t in C.differential[g])) for g in order],
        [C.filtrations[g] for g in order],
        C.steps,
    )


def test_homology_and_pages_ignore_generator_order():
    rng = random.Random(17)
    for _ in range(20):
        C = random_filtered_complex(rng, max_generators=8)
        order = list(range(len(C)))
        rng.shuffle(order)
        P = _permuted(C, order)
        nonzero = [{k: v for k, v in homology(X).by_degree().items() if v} for X in (C, P)]
        assert nonzero[0] == nonzero[1]
        before, after = spectral_pages(C, 3), spectral_pages(P, 3)
        for r in range(1, 4):
            assert before.page(r).as_dict() == after.page(r).as_dict()


def test_cone_rank_matches_long_exact_sequence():
    rng = random.Random(19)
    for _ in range(30):
        f = random_filtered_map(rng, max_generators=8)
        induced = sum(induced_rank(f.columns, f.source, f.target).values())
        expected = homology(f.source).total + homology(f.target).total - 2 * induced
        assert homology(mapping_cone(f)).total == expected


def test_cone_of_zero_map_is_direct_sum():
    rng = random.Random(23)
    for _ in range(20):
        A = random_filtered_complex(rng, max_generators=6)
        B = random_filtered_complex(rng, max_generators=6)
        cone = mapping_cone(FilteredChainMap(A, B, [() for _ in range(len(A))]))
        expected = {}
        for degree, rank in homology(A).by_degree().items():
            expected[degree - 1] = expected.get(degree - 1, 0) + rank
        for degree, rank in homology(B).by_degree().items():
            expected[degree] = expected.get(degree, 0) + rank
        computed = homology(cone).by_degree()
        assert {k: v for k, v in computed.items() if v} == {k: v for k, v in expected.items() if v}
