"""
Sparse linear algebra over the two-element field.

Vectors are Python ints used as bitsets: bit r set means coordinate r is 1.
All elimination runs through EchelonBasisF2, which keys each basis vector
by its lowest set bit.
"""

import logging
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from models.errors import DimensionMismatchError

logger = logging.getLogger(__name__)


def lowest_bit(vector: int) -> int:
    """Index of the lowest set bit of a nonzero bitset."""
    return (vector & -vector).bit_length() - 1


def bits_to_indices(vector: int) -> Tuple[int, ...]:
    """Sorted indices of set bits."""
    out = []
    while vector:
        low = vector & -vector
        out.append(low.bit_length() - 1)
        vector ^= low
    return tuple(out)


def indices_to_bits(indices: Iterable[int]) -> int:
    vector = 0
    for index in indices:
        vector ^= 1 << index
    return vector


class EchelonBasisF2:
    """
    Incrementally built basis of a subspace of F2^n.

    Each stored vector has a distinct lowest set bit (its pivot). When
    `track` combinations are supplied, the basis remembers which input
    vectors were summed to produce each stored vector.
    """

    def __init__(self):
        self.pivots: Dict[int, int] = {}
        self.combos: Dict[int, int] = {}

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, vector: int, combo: int = 0) -> Tuple[int, int]:
        """
        Reduce `vector` against the basis.

        Returns the residual and the accumulated combination. The residual is
        zero exactly when the vector lies in the span.
        """
        while vector:
            pivot = lowest_bit(vector)
            basis_vector = self.pivots.get(pivot)
            if basis_vector is None:
                break
            vector ^= basis_vector
            combo ^= self.combos[pivot]
        return vector, combo

    def add(self, vector: int, combo: int = 0) -> bool:
        """Insert a vector; returns True if it enlarged the span."""
        residual, combo = self.reduce(vector, combo)
        if not residual:
            return False
        pivot = lowest_bit(residual)
        self.pivots[pivot] = residual
        self.combos[pivot] = combo
        return True

    def contains(self, vector: int) -> bool:
        return self.reduce(vector)[0] == 0

    def copy(self) -> "EchelonBasisF2":
        """A copy whose combinations are reset to zero."""
        clone = EchelonBasisF2()
        clone.pivots = dict(self.pivots)
        clone.combos = {pivot: 0 for pivot in self.pivots}
        return clone


class SparseMatrixF2:
    """
    Immutable sparse matrix over F2 stored by columns.

    Example:
        >>> m = SparseMatrixF2.identity(3)
        >>> m.rank()
        3
    """

    __slots__ = ("n_rows", "n_cols", "columns")

    def __init__(self, n_rows: int, n_cols: int, columns: Sequence[Iterable[int]]):
        if len(columns) != n_cols:
            raise DimensionMismatchError(f"expected {n_cols} columns, got {len(columns)}")
        normalized = []
        for index, column in enumerate(columns):
            rows = tuple(column)
            if any(b <= a for a, b in zip(rows, rows[1:])):
                raise DimensionMismatchError(f"column {index} indices are not strictly increasing")
            if rows and (rows[0] < 0 or rows[-1] >= n_rows):
                raise DimensionMismatchError(f"column {index} has a row index outside 0..{n_rows - 1}")
            normalized.append(rows)
        self.n_rows = n_rows
        self.n_cols = n_cols
        self.columns: Tuple[Tuple[int, ...], ...] = tuple(normalized)

    @classmethod
    def identity(cls, size: int) -> "SparseMatrixF2":
        return cls(size, size, [(index,) for index in range(size)])

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "SparseMatrixF2":
        return cls(n_rows, n_cols, [() for _ in range(n_cols)])

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]]) -> "SparseMatrixF2":
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        columns = [
            tuple(r for r in range(n_rows) if rows[r][c] % 2)
            for c in range(n_cols)
        ]
        return cls(n_rows, n_cols, columns)

    @classmethod
    def from_bit_columns(cls, n_rows: int, columns: Sequence[int]) -> "SparseMatrixF2":
        return cls(n_rows, len(columns), [bits_to_indices(c) for c in columns])

    def to_dense(self) -> List[List[int]]:
        dense = [[0] * self.n_cols for _ in range(self.n_rows)]
        for c, column in enumerate(self.columns):
            for r in column:
                dense[r][c] = 1
        return dense

    def column_bits(self) -> List[int]:
        return [indices_to_bits(column) for column in self.columns]

    def row_bits(self) -> List[int]:
        rows = [0] * self.n_rows
        for c, column in enumerate(self.columns):
            for r in column:
                rows[r] |= 1 << c
        return rows

    def transpose(self) -> "SparseMatrixF2":
        return SparseMatrixF2.from_bit_columns(self.n_cols, self.row_bits())

    def apply(self, vector: int) -> int:
        """Multiply by a column vector given as a bitset over columns."""
        out = 0
        for c in bits_to_indices(vector):
            if c >= self.n_cols:
                raise DimensionMismatchError(f"vector has coordinate {c} beyond {self.n_cols} columns")
            out ^= indices_to_bits(self.columns[c])
        return out

    def __matmul__(self, other: "SparseMatrixF2") -> "SparseMatrixF2":
        if self.n_cols != other.n_rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.n_rows}x{self.n_cols} by {other.n_rows}x{other.n_cols}"
            )
        return SparseMatrixF2.from_bit_columns(
            self.n_rows, [self.apply(column) for column in other.column_bits()]
        )

    def __add__(self, other: "SparseMatrixF2") -> "SparseMatrixF2":
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
            raise DimensionMismatchError("cannot add matrices of different shapes")
        return SparseMatrixF2.from_bit_columns(
            self.n_rows, [a ^ b for a, b in zip(self.column_bits(), other.column_bits())]
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrixF2):
            return NotImplemented
        return (self.n_rows, self.n_cols, self.columns) == (other.n_rows, other.n_cols, other.columns)

    def __hash__(self):
        return hash((self.n_rows, self.n_cols, self.columns))

    def __repr__(self):
        return f"SparseMatrixF2({self.n_rows}x{self.n_cols}, nnz={self.nnz})"

    @property
    def nnz(self) -> int:
        return sum(len(column) for column in self.columns)

    def is_zero(self) -> bool:
        return self.nnz == 0

    def rank(self) -> int:
        basis = EchelonBasisF2()
        for column in self.column_bits():
            basis.add(column)
        return len(basis)

    def inverse(self) -> "SparseMatrixF2":
        """Inverse of a square invertible matrix."""
        if self.n_rows != self.n_cols:
            raise DimensionMismatchError("only square matrices can be inverted")
        basis = EchelonBasisF2()
        for index, column in enumerate(self.column_bits()):
            basis.add(column, 1 << index)
        if len(basis) != self.n_cols:
            raise DimensionMismatchError("matrix is singular")
        columns = []
        for target in range(self.n_rows):
            residual, combo = basis.reduce(1 << target)
            columns.append(combo)
        return SparseMatrixF2.from_bit_columns(self.n_cols, columns)


class SolveResult(NamedTuple):
    """
    Outcome of rank_and_solve.

    `solution` is some x with Ax = b, or None. When b is not in the column
    space, `certificate` is a row vector y with yA = 0 and yb = 1.
    """
    rank: int
    solution: Optional[Tuple[int, ...]]
    certificate: Optional[Tuple[int, ...]]


def _as_bits(vector: Sequence[int], length: int) -> int:
    if len(vector) != length:
        raise DimensionMismatchError(f"vector of length {len(vector)} does not match {length}")
    return indices_to_bits(i for i, value in enumerate(vector) if value % 2)


def _as_tuple(bits: int, length: int) -> Tuple[int, ...]:
    return tuple((bits >> i) & 1 for i in range(length))


def rank_and_solve(A: SparseMatrixF2, b: Optional[Sequence[int]] = None) -> SolveResult:
    """
    Rank of A over F2 and, if b is given, a preimage or a non-membership certificate.

    Args:
        A: Matrix
        b: Optional right-hand side as a 0/1 sequence of length A.n_rows

    Returns:
        SolveResult

    Example:
        >>> rank_and_solve(SparseMatrixF2.identity(3), (1, 0, 1))
        SolveResult(rank=3, solution=(1, 0, 1), certificate=None)
    """
    basis = EchelonBasisF2()
    for index, column in enumerate(A.column_bits()):
        basis.add(column, 1 << index)
    rank = len(basis)
    if b is None:
        return SolveResult(rank, None, None)

    target = _as_bits(b, A.n_rows)
    residual, combo = basis.reduce(target)
    if not residual:
        return SolveResult(rank, _as_tuple(combo, A.n_cols), None)

    # Row elimination on [A | b] finds y with yA = 0, yb = 1.
    marker = 1 << A.n_cols
    rows = EchelonBasisF2()
    for index, row in enumerate(A.row_bits()):
        augmented = row | (marker if (target >> index) & 1 else 0)
        reduced, row_combo = rows.reduce(augmented, 1 << index)
        if reduced == marker:
            logger.debug("non-membership certificate found at row %d", index)
            return SolveResult(rank, None, _as_tuple(row_combo, A.n_rows))
        rows.add(augmented, 1 << index)
    raise DimensionMismatchError("inconsistent elimination state")  # unreachable for valid input
