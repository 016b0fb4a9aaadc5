"""
Exact linear algebra and chain complexes over the two-element field.
"""

from .matrix import (
    EchelonBasisF2,
    SparseMatrixF2,
    SolveResult,
    rank_and_solve,
    bits_to_indices,
    indices_to_bits,
    lowest_bit,
)
from .complexes import (
    GradedComplexF2,
    FilteredComplexF2,
    BifilteredComplexF2,
    quotient_complex,
    dump_complex,
)
from .homology import (
    HomologyResult,
    homology,
    is_cycle,
    boundary_basis,
    cycle_basis,
    induced_rank,
)
from .cancellation import (
    CancellationEngine,
    spectral_pages,
    reduce_bifiltered,
)
from .cones import (
    FilteredChainMap,
    mapping_cone,
    iterated_cone,
    cone_of_page_one,
)
from .random_complexes import (
    random_filtered_complex,
    random_filtered_map,
)

__all__ = [
    "EchelonBasisF2",
    "SparseMatrixF2",
    "SolveResult",
    "rank_and_solve",
    "bits_to_indices",
    "indices_to_bits",
    "lowest_bit",
    "GradedComplexF2",
    "FilteredComplexF2",
    "BifilteredComplexF2",
    "quotient_complex",
    "dump_complex",
    "HomologyResult",
    "homology",
    "is_cycle",
    "boundary_basis",
    "cycle_basis",
    "induced_rank",
    "CancellationEngine",
    "spectral_pages",
    "reduce_bifiltered",
    "FilteredChainMap",
    "mapping_cone",
    "iterated_cone",
    "cone_of_page_one",
    "random_filtered_complex",
    "random_filtered_map",
]
