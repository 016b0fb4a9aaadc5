"""
Derived quantities of annular diagrams: homology tables, Euler polynomials,
T-values, the Plamenevskaya state, support and spanning-tree checks, and
the named check suites.
"""

from .homology import (
    ranks_of,
    skein_homology,
    khovanov_pages,
    khovanov_homology,
    plain_khovanov_homology,
)
from .euler import (
    EulerPolynomial,
    euler_statesum,
    euler_from_homology,
    euler_from_counts,
)
from .tvalues import (
    filtration_level,
    class_representative,
    cycle_t_value,
    t_value,
    unknot_t_values,
)
from .plamenevskaya import plamenevskaya
from .support import support_line, check_alternating_support
from .spanning import tree_leaves, spanning_leaves
from .tensor import convolve, tensor_cycle, split_union_check
from .suites import SUITES, DEFAULT_COUNTS, run_suite
from .render import (
    render_grid,
    render_khovanov,
    render_pages,
    render_checks,
    render_suite,
    to_json,
)

__all__ = [
    "ranks_of",
    "skein_homology",
    "khovanov_pages",
    "khovanov_homology",
    "plain_khovanov_homology",
    "EulerPolynomial",
    "euler_statesum",
    "euler_from_homology",
    "euler_from_counts",
    "filtration_level",
    "class_representative",
    "cycle_t_value",
    "t_value",
    "unknot_t_values",
    "plamenevskaya",
    "support_line",
    "check_alternating_support",
    "tree_leaves",
    "spanning_leaves",
    "convolve",
    "tensor_cycle",
    "split_union_check",
    "SUITES",
    "DEFAULT_COUNTS",
    "run_suite",
    "render_grid",
    "render_khovanov",
    "render_pages",
    "render_checks",
    "render_suite",
    "to_json",
]
