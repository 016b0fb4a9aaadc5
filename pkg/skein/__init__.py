"""
The annular Khovanov skein complex of a diagram.
"""

from .rules import SKEIN_RULES, MERGE, SPLIT, lookup, build_rule_table
from .states import EnhancedState, enumerate_states, make_state, labellings
from .complex import (
    SkeinComplex,
    assemble_differential,
    apply_final_shift,
    shift_for,
    prepare_diagram,
    build,
    quotient_reduced,
)
from .plain import plain_circles, plain_khovanov_complex

__all__ = [
    "SKEIN_RULES",
    "MERGE",
    "SPLIT",
    "lookup",
    "build_rule_table",
    "EnhancedState",
    "enumerate_states",
    "make_state",
    "labellings",
    "SkeinComplex",
    "assemble_differential",
    "apply_final_shift",
    "shift_for",
    "prepare_diagram",
    "build",
    "quotient_reduced",
    "plain_circles",
    "plain_khovanov_complex",
]
