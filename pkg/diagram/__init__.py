"""
Annular link diagrams: parsing, resolutions, structural operations and
planar invariants.
"""

from .resolutions import (
    DiagramIndex,
    diagram_index,
    check_capacity,
    trace_components,
    resolve,
    all_resolutions,
    max_winding,
    piece_count,
    is_connected,
)
from .parsers import (
    braid_closure,
    parse_braid_word,
    parse_annular_pd,
    load_annular_pd,
    diagram_from_document,
    diagram_to_document,
    dump_annular_pd,
)
from .operations import (
    mirror,
    add_split_meridians,
    relabel,
    split_union,
    disc_diagram,
    partial_resolve,
)
from .planar import (
    faces,
    checkerboard,
    checkerboard_and_M,
    axis_face,
    correction_term,
    goeritz,
    is_alternating,
)
from .moves import (
    KINK_VARIANTS,
    MovePair,
    random_braid,
    random_diagram,
    alternating_three_braid,
    twisted_unknot_braid,
    add_kink,
    reidemeister_two,
    reidemeister_three,
    random_move_pair,
)

__all__ = [
    "DiagramIndex",
    "diagram_index",
    "check_capacity",
    "trace_components",
    "resolve",
    "all_resolutions",
    "max_winding",
    "piece_count",
    "is_connected",
    "braid_closure",
    "parse_braid_word",
    "parse_annular_pd",
    "load_annular_pd",
    "diagram_from_document",
    "diagram_to_document",
    "dump_annular_pd",
    "mirror",
    "add_split_meridians",
    "relabel",
    "split_union",
    "disc_diagram",
    "partial_resolve",
    "faces",
    "checkerboard",
    "checkerboard_and_M",
    "axis_face",
    "correction_term",
    "goeritz",
    "is_alternating",
    "KINK_VARIANTS",
    "MovePair",
    "random_braid",
    "random_diagram",
    "alternating_three_braid",
    "twisted_unknot_braid",
    "add_kink",
    "reidemeister_two",
    "reidemeister_three",
    "random_move_pair",
]
