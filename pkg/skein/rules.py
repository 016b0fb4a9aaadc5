"""
Merge and split rules of the annular skein complex as a lookup table.

Keys are (kind, input circle types, output circle types, input labels);
values are the output label tuples the edge map produces, each tagged
with whether it belongs to d1 (the terms that lower the annular grading
by two) rather than d0. Circle types are "v" for non-trivial and "w" for
trivial circles, labels are +1 / -1.
"""

import itertools
from typing import Dict, List, Tuple

from models.errors import InvariantViolation

Types = Tuple[str, ...]
Labels = Tuple[int, ...]
RuleKey = Tuple[str, Types, Types, Labels]
RuleTerm = Tuple[Labels, bool]

MERGE = "merge"
SPLIT = "split"

# (input types) -> output types allowed by the topology of the annulus
MERGE_TYPES: Dict[Types, Types] = {
    ("v", "v"): ("w",),
    ("v", "w"): ("v",),
    ("w", "v"): ("v",),
    ("w", "w"): ("w",),
}
SPLIT_TYPES: Dict[Types, List[Types]] = {
    ("w",): [("w", "w"), ("v", "v")],
    ("v",): [("v", "w"), ("w", "v")],
}


def frobenius_merge(first: int, second: int) -> List[Labels]:
    if first > 0 and second > 0:
        return [(1,)]
    if first > 0 or second > 0:
        return [(-1,)]
    return []


def frobenius_split(label: int) -> List[Labels]:
    if label > 0:
        return [(1, -1), (-1, 1)]
    return [(-1, -1)]


def annular_degree(types: Types, labels: Labels) -> int:
    """Contribution of circles to the annular grading."""
    return sum(label for kind, label in zip(types, labels) if kind == "v")


def _classify(in_types: Types, in_labels: Labels, out_types: Types, out_labels: Labels) -> bool:
    drop = annular_degree(in_types, in_labels) - annular_degree(out_types, out_labels)
    if drop not in (0, 2):
        raise InvariantViolation("edge term changes the annular grading by an odd amount",
                                 witness=(in_types, in_labels, out_types, out_labels))
    return drop == 2


def build_rule_table() -> Dict[RuleKey, Tuple[RuleTerm, ...]]:
    table: Dict[RuleKey, Tuple[RuleTerm, ...]] = {}
    for in_types, out_types in MERGE_TYPES.items():
        for labels in itertools.product((1, -1), repeat=2):
            terms = tuple(
                (out, _classify(in_types, labels, out_types, out))
                for out in frobenius_merge(*labels)
            )
            table[(MERGE, in_types, out_types, labels)] = terms
    for in_types, options in SPLIT_TYPES.items():
        for out_types in options:
            for label in (1, -1):
                terms = tuple(
                    (out, _classify(in_types, (label,), out_types, out))
                    for out in frobenius_split(label)
                )
                table[(SPLIT, in_types, out_types, (label,))] = terms
    return table


SKEIN_RULES = build_rule_table()


def lookup(kind: str, in_types: Types, out_types: Types, labels: Labels) -> Tuple[RuleTerm, ...]:
    """
    Terms of one edge map.

    Raises:
        InvariantViolation: If the circle types cannot occur in the annulus
    """
    try:
        return SKEIN_RULES[(kind, in_types, out_types, labels)]
    except KeyError:
        raise InvariantViolation(
            f"no {kind} rule for circle types {in_types} -> {out_types}", witness=labels
        ) from None
