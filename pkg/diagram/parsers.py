"""
Parsers for braid words and annular PD documents.
"""

import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Union

from pydantic import ValidationError

from models.diagram import AnnularDiagram, Arc, BraidWord, Crossing
from models.errors import CapacityError, DiagramParseError, InvariantViolation
from models.pd_document import AnnularPDDocument
from models.validators import ValidationUtils

from .resolutions import max_winding

logger = logging.getLogger(__name__)


def _first_error(error: ValidationError) -> str:
    details = error.errors()
    if not details:
        return str(error)
    location = ".".join(str(part) for part in details[0].get("loc", ()))
    message = details[0].get("msg", "invalid value")
    return f"{location}: {message}" if location else message


def braid_closure(braid: BraidWord) -> AnnularDiagram:
    """
    Closure of a braid in the annulus.

    Strands run counterclockwise around the axis. Each closure arc meets the
    reference ray once; the closure arc of strand position 1 is marked. An
    untouched strand position becomes a crossingless loop of winding +1.
    """
    n = braid.strands
    current = list(range(n))
    next_label = n
    raw: List[tuple] = []
    for letter in braid.word:
        i = abs(letter) - 1
        north_west, north_east = next_label, next_label + 1
        next_label += 2
        if letter > 0:
            raw.append(((current[i + 1], north_east, north_west, current[i]), 1))
        else:
            raw.append(((current[i], current[i + 1], north_east, north_west), -1))
        current[i], current[i + 1] = north_west, north_east

    # close up: the arc leaving the top of position p is the arc entering its bottom
    closing: Dict[int, int] = {label: p for p, label in enumerate(current)}
    used = sorted({closing.get(label, label) for arcs, _ in raw for label in arcs} | set(range(n)))
    dense = {label: index for index, label in enumerate(used)}

    def rename(label: int) -> int:
        return dense[closing.get(label, label)]

    crossings = tuple(
        Crossing(arcs=tuple(rename(label) for label in arcs), sign=sign) for arcs, sign in raw
    )
    arcs = tuple(
        Arc(label=dense[label], ray_count=1 if label < n else 0) for label in used
    )
    return AnnularDiagram(
        crossings=crossings,
        arcs=arcs,
        marked_arc=0,
        odd_linking=n % 2 == 1,
        braid=braid,
    )


def parse_braid_word(text: str) -> AnnularDiagram:
    """
    Parse "n: w1 w2 ..." into the annular closure of the braid.

    Raises:
        DiagramParseError: If the text is malformed or a generator is out of range

    Example:
        >>> d = parse_braid_word("2: 1")
        >>> [c.arcs for c in d.crossings]
        [(1, 1, 0, 0)]
    """
    try:
        strands, letters = ValidationUtils.split_braid_text(text)
        braid = BraidWord(strands=strands, word=letters)
    except ValidationError as e:
        raise DiagramParseError(_first_error(e)) from e
    except ValueError as e:
        raise DiagramParseError(str(e)) from e
    logger.debug("parsed braid %s with %d crossings", braid.text, len(braid.word))
    return braid_closure(braid)


def diagram_from_document(document: AnnularPDDocument, cap: Optional[int] = None) -> AnnularDiagram:
    """Validate a PD document into a diagram, including the winding bound on every resolution."""
    try:
        d = AnnularDiagram(
            crossings=tuple(document.crossings),
            arcs=tuple(document.arcs),
            marked_arc=document.marked,
            odd_linking=document.odd_linking,
        )
    except ValidationError as e:
        raise DiagramParseError(_first_error(e)) from e

    try:
        worst, witness = max_winding(d, cap)
    except CapacityError:
        raise
    except InvariantViolation as e:
        raise DiagramParseError(str(e)) from e
    if worst > 1:
        raise DiagramParseError(
            f"resolution {witness} has a circle winding {worst} times around the axis"
        )
    return d


def parse_annular_pd(source: Union[str, Dict], cap: Optional[int] = None) -> AnnularDiagram:
    """
    Parse an annular PD document given as JSON text or an already-decoded dict.

    Raises:
        DiagramParseError: On malformed JSON, invalid records or a circle of winding two or more
        CapacityError: If checking the resolutions would exceed the cube cap
    """
    try:
        if isinstance(source, dict):
            document = AnnularPDDocument.model_validate(source)
        else:
            document = AnnularPDDocument.model_validate_json(source)
    except ValidationError as e:
        raise DiagramParseError(_first_error(e)) from e
    return diagram_from_document(document, cap)


def load_annular_pd(path: Union[str, Path], cap: Optional[int] = None) -> AnnularDiagram:
    """Read and parse a PD document file."""
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise DiagramParseError(f"cannot read {path}: {e}") from e
    return parse_annular_pd(text, cap)


def diagram_to_document(d: AnnularDiagram) -> AnnularPDDocument:
    """Inverse of diagram_from_document, for dumps and round trips."""
    return AnnularPDDocument(
        crossings=list(d.crossings),
        arcs=list(d.arcs),
        marked=d.marked_arc,
        odd_linking=d.odd_linking,
    )


def dump_annular_pd(d: AnnularDiagram) -> str:
    return json.dumps(diagram_to_document(d).model_dump(), indent=2)
