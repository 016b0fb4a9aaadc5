"""
Support of skein homology for alternating diagrams.

For connected alternating diagrams whose linking with the axis is odd,
every nonzero group satisfies k - j + 2i = sigma; for twisted unknots the
line is k - j + 2i = M.
"""

import logging
from typing import Optional

from diagram.planar import checkerboard_and_M, goeritz, is_alternating
from models.diagram import AnnularDiagram
from models.results import CheckResult, SupportReport

from .homology import khovanov_homology, skein_homology

logger = logging.getLogger(__name__)


def support_line(i: int, j: int, k: int) -> int:
    return k - j + 2 * i


def check_alternating_support(d: AnnularDiagram, cap: Optional[int] = None) -> SupportReport:
    """
    Check the support law and, in the odd-linking case, reduced rank = determinant.

    Non-alternating diagrams are still checked; the report is then advisory.

    Raises:
        DisconnectedDiagramError: If the diagram is split
    """
    alternating = is_alternating(d)
    checks = []
    if d.ray_intersections % 2:
        form = "sigma"
        data = goeritz(d)
        offset = data.signature
        if alternating:
            reduced_total = khovanov_homology(d, reduced=True, cap=cap).total
            checks.append(CheckResult(
                name="reduced rank equals determinant",
                passed=reduced_total == data.determinant,
                detail=f"rank {reduced_total}, det {data.determinant}",
            ))
    else:
        form = "M"
        _, offset = checkerboard_and_M(d)

    table = skein_homology(d, cap=cap)
    offending = sorted(
        (e.i, e.j, e.k) for e in table.ranks if support_line(e.i, e.j, e.k) != offset
    )
    if offending:
        logger.info("%d groups off the line k - j + 2i = %d", len(offending), offset)
    return SupportReport(
        form=form,
        offset=offset,
        alternating=alternating,
        advisory=not alternating,
        offending=offending,
        checks=checks,
    )
