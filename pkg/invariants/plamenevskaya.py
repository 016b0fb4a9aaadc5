"""
The Plamenevskaya state of a braid closure.

With two split meridians added and the inner one marked, take the
oriented resolution, label the marked circle + and every other circle -.
The state is the unique generator of least annular grading, a cycle for
both differentials, and its annular grading is 1 - b where b counts the
strands including the meridians.
"""

import logging
from typing import Optional

from diagram.operations import add_split_meridians
from diagram.resolutions import resolve
from f2algebra.homology import boundary_basis, homology
from models.diagram import AnnularDiagram, oriented_smoothing
from models.errors import NotABraidClosureError
from models.results import CheckResult, PsiReport
from models.run_config import ComplexMode
from skein.complex import build

logger = logging.getLogger(__name__)


def plamenevskaya(d: AnnularDiagram, cap: Optional[int] = None) -> PsiReport:
    """
    Locate the Plamenevskaya state and verify its properties.

    Meridians are added when the diagram does not carry them yet.

    Raises:
        NotABraidClosureError: If the diagram does not come from a braid word
    """
    if d.braid is None:
        raise NotABraidClosureError("the transverse state needs a braid closure")
    if not d.meridians:
        d = add_split_meridians(d)
    strands = d.braid.strands + d.meridians

    C = build(d, reduced=True, mode=ComplexMode.KHOVANOV.value, cap=cap)
    word = tuple(oriented_smoothing(c.sign) for c in d.crossings)
    config = resolve(d, word)
    labels = tuple(1 if circle.marked else -1 for circle in config.circles)
    psi = C.state_of(word, labels)
    i, j, k = C.gradings(psi)
    unshifted = C.states[psi].psi
    checks = []

    d0 = C.differential(ComplexMode.SKEIN)
    full = C.differential(ComplexMode.KHOVANOV)
    checks.append(CheckResult(name="closed under d0", passed=not d0[psi], detail=str(d0[psi])))
    checks.append(CheckResult(name="closed under d0+d1", passed=not full[psi], detail=str(full[psi])))
    checks.append(CheckResult(name="annular grading is 1 - b", passed=k == 1 - strands,
                              detail=f"k={k}, b={strands}"))

    lowest = min(C.gradings(g)[2] for g in range(len(C)))
    at_lowest = [g for g in range(len(C)) if C.gradings(g)[2] == lowest]
    checks.append(CheckResult(name="unique generator at least annular grading",
                              passed=at_lowest == [psi], detail=f"{len(at_lowest)} generators at k={lowest}"))

    F = C.filtered(ComplexMode.SKEIN)
    ranks = homology(F).ranks
    lowest_rank = sum(r for (_, (_, kk)), r in ranks.items() if kk == lowest)
    block = [g for g in range(len(F)) if F.block_key(g) == F.block_key(psi)]
    nonzero = boundary_basis(F, i, among=block).reduce(1 << psi)[0] != 0
    checks.append(CheckResult(name="generates the least annular level of skein homology",
                              passed=nonzero and lowest_rank == 1,
                              detail=f"rank {lowest_rank} at k={lowest}"))
    logger.info("Plamenevskaya state at (i, j, k) = (%d, %d, %d)", i, j, k)
    return PsiReport(word=word, labels=labels, strands=strands, level=k, unshifted_level=unshifted, checks=checks)
