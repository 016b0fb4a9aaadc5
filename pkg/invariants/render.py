"""
Plain-text and JSON rendering of rank tables, spectral pages and reports.

The grid puts j on the horizontal axis and k on the vertical one, highest
k first. A cell lists its groups as F_i, or F^r_i for rank r.
"""

import json
from collections import defaultdict
from typing import Dict, Iterable, List, Sequence, Tuple

from models.results import CheckResult, KhovanovRanks, SpectralReport, SuiteReport, TrigradedRanks

EMPTY_CELL = "."


def _axis(values: Iterable[int]) -> List[int]:
    values = sorted(set(values))
    if not values:
        return []
    step = 2 if len({v % 2 for v in values}) == 1 else 1
    return list(range(values[0], values[-1] + 1, step))


def _cell(groups: Sequence[Tuple[int, int]]) -> str:
    parts = []
    for i, rank in sorted(groups):
        parts.append(f"F_{i}" if rank == 1 else f"F^{rank}_{i}")
    return "+".join(parts) or EMPTY_CELL


def render_grid(table: TrigradedRanks) -> str:
    """
    Aligned (j, k) grid with homological degrees as subscripts.

    Example:
        >>> print(render_grid(TrigradedRanks.from_counts({(0, 1, 1): 1, (0, -1, -1): 1})), end="")
        k\\j   -1    1
          1    .  F_0
         -1  F_0    .
    """
    if not table.ranks:
        return "0\n"
    cells: Dict[Tuple[int, int], List[Tuple[int, int]]] = defaultdict(list)
    for e in table.ranks:
        cells[(e.j, e.k)].append((e.i, e.rank))
    columns = _axis(e.j for e in table.ranks)
    rows = list(reversed(_axis(e.k for e in table.ranks)))

    text = {(j, k): _cell(cells.get((j, k), ())) for j in columns for k in rows}
    corner = "k\\j"
    label_width = max(len(corner), *(len(str(k)) for k in rows))
    width = max(max(len(s) for s in text.values()), *(len(str(j)) for j in columns))

    lines = [corner.ljust(label_width) + "".join(f"  {j:>{width}}" for j in columns)]
    for k in rows:
        lines.append(f"{k:>{label_width}}" + "".join(f"  {text[(j, k)]:>{width}}" for j in columns))
    return "\n".join(lines) + "\n"


def render_khovanov(ranks: KhovanovRanks) -> str:
    lines = [f"i={e.i:>3}  j={e.j:>3}  rank {e.rank}" for e in ranks.ranks]
    lines.append(f"total rank {ranks.total}, collapse at page {ranks.collapse_page}, "
                 f"E2 {'matches' if ranks.e2_matches else 'differs'}")
    return "\n".join(lines) + "\n"


def render_pages(report: SpectralReport) -> str:
    """One block per page: cells as (i, k) with residual gradings, then the abutment."""
    lines = []
    for page in report.pages + [report.infinity]:
        name = "E^inf" if page is report.infinity else f"E^{page.page}"
        lines.append(f"{name}: total rank {page.total}")
        for e in page.entries:
            if e.rank:
                lines.append(f"  i={e.degree:>3}  k={e.level:>3}  {list(e.grading)}  rank {e.rank}")
    lines.append(f"collapse at page {report.collapse_page}")
    lines.append(f"collapsed by E^{report.pages[-1].page}: {'yes' if report.collapsed_by_r_max else 'no'}")
    return "\n".join(lines) + "\n"


def render_checks(results: Iterable[CheckResult]) -> str:
    lines = []
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        lines.append(f"{status}  {result.name}" + (f"  ({result.detail})" if result.detail else ""))
    return "\n".join(lines) + "\n"


def render_suite(report: SuiteReport) -> str:
    return render_checks(report.results) + report.summary() + "\n"


def to_json(document: Dict) -> str:
    """Stable JSON text: sorted keys, two-space indent."""
    return json.dumps(document, indent=2, sort_keys=True) + "\n"
