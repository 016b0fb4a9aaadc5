"""
Result and report models for AnnularSkein computations.

Rank tables, spectral pages, spanning leaves and check reports all
serialize to stable JSON documents through pydantic.
"""

import json
from typing import Dict, Iterable, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .diagram import AnnularDiagram


class ShiftRecord(BaseModel):
    """
    Global grading translation applied to a complex.

    Example:
        >>> ShiftRecord(homological=-1, quantum=-2, annular=0, applied=True)
        ShiftRecord(homological=-1, quantum=-2, annular=0, applied=True)
    """
    homological: int = 0
    quantum: int = 0
    annular: int = 0
    applied: bool = False

    def apply(self, i: int, j: int, k: int) -> Tuple[int, int, int]:
        if not self.applied:
            return (i, j, k)
        return (i + self.homological, j + self.quantum, k + self.annular)


class RankEntry(BaseModel):
    """A single nonzero homology group."""
    model_config = ConfigDict(frozen=True)

    i: int
    j: int
    k: int
    rank: int = Field(..., ge=1)


class CheckResult(BaseModel):
    """Outcome of one named check."""
    model_config = ConfigDict(populate_by_name=True)

    name: str
    passed: bool = Field(..., alias="pass")
    detail: str = ""


class TrigradedRanks(BaseModel):
    """
    Homology ranks indexed by (i, j, k).

    Example:
        >>> table = TrigradedRanks.from_counts({(0, 1, 1): 1, (0, -1, -1): 1})
        >>> table.total
        2
    """
    mode: str = "skein"
    reduced: bool = False
    shifts: ShiftRecord = Field(default_factory=ShiftRecord)
    ranks: List[RankEntry] = Field(default_factory=list)

    @model_validator(mode='after')
    def sort_entries(self):
        self.ranks.sort(key=lambda e: (e.k, e.j, e.i))
        seen = set()
        for entry in self.ranks:
            key = (entry.i, entry.j, entry.k)
            if key in seen:
                raise ValueError(f"duplicate rank entry at {key}")
            seen.add(key)
        return self

    @classmethod
    def from_counts(cls, counts: Dict[Tuple[int, int, int], int], **metadata) -> "TrigradedRanks":
        entries = [
            RankEntry(i=i, j=j, k=k, rank=rank)
            for (i, j, k), rank in counts.items() if rank
        ]
        return cls(ranks=entries, **metadata)

    def as_dict(self) -> Dict[Tuple[int, int, int], int]:
        return {(e.i, e.j, e.k): e.rank for e in self.ranks}

    @property
    def total(self) -> int:
        return sum(e.rank for e in self.ranks)

    def bigraded(self) -> Dict[Tuple[int, int], int]:
        """Forget k."""
        out: Dict[Tuple[int, int], int] = {}
        for e in self.ranks:
            out[(e.i, e.j)] = out.get((e.i, e.j), 0) + e.rank
        return out

    def negated(self) -> Dict[Tuple[int, int, int], int]:
        return {(-i, -j, -k): r for (i, j, k), r in self.as_dict().items()}

    def to_document(self, checks: Optional[Iterable[CheckResult]] = None) -> Dict:
        return {
            "mode": self.mode,
            "reduced": self.reduced,
            "shifts": self.shifts.model_dump(),
            "ranks": [e.model_dump() for e in self.ranks],
            "checks": [c.model_dump(by_alias=True) for c in (checks or [])],
        }

    def to_json(self, checks: Optional[Iterable[CheckResult]] = None) -> str:
        return json.dumps(self.to_document(checks), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "TrigradedRanks":
        document = json.loads(text)
        return cls(
            mode=document["mode"],
            reduced=document.get("reduced", False),
            shifts=ShiftRecord(**document["shifts"]),
            ranks=[RankEntry(**entry) for entry in document["ranks"]],
        )


class PageEntry(BaseModel):
    """Rank of a spectral page at one (degree, filtration level, residual gradings) cell."""
    model_config = ConfigDict(frozen=True)

    degree: int
    level: int
    grading: Tuple[int, ...] = ()
    rank: int = Field(..., ge=0)


class SpectralPage(BaseModel):
    """
    One page E^r of a filtration spectral sequence.

    `differential_ranks` records the rank of d_r leaving each cell.
    """
    page: int = Field(..., ge=0)
    entries: List[PageEntry] = Field(default_factory=list)
    differential_ranks: List[PageEntry] = Field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(e.rank for e in self.entries)

    def as_dict(self) -> Dict[Tuple[int, int, Tuple[int, ...]], int]:
        return {(e.degree, e.level, e.grading): e.rank for e in self.entries if e.rank}

    def degree_totals(self) -> Dict[Tuple[int, Tuple[int, ...]], int]:
        """Ranks with the filtration level summed out."""
        out: Dict[Tuple[int, Tuple[int, ...]], int] = {}
        for e in self.entries:
            key = (e.degree, e.grading)
            out[key] = out.get(key, 0) + e.rank
        return {key: value for key, value in out.items() if value}


class SpectralReport(BaseModel):
    """Pages up to r_max together with the abutment, for collapse detection."""
    pages: List[SpectralPage]
    infinity: SpectralPage
    collapse_page: int

    def page(self, r: int) -> SpectralPage:
        for candidate in self.pages:
            if candidate.page == r:
                return candidate
        raise KeyError(r)

    @property
    def collapsed_by_r_max(self) -> bool:
        return self.pages[-1].as_dict() == self.infinity.as_dict()


class SpanningLeaf(BaseModel):
    """A leaf of the resolution tree: a one-component twisted unknot diagram."""
    partial: Dict[int, int]
    completion: Tuple[int, ...]
    diagram: AnnularDiagram
    writhe: int
    r: int
    r_partial: int
    twist_profile: Tuple[int, int]

    @property
    def twist_balance(self) -> int:
        """#T- minus #T+."""
        return self.twist_profile[1] - self.twist_profile[0]


class SpanningReport(BaseModel):
    crossing_order: List[int]
    leaves: List[SpanningLeaf]
    checks: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


class SupportReport(BaseModel):
    """Outcome of the alternating support check."""
    form: str
    offset: int
    alternating: bool
    advisory: bool
    offending: List[Tuple[int, int, int]] = Field(default_factory=list)
    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.offending and all(c.passed for c in self.checks)


class PsiReport(BaseModel):
    """The Plamenevskaya state and its verified properties."""
    word: Tuple[int, ...]
    labels: Tuple[int, ...]
    strands: int
    level: int
    unshifted_level: int
    checks: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


class SuiteReport(BaseModel):
    """All results from one check suite run."""
    suite: str
    results: List[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.results.append(CheckResult(name=name, passed=passed, detail=detail))

    def extend(self, results: Iterable[CheckResult], prefix: str = "") -> None:
        for result in results:
            name = f"{prefix}{result.name}" if prefix else result.name
            self.results.append(CheckResult(name=name, passed=result.passed, detail=result.detail))

    def summary(self) -> str:
        failed = sum(1 for r in self.results if not r.passed)
        return f"{self.suite}: {len(self.results) - failed} passed, {failed} failed"


class BigradedEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    i: int
    j: int
    rank: int = Field(..., ge=1)


class KhovanovRanks(BaseModel):
    """
    Khovanov homology read off the annular spectral sequence.

    `ranks` is the abutment, equal to the homology of d0 + d1; `e2_matches`
    records that the second page already equals it.
    """
    reduced: bool = False
    ranks: List[BigradedEntry] = Field(default_factory=list)
    collapse_page: int = 0
    e2_matches: bool = True

    @classmethod
    def from_counts(cls, counts: Dict[Tuple[int, int], int], **metadata) -> "KhovanovRanks":
        entries = [BigradedEntry(i=i, j=j, rank=r) for (i, j), r in sorted(counts.items()) if r]
        return cls(ranks=entries, **metadata)

    def as_dict(self) -> Dict[Tuple[int, int], int]:
        return {(e.i, e.j): e.rank for e in self.ranks}

    @property
    def total(self) -> int:
        return sum(e.rank for e in self.ranks)
