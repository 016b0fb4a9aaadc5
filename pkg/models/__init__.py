"""
AnnularSkein Pydantic Models

This package contains the data models shared by the diagram, algebra,
skein and invariants packages, plus the exception hierarchy.
"""

from .diagram import (
    # Conventions
    SLOT_A,
    SLOT_B,
    SLOT_C,
    SLOT_D,
    SMOOTHING_PAIRS,
    smoothing_partner,
    head_slots,
    tail_slots,
    oriented_smoothing,

    # Core Models
    BraidWord,
    Crossing,
    Arc,
    AnnularDiagram,
    Circle,
    CircleConfiguration,
    GoeritzData,
)

from .pd_document import AnnularPDDocument

from .results import (
    ShiftRecord,
    RankEntry,
    CheckResult,
    TrigradedRanks,
    PageEntry,
    SpectralPage,
    SpectralReport,
    SpanningLeaf,
    SpanningReport,
    SupportReport,
    PsiReport,
    SuiteReport,
    BigradedEntry,
    KhovanovRanks,
)

from .run_config import (
    HARD_CUBE_LIMIT,
    ComplexMode,
    OutputFormat,
    RunConfig,
)

from .errors import (
    SkeinError,
    DiagramParseError,
    DisconnectedDiagramError,
    CapacityError,
    DimensionMismatchError,
    InvariantViolation,
    TargetClassError,
    NotABraidClosureError,
    UnknownSuiteError,
)

from .validators import ValidationUtils

__all__ = [
    # Conventions
    "SLOT_A",
    "SLOT_B",
    "SLOT_C",
    "SLOT_D",
    "SMOOTHING_PAIRS",
    "smoothing_partner",
    "head_slots",
    "tail_slots",
    "oriented_smoothing",

    # Core Models
    "BraidWord",
    "Crossing",
    "Arc",
    "AnnularDiagram",
    "Circle",
    "CircleConfiguration",
    "GoeritzData",
    "AnnularPDDocument",

    # Results
    "ShiftRecord",
    "RankEntry",
    "CheckResult",
    "TrigradedRanks",
    "PageEntry",
    "SpectralPage",
    "SpectralReport",
    "SpanningLeaf",
    "SpanningReport",
    "SupportReport",
    "PsiReport",
    "SuiteReport",
    "BigradedEntry",
    "KhovanovRanks",

    # Run configuration
    "HARD_CUBE_LIMIT",
    "ComplexMode",
    "OutputFormat",
    "RunConfig",

    # Errors
    "SkeinError",
    "DiagramParseError",
    "DisconnectedDiagramError",
    "CapacityError",
    "DimensionMismatchError",
    "InvariantViolation",
    "TargetClassError",
    "NotABraidClosureError",
    "UnknownSuiteError",

    # Utilities
    "ValidationUtils",
]
