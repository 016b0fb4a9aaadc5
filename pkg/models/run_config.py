"""
Validated run configuration for the command-line tool.
"""

from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from .validators import ValidationUtils

HARD_CUBE_LIMIT = 26


class ComplexMode(str, Enum):
    """Which differential to assemble."""
    SKEIN = "skein"
    KHOVANOV = "khovanov"


class OutputFormat(str, Enum):
    TABLE = "table"
    JSON = "json"


class RunConfig(BaseModel):
    """
    Options for one command invocation.

    Example:
        >>> cfg = RunConfig(command="homology", braid="2: -1")
        >>> cfg.mode
        'skein'
    """
    command: str
    suite: Optional[str] = None
    braid: Optional[str] = None
    pd: Optional[Path] = None
    random: Optional[int] = Field(None, ge=1)
    max_crossings: int = Field(6, ge=0, le=HARD_CUBE_LIMIT)
    seed: Optional[int] = None
    reduced: bool = False
    meridians: bool = False
    mirror: bool = False
    unshifted: bool = False
    mode: ComplexMode = ComplexMode.SKEIN
    r_max: int = Field(4, ge=1)
    format: OutputFormat = OutputFormat.TABLE
    cap: Optional[int] = None
    progress: bool = True

    class Config:
        use_enum_values = True

    @field_validator('braid')
    @classmethod
    def validate_braid(cls, v):
        if v is not None and not ValidationUtils.validate_braid_text(v):
            raise ValueError('braid must look like "n: w1 w2 ..."')
        return v

    @field_validator('cap')
    @classmethod
    def validate_cap(cls, v):
        if v is not None and not 0 <= v <= HARD_CUBE_LIMIT:
            raise ValueError(f"cap must be between 0 and {HARD_CUBE_LIMIT}")
        return v

    @model_validator(mode='after')
    def validate_input_source(self):
        sources = [s for s in (self.braid, self.pd, self.random) if s is not None]
        if self.command == "check" and not sources:
            # suites fall back to their seeded default corpus
            return self
        if len(sources) != 1:
            raise ValueError('exactly one of --braid, --pd or --random is required')
        if self.random is not None and self.command != "check":
            raise ValueError('--random is only available for check suites')
        return self
