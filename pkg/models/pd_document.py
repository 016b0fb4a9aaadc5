"""
Structured annular PD document accepted on the command line and by the library.

Example document (the closure of the braid "2: 1"):

    {
      "crossings": [{"arcs": [1, 1, 0, 0], "sign": 1}],
      "arcs": [{"label": 0, "ray_count": 1}, {"label": 1, "ray_count": 1}],
      "marked": 0,
      "odd_linking": false
    }
"""

from typing import List

from pydantic import BaseModel, Field

from .diagram import Arc, Crossing


class AnnularPDDocument(BaseModel):
    """Raw document fields before diagram-level validation."""
    crossings: List[Crossing] = Field(default_factory=list)
    arcs: List[Arc]
    marked: int
    odd_linking: bool = False
