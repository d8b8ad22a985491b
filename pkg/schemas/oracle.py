"""
Pydantic schemas for the conflict-graph oracle and certification verdicts
"""
from pydantic import BaseModel, Field
from typing import List, Literal, Optional

from schemas.grid import PointSet


class ConflictGraphSummary(BaseModel):
    n: int
    d: int
    k: int
    vertices: int
    edges: int


class MISResult(BaseModel):
    """Maximum independent set of a conflict graph"""
    size: int
    witness: PointSet
    certified: bool = True
    nodes: int = 0
    symmetry_reduced: bool = False
    all_solutions: Optional[List[PointSet]] = None
    truncated: bool = False


class Verdict(BaseModel):
    """Certification of a candidate residue class against the oracle"""
    n: int
    d: int
    k: int
    mis: Optional[int] = None
    candidate: int
    unique: Optional[bool] = None
    status: Literal["pass", "fail", "incomplete"]
    variant: str = "B"
    unproven: bool = False
    candidate_valid: Optional[bool] = None
    maximum_set_count: Optional[int] = None
    predicted_maxima: int = 1
    certified: bool = True
    notes: List[str] = Field(default_factory=list)

    class Config:
        json_schema_extra = {
            "example": {
                "n": 3,
                "d": 2,
                "k": 2,
                "mis": 7,
                "candidate": 7,
                "unique": True,
                "status": "pass",
                "variant": "B",
                "unproven": False,
                "candidate_valid": True,
                "maximum_set_count": 1,
                "predicted_maxima": 1,
                "certified": True,
                "notes": [],
            }
        }
