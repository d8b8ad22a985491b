"""
Pydantic schemas for command reports, staircase diagrams and asymptotics
"""
from pydantic import BaseModel, Field, model_validator
from typing import Any, Dict, List, Literal, Optional

CellStyle = Literal["plain", "highlight-size", "highlight-weight"]


class ReportDocument(BaseModel):
    """Envelope written by every command"""
    command: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    status: Literal["pass", "fail", "incomplete"]
    payload: Any = None
    timing: float = 0.0

    class Config:
        json_schema_extra = {
            "example": {
                "command": "certify",
                "parameters": {"n": 3, "d": 2, "k": 2},
                "status": "pass",
                "payload": {"n": 3, "d": 2, "k": 2, "mis": 7, "candidate": 7, "unique": True, "status": "pass"},
                "timing": 0.012,
            }
        }


class DiagramCell(BaseModel):
    """One type (a, c) of the staircase with its style and annotation"""
    a: int = Field(ge=0)
    c: int = Field(ge=0)
    style: CellStyle = "plain"
    annotation: Optional[str] = None


class DiagramSpec(BaseModel):
    """Staircase diagram of the types of {0,1,2}^n"""
    n: int = Field(ge=0)
    k: Optional[int] = None
    title: Optional[str] = None
    cells: List[DiagramCell] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_cells(self):
        for cell in self.cells:
            if cell.a + cell.c > self.n:
                raise ValueError(f"cell ({cell.a}, {cell.c}) is not a type of n={self.n}")
        return self


class AsymptoticsRow(BaseModel):
    n: int
    candidate: int
    ratio: str
    deviation: str


class AsymptoticsReport(BaseModel):
    """Density of the residue-class candidate against 1/(dk+1)"""
    d: int
    k: int
    limit: str
    rows: List[AsymptoticsRow] = Field(default_factory=list)
    decreasing: bool = True
