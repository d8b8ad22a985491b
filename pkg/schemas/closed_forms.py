"""
Pydantic schemas for lemma checks and layer-mod comparisons
"""
from pydantic import BaseModel, Field
from typing import Any, Dict, Literal, Optional


class PropertyReport(BaseModel):
    """Outcome of one exhaustive lemma scan at (n, k)"""
    lemma: str
    n: int
    k: int
    status: Literal["pass", "fail"]
    counterexample: Optional[Dict[str, Any]] = None
    instances_checked: int = 0
    note: Optional[str] = None

    class Config:
        json_schema_extra = {
            "example": {
                "lemma": "F_monotone",
                "n": 10,
                "k": 3,
                "status": "pass",
                "counterexample": None,
                "instances_checked": 34,
                "note": None,
            }
        }

    @property
    def passed(self) -> bool:
        return self.status == "pass"


class LayerModComparison(BaseModel):
    """Ordering of two mod-(k+1) layer sums next to the closest-element criterion"""
    n: int
    k: int
    m: int
    m_prime: int
    sum_m: int
    sum_m_prime: int
    ordering: Literal["<", "=", ">"]
    criterion: Literal["<", "=", ">"]
    within_stated_range: bool = True
    agrees: bool = Field(default=True)
