"""
Pydantic schemas for weight tables and induced-weight reports
"""
from fractions import Fraction
from pydantic import BaseModel, Field
from typing import List, Literal, Optional, Union


def format_rational(value: Fraction) -> str:
    """Render an exact rational as "p/q", or "p" when q = 1"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


OwnerKey = Union[int, List[int]]


class WeightEntry(BaseModel):
    """Total weight W of one chain group"""
    owner: OwnerKey
    width: int
    count: int
    W: str
    per_chain: str


class WeightTableDocument(BaseModel):
    """Serialized weight table"""
    n: int
    d: int
    k: int
    family: str = "basic"
    method: str = "generic"
    entries: List[WeightEntry] = Field(default_factory=list)

    class Config:
        json_schema_extra = {
            "example": {
                "n": 4,
                "d": 1,
                "k": 2,
                "family": "basic",
                "method": "generic",
                "entries": [
                    {"owner": 0, "width": 2, "count": 12, "W": "1", "per_chain": "1/12"},
                    {"owner": 1, "width": 2, "count": 12, "W": "3", "per_chain": "1/4"},
                ],
            }
        }


class InducedDeviation(BaseModel):
    """A type, layer or point whose induced weight is not exactly 1"""
    key: OwnerKey
    induced: str


class InducedReport(BaseModel):
    """Result of checking the induced-weight identity"""
    n: int
    d: int
    k: int
    mode: Literal["type", "point"]
    checked: int = 0
    deviations: List[InducedDeviation] = Field(default_factory=list)
    max_deviation: str = "0"

    @property
    def ok(self) -> bool:
        return not self.deviations


class PositivityEntry(BaseModel):
    """A group whose total weight is not strictly positive"""
    owner: OwnerKey
    W: str


class InstanceVerification(BaseModel):
    """Induced weights, positivity and path agreement for one (n, d, k)"""
    n: int
    d: int
    k: int
    status: Literal["pass", "fail", "incomplete"]
    induced: InducedReport
    point_induced: Optional[InducedReport] = None
    non_positive: List[PositivityEntry] = Field(default_factory=list)
    expected_non_positive: List[PositivityEntry] = Field(default_factory=list)
    positivity_rule: Literal["strict", "non_negative"] = "strict"
    fast_path_agrees: Optional[bool] = None
    order_invariant: Optional[bool] = None
    notes: List[str] = Field(default_factory=list)


class SpernerRow(BaseModel):
    """Symmetric chains of one length and their common weight"""
    length: int
    chains: int
    W: str
    per_chain: str


class SpernerReport(BaseModel):
    """Weighted symmetric chain decomposition of the subsets of [n]"""
    n: int
    status: Literal["pass", "fail"]
    rows: List[SpernerRow] = Field(default_factory=list)
    induced: InducedReport
    all_positive: bool = True
    total_weight: str = "0"
    bound: int = 0
    bound_holds: bool = True


class NegativeControlWitness(BaseModel):
    """A family and instance whose greedy assignment produces a negative weight"""
    family: str
    n: int
    d: int = 2
    k: int
    owner: OwnerKey
    W: str
    searched: int = 0
