"""
Pydantic schemas for points, types and point sets of the grid {0,...,d}^n
"""
from pydantic import BaseModel, Field, model_validator
from typing import Optional, List, Tuple, Literal


class Point(BaseModel):
    """A point of {0,...,d}^n stored as its digit vector"""
    entries: Tuple[int, ...]
    d: int = Field(ge=1)

    class Config:
        frozen = True

    @model_validator(mode="after")
    def _check_entries(self):
        for value in self.entries:
            if value < 0 or value > self.d:
                raise ValueError(f"entry {value} outside [0, {self.d}]")
        return self

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def level(self) -> int:
        return sum(self.entries)


class TypeTriple(BaseModel):
    """Orbit of points with a zeros, b ones and c twos"""
    a: int = Field(ge=0)
    b: int = Field(ge=0)
    c: int = Field(ge=0)

    class Config:
        frozen = True
        json_schema_extra = {"example": {"a": 5, "b": 3, "c": 1}}

    @classmethod
    def of(cls, a: int, b: int, c: int) -> "TypeTriple":
        return cls(a=a, b=b, c=c)

    @classmethod
    def from_ac(cls, n: int, a: int, c: int) -> "TypeTriple":
        return cls(a=a, b=n - a - c, c=c)

    @property
    def n(self) -> int:
        return self.a + self.b + self.c

    # Capital aliases used by the closed forms
    @property
    def A(self) -> int:
        return self.a

    @property
    def B(self) -> int:
        return self.b

    @property
    def C(self) -> int:
        return self.c

    @property
    def layer(self) -> int:
        return self.b + 2 * self.c

    @property
    def is_lower(self) -> bool:
        return self.a >= self.c

    @property
    def is_upper(self) -> bool:
        return self.a <= self.c

    def mirror(self) -> "TypeTriple":
        return TypeTriple(a=self.c, b=self.b, c=self.a)

    def as_list(self) -> List[int]:
        return [self.a, self.b, self.c]


class TypeClassification(BaseModel):
    """Lower/upper and inner/outer flags of a type for a given k"""
    type: TypeTriple
    k: int
    lower: bool
    upper: bool
    outer: bool

    @property
    def inner(self) -> bool:
        return not self.outer

    @property
    def side(self) -> Literal["lower", "upper", "both"]:
        if self.lower and self.upper:
            return "both"
        return "lower" if self.lower else "upper"


class PointSet(BaseModel):
    """A set of points sharing n and d, kept sorted lexicographically"""
    n: int = Field(ge=0)
    d: int = Field(ge=1)
    k: Optional[int] = None
    points: List[Tuple[int, ...]] = Field(default_factory=list)

    class Config:
        json_schema_extra = {
            "example": {"n": 2, "d": 1, "k": 1, "points": [[0, 0], [1, 1]]}
        }

    @model_validator(mode="after")
    def _normalize(self):
        for point in self.points:
            if len(point) != self.n:
                raise ValueError(f"point {point} does not have {self.n} coordinates")
            if any(value < 0 or value > self.d for value in point):
                raise ValueError(f"point {point} leaves [0, {self.d}]^{self.n}")
        self.points = sorted(set(self.points))
        return self

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, point) -> bool:
        return tuple(point) in set(self.points)

    def as_frozenset(self) -> frozenset:
        return frozenset(self.points)


class SetValidation(BaseModel):
    """Outcome of validate_set: ok, or one forbidden witness pair"""
    ok: bool
    witness: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]] = None
