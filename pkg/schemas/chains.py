"""
Pydantic schemas for basic chains and chain groups
"""
from pydantic import BaseModel, Field, model_validator
from typing import List, Literal, Tuple, Union

from schemas.grid import TypeTriple

ChainFamily = Literal["basic", "anti_basic"]


class BasicChain(BaseModel):
    """A basic chain given by its start point and the order of raised coordinates"""
    start: Tuple[int, ...]
    coords: Tuple[int, ...] = ()
    d: int = Field(ge=1)

    class Config:
        frozen = True

    @model_validator(mode="after")
    def _check_coords(self):
        if len(set(self.coords)) != len(self.coords):
            raise ValueError(f"coordinates {self.coords} are not distinct")
        for j in self.coords:
            if j < 0 or j >= len(self.start):
                raise ValueError(f"coordinate {j} outside the start point")
            if self.start[j] != 0:
                raise ValueError(f"coordinate {j} of the start point is not 0")
        return self

    @property
    def width(self) -> int:
        return len(self.coords)

    @property
    def length(self) -> int:
        return self.d * self.width + 1

    def points(self) -> List[Tuple[int, ...]]:
        current = list(self.start)
        realized = [tuple(current)]
        for j in self.coords:
            for _ in range(self.d):
                current[j] += 1
                realized.append(tuple(current))
        return realized


class ChainGroup(BaseModel):
    """
    All chains of the family sharing an owner and a width

    The owner is a layer index for d=1 and a type for d=2. Upper owners
    (farther from the middle on the upper side) own chains that reach down
    from them; every other group reaches up from its owner.
    """
    n: int = Field(ge=0)
    d: Literal[1, 2]
    k: int = Field(ge=1)
    owner: Union[int, TypeTriple]
    width: int = Field(ge=0)
    family: ChainFamily = "basic"

    class Config:
        frozen = True

    @model_validator(mode="after")
    def _check_shape(self):
        w, k, n = self.width, self.k, self.n
        if self.d == 2:
            if not isinstance(self.owner, TypeTriple) or self.owner.n != n:
                raise ValueError(f"d=2 groups are owned by a type of n={n}")
            a, c = self.owner.a, self.owner.c
            if a >= c:
                if not ((w == k and a - c >= k) or (a - c == w and w <= k)):
                    raise ValueError(f"type {self.owner.as_list()} cannot own a width-{w} group")
            elif w != k or c - a < k + 1:
                raise ValueError(f"upper type {self.owner.as_list()} owns only full-width groups")
        else:
            if not isinstance(self.owner, int) or not 0 <= self.owner <= n:
                raise ValueError(f"d=1 groups are owned by a layer in [0, {n}]")
            m = self.owner
            if 2 * m <= n:
                if not ((w == k and 2 * m + k <= n) or (2 * m + w == n and w <= k)):
                    raise ValueError(f"layer {m} cannot own a width-{w} group")
            elif w != k or 2 * m < n + k + 1:
                raise ValueError(f"upper layer {m} owns only full-width groups")
        return self

    @property
    def descending(self) -> bool:
        """Whether the chains reach down from the owner"""
        if self.d == 2:
            return self.owner.a < self.owner.c
        return 2 * self.owner > self.n

    @property
    def key(self) -> Union[int, Tuple[int, int]]:
        if self.d == 2:
            return (self.owner.a, self.owner.c)
        return self.owner

    @property
    def symmetric(self) -> bool:
        if self.d == 2:
            return not self.descending and self.owner.a - self.owner.c == self.width
        return not self.descending and 2 * self.owner + self.width == self.n


class ChainGroupDocument(BaseModel):
    """Serialized chain group"""
    owner: Union[int, List[int]]
    width: int
    count: int
    footprint: List[Union[int, List[int]]]

    class Config:
        json_schema_extra = {
            "example": {
                "owner": [5, 3, 1],
                "width": 2,
                "count": 10080,
                "footprint": [[5, 3, 1], [4, 4, 1], [4, 3, 2], [3, 4, 2], [3, 3, 3]],
            }
        }
