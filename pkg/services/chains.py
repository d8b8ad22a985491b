"""
Basic chains and the chain families of {0,1}^n and {0,1,2}^n

Chains are grouped by owner and width. A group is owned by the end of its
chains that lies farther from the middle layer; groups of symmetric chains
are owned by their lower end. Everything weight-related works on groups and
types, point-level chains are only realized for verification.
"""
from itertools import combinations, permutations
from math import comb
from typing import Iterator, List, Optional, Sequence, Tuple, Union
import logging

from config import get_settings
from schemas.chains import BasicChain, ChainFamily, ChainGroup, ChainGroupDocument
from schemas.grid import Point, TypeTriple
from services.errors import (
    BudgetExceededError,
    NotAChainError,
    OutOfRangeError,
    UnsupportedVariantError,
)
from services.grid import multinomial

logger = logging.getLogger(__name__)

GroupKey = Union[int, Tuple[int, int]]


def falling(x: int, w: int) -> int:
    """x (x-1) ... (x-w+1)"""
    result = 1
    for i in range(w):
        result *= x - i
    return result


def _check_parameters(n: int, d: int, k: int, family: ChainFamily) -> None:
    if d not in (1, 2):
        raise UnsupportedVariantError(f"chain families are defined for d in {{1, 2}}, got {d}")
    if family == "anti_basic" and d != 2:
        raise UnsupportedVariantError("the anti-basic family only exists for d=2")
    if n < 0 or k < 1:
        raise OutOfRangeError(f"invalid parameters n={n}, k={k}")


def group_distance(g: ChainGroup) -> int:
    """Distance of the owner from the middle layer, in layers"""
    if g.d == 2:
        return abs(g.owner.c - g.owner.a)
    return abs(2 * g.owner - g.n)


def processing_key(g: ChainGroup) -> Tuple[int, ...]:
    """Decreasing distance from the middle, ties by ascending c then a"""
    if g.d == 2:
        return (-group_distance(g), g.owner.c, g.owner.a)
    return (-group_distance(g), g.owner)


def enumerate_chain_groups(n: int, d: int, k: int, family: ChainFamily = "basic") -> List[ChainGroup]:
    """
    List every chain group of the family, each symmetric group once

    Args:
        n: Dimension of the cube
        d: Alphabet bound (1 or 2)
        k: Maximal chain width
        family: "basic", or "anti_basic" for d=2

    Returns:
        List[ChainGroup]: groups in weight-assignment order
    """
    _check_parameters(n, d, k, family)
    groups = []
    if d == 2:
        for a in range(n, -1, -1):
            for c in range(0, n - a + 1):
                owner = TypeTriple(a=a, b=n - a - c, c=c)
                if a >= c:
                    groups.append(ChainGroup(n=n, d=2, k=k, owner=owner, width=min(a - c, k), family=family))
                elif c - a >= k + 1:
                    groups.append(ChainGroup(n=n, d=2, k=k, owner=owner, width=k, family=family))
    else:
        for m in range(n + 1):
            if 2 * m <= n:
                groups.append(ChainGroup(n=n, d=1, k=k, owner=m, width=min(n - 2 * m, k)))
            elif 2 * m >= n + k + 1:
                groups.append(ChainGroup(n=n, d=1, k=k, owner=m, width=k))
    groups.sort(key=processing_key)
    return groups


def _lower_footprint_d2(a: int, b: int, c: int, w: int, family: ChainFamily) -> List[Tuple[int, int, int]]:
    types = [(a, b, c)]
    if family == "basic":
        for j in range(1, w + 1):
            types.append((a - j, b + 1, c + j - 1))
            types.append((a - j, b, c + j))
    else:
        for j in range(1, w + 1):
            types.append((a - j, b + j, c))
        for j in range(1, w + 1):
            types.append((a - w, b + w - j, c + j))
    return types


def footprint_keys(g: ChainGroup) -> List[GroupKey]:
    """Footprint as (a, c) pairs for d=2 or layer indices for d=1"""
    if g.d == 1:
        step = -1 if g.descending else 1
        return [g.owner + step * j for j in range(g.width + 1)]
    a, b, c = g.owner.a, g.owner.b, g.owner.c
    if g.descending:
        mirrored = _lower_footprint_d2(c, b, a, g.width, g.family)
        return [(t[2], t[0]) for t in mirrored]
    return [(t[0], t[2]) for t in _lower_footprint_d2(a, b, c, g.width, g.family)]


def footprint(g: ChainGroup) -> List[Union[TypeTriple, int]]:
    """Types (d=2) or layers (d=1) visited by the group, starting at the owner"""
    keys = footprint_keys(g)
    if g.d == 1:
        return keys
    return [TypeTriple.from_ac(g.n, a, c) for a, c in keys]


def low_end(g: ChainGroup) -> GroupKey:
    """Key of the type or layer where the group's chains start"""
    keys = footprint_keys(g)
    return keys[-1] if g.descending else keys[0]


def group_count(g: ChainGroup) -> int:
    """Number of point-level chains in the group"""
    start = low_end(g)
    if g.d == 1:
        return comb(g.n, start) * falling(g.n - start, g.width)
    a, c = start
    return multinomial(g.n, a, c) * falling(a, g.width)


def group_document(g: ChainGroup) -> ChainGroupDocument:
    owner = g.owner.as_list() if g.d == 2 else g.owner
    trail = [t.as_list() if g.d == 2 else t for t in footprint(g)]
    return ChainGroupDocument(owner=owner, width=g.width, count=group_count(g), footprint=trail)


def chains_of_group(g: ChainGroup) -> Iterator[BasicChain]:
    """Realize the point-level chains of a basic-family group"""
    if g.family != "basic":
        raise UnsupportedVariantError("only basic chains are realized at point level")
    start = low_end(g)
    n, d = g.n, g.d
    if d == 1:
        for ones in combinations(range(n), start):
            point = tuple(1 if i in ones else 0 for i in range(n))
            zeros = [i for i in range(n) if point[i] == 0]
            for coords in permutations(zeros, g.width):
                yield BasicChain(start=point, coords=coords, d=1)
        return
    a, c = start
    for point in _points_of_type(n, a, c):
        zeros = [i for i in range(n) if point[i] == 0]
        for coords in permutations(zeros, g.width):
            yield BasicChain(start=point, coords=coords, d=2)


def _points_of_type(n: int, a: int, c: int) -> Iterator[Tuple[int, ...]]:
    for twos in combinations(range(n), c):
        rest = [i for i in range(n) if i not in twos]
        for zeros in combinations(rest, a):
            yield tuple(2 if i in twos else 0 if i in zeros else 1 for i in range(n))


def enumerate_point_chains(
    n: int,
    d: int,
    k: int,
    max_points: Optional[int] = None,
    max_chains: Optional[int] = None,
) -> Iterator[BasicChain]:
    """
    Stream every chain of the family, symmetric chains once

    Raises:
        BudgetExceededError: if the cube or the chain total is over budget
    """
    _check_parameters(n, d, k, "basic")
    settings = get_settings()
    point_limit = max_points if max_points is not None else settings.point_budget
    chain_limit = max_chains if max_chains is not None else settings.MAX_ENUMERATED_CHAINS
    if (d + 1) ** n > point_limit:
        raise BudgetExceededError("point", point_limit, (d + 1) ** n)
    groups = enumerate_chain_groups(n, d, k)
    total = sum(group_count(g) for g in groups)
    if total > chain_limit:
        raise BudgetExceededError("chain enumeration", chain_limit, total)
    logger.info(f"Enumerating {total} chains for n={n}, d={d}, k={k}")
    return _stream(groups)


def _stream(groups: Sequence[ChainGroup]) -> Iterator[BasicChain]:
    for g in groups:
        yield from chains_of_group(g)


def is_basic(chain: Sequence[Union[Point, Sequence[int]]], d: int = 2) -> bool:
    """
    Check the basic-chain conditions on an explicit point sequence

    The first raised coordinate must start at 0, a coordinate may only be
    left once it reaches d (and the next one must then start at 0), and the
    last raised coordinate must end at d.

    Raises:
        NotAChainError: if a step is not a unit increment of one coordinate
    """
    points = [p.entries if isinstance(p, Point) else tuple(p) for p in chain]
    if len(points) <= 1:
        return True
    raised = []
    for x, y in zip(points, points[1:]):
        if len(x) != len(y):
            raise NotAChainError(f"points {x} and {y} have different lengths")
        diffs = [i for i in range(len(x)) if x[i] != y[i]]
        if len(diffs) != 1 or y[diffs[0]] != x[diffs[0]] + 1 or y[diffs[0]] > d:
            raise NotAChainError(f"{x} -> {y} is not a unit increment")
        raised.append(diffs[0])

    if points[0][raised[0]] != 0:
        return False
    for i in range(1, len(raised)):
        if raised[i] != raised[i - 1]:
            here = points[i]
            if here[raised[i - 1]] != d or here[raised[i]] != 0:
                return False
    return points[-1][raised[-1]] == d
