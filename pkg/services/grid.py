"""
Points, types and layers of {0,...,d}^n, the forbidden-pair relation and
the residue-class candidate sets
"""
from functools import lru_cache
from itertools import product
from math import factorial, comb
from typing import Iterator, List, Literal, Optional, Sequence, Tuple, Union
import logging

from config import get_settings
from schemas.grid import Point, PointSet, SetValidation, TypeClassification, TypeTriple
from services.errors import (
    BudgetExceededError,
    DimensionMismatchError,
    OutOfRangeError,
    UnsupportedVariantError,
)

logger = logging.getLogger(__name__)

PointLike = Union[Point, Sequence[int]]
CandidateVariant = Literal["B", "B1", "B2", "conjecture", "conjecture_ceil"]

THEOREM_VARIANTS = ("B", "B1", "B2")
CONJECTURE_VARIANTS = ("conjecture", "conjecture_ceil")


def _entries(x: PointLike) -> Tuple[int, ...]:
    if isinstance(x, Point):
        return x.entries
    return tuple(x)


def binom(n: int, r: int) -> int:
    """Ordinary binomial coefficient, 0 outside 0 <= r <= n"""
    if n < 0 or r < 0 or r > n:
        return 0
    return comb(n, r)


def forbidden_pair(x: PointLike, y: PointLike, k: int) -> bool:
    """
    Check whether x and y may not both belong to a k-Sperner set

    The relation is symmetrized: the pair is forbidden when the points are
    distinct, comparable in either direction, and differ strictly in at
    most k coordinates.

    Raises:
        DimensionMismatchError: if the points have different n or d
        OutOfRangeError: if k is negative
    """
    xs, ys = _entries(x), _entries(y)
    if len(xs) != len(ys):
        raise DimensionMismatchError(f"points of length {len(xs)} and {len(ys)}")
    if isinstance(x, Point) and isinstance(y, Point) and x.d != y.d:
        raise DimensionMismatchError(f"points over d={x.d} and d={y.d}")
    if k < 0:
        raise OutOfRangeError(f"k must be non-negative, got {k}")

    up = down = True
    strict = 0
    for xi, yi in zip(xs, ys):
        if xi < yi:
            down = False
            strict += 1
        elif xi > yi:
            up = False
            strict += 1
    if strict == 0 or not (up or down):
        return False
    return strict <= k


@lru_cache(maxsize=None)
def layer_sizes(n: int, d: int) -> Tuple[int, ...]:
    """Coefficients of (1 + x + ... + x^d)^n, by exact convolution"""
    row = [1]
    for _ in range(n):
        widened = [0] * (len(row) + d)
        for i, value in enumerate(row):
            for shift in range(d + 1):
                widened[i + shift] += value
        row = widened
    return tuple(row)


def layer_size(n: int, d: int, m: int) -> int:
    if n < 0 or d < 1:
        raise OutOfRangeError(f"invalid grid n={n}, d={d}")
    if m < 0 or m > d * n:
        raise OutOfRangeError(f"layer {m} outside [0, {d * n}]")
    return layer_sizes(n, d)[m]


def multinomial(n: int, a: int, c: int) -> int:
    """n!/(a! b! c!) with b = n - a - c; 0 outside the simplex"""
    b = n - a - c
    if a < 0 or c < 0 or b < 0:
        return 0
    return factorial(n) // (factorial(a) * factorial(b) * factorial(c))


def type_size(t: TypeTriple) -> int:
    return multinomial(t.n, t.a, t.c)


def iter_types(n: int) -> Iterator[TypeTriple]:
    """All types of {0,1,2}^n, from (n,0,0) downwards row by row"""
    for a in range(n, -1, -1):
        for c in range(0, n - a + 1):
            yield TypeTriple(a=a, b=n - a - c, c=c)


def type_of(x: PointLike) -> TypeTriple:
    entries = _entries(x)
    if any(value > 2 for value in entries):
        raise OutOfRangeError("types are defined for d=2 points only")
    return TypeTriple(a=entries.count(0), b=entries.count(1), c=entries.count(2))


def classify_type(t: TypeTriple, k: int) -> TypeClassification:
    # Layer b+2c sits at distance |c - a| from the middle layer n
    return TypeClassification(
        type=t,
        k=k,
        lower=t.a >= t.c,
        upper=t.a <= t.c,
        outer=abs(t.layer - t.n) >= k,
    )


def classify_layer(n: int, d: int, k: int, m: int) -> Literal["inner", "outer"]:
    """Inner/outer status of layer m for d=1 or d=2"""
    if m < 0 or m > d * n:
        raise OutOfRangeError(f"layer {m} outside [0, {d * n}]")
    if d == 1:
        return "outer" if abs(2 * m - n) >= k else "inner"
    if d == 2:
        return "outer" if abs(m - n) >= k else "inner"
    raise UnsupportedVariantError(f"layer classification is defined for d in {{1, 2}}, got {d}")


def candidate_residue(n: int, d: int, k: int, variant: CandidateVariant = "B") -> Tuple[int, int]:
    """
    Residue and modulus of a candidate set

    Returns:
        (residue, modulus) with modulus = d*k + 1
    """
    if variant in THEOREM_VARIANTS and d not in (1, 2):
        raise UnsupportedVariantError(f"variant {variant} is only proven for d in {{1, 2}}")
    if variant not in THEOREM_VARIANTS + CONJECTURE_VARIANTS:
        raise UnsupportedVariantError(f"unknown candidate variant {variant!r}")
    if d < 1 or k < 0:
        raise OutOfRangeError(f"invalid parameters d={d}, k={k}")
    modulus = d * k + 1
    if variant in ("B2", "conjecture_ceil"):
        target = (n * d + 1) // 2
    else:
        target = (n * d) // 2
    return target % modulus, modulus


def is_unproven(d: int, variant: CandidateVariant) -> bool:
    return variant in CONJECTURE_VARIANTS and d >= 3


def _check_point_budget(n: int, d: int, max_points: Optional[int]) -> None:
    limit = max_points if max_points is not None else get_settings().point_budget
    size = (d + 1) ** n
    if size > limit:
        raise BudgetExceededError("point", limit, size, hint=f"(d+1)^n for n={n}, d={d}")


def build_candidate_set(
    n: int,
    d: int,
    k: int,
    variant: CandidateVariant = "B",
    max_points: Optional[int] = None,
) -> PointSet:
    residue, modulus = candidate_residue(n, d, k, variant)
    _check_point_budget(n, d, max_points)
    points = [x for x in product(range(d + 1), repeat=n) if sum(x) % modulus == residue]
    if is_unproven(d, variant):
        logger.info(f"Candidate for d={d} follows the UNPROVEN residue conjecture")
    return PointSet(n=n, d=d, k=k, points=points)


def residue_class_sizes(n: int, d: int, modulus: int) -> List[int]:
    """Number of points of {0..d}^n in each residue class of |x| mod modulus"""
    if modulus < 1:
        raise OutOfRangeError(f"modulus must be positive, got {modulus}")
    counts = [0] * modulus
    counts[0] = 1
    for _ in range(n):
        step = [0] * modulus
        for r, value in enumerate(counts):
            if value:
                for digit in range(d + 1):
                    step[(r + digit) % modulus] += value
        counts = step
    return counts


def candidate_size(n: int, d: int, k: int, variant: CandidateVariant = "B") -> int:
    """|candidate set| without materializing its points"""
    residue, modulus = candidate_residue(n, d, k, variant)
    return residue_class_sizes(n, d, modulus)[residue]


def validate_set(s: PointSet, k: int) -> SetValidation:
    points = s.points
    levels = [sum(point) for point in points]
    # Comparable points with at most k strict coordinates are at most d*k levels apart
    reach = s.d * k
    for i, x in enumerate(points):
        for j in range(i + 1, len(points)):
            if abs(levels[i] - levels[j]) > reach:
                continue
            y = points[j]
            if forbidden_pair(x, y, k):
                logger.debug(f"Forbidden pair {x} ~ {y} for k={k}")
                return SetValidation(ok=False, witness=(x, y))
    logger.debug(f"Validated {len(points)} points for k={k}")
    return SetValidation(ok=True)
