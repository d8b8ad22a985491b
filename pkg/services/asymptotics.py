"""
Density of the residue-class candidate relative to the whole grid
"""
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable
import logging

from schemas.reports import AsymptoticsReport, AsymptoticsRow
from schemas.weights import format_rational
from services.errors import OutOfRangeError
from services.grid import candidate_size

logger = logging.getLogger(__name__)

MAX_N = 2000
PRECISION = 80
DIGITS = 30


def deviation_decimal(value: Fraction) -> str:
    """High-precision decimal rendering of an exact rational"""
    with localcontext() as ctx:
        ctx.prec = PRECISION
        return format(Decimal(value.numerator) / Decimal(value.denominator), f".{DIGITS}E")


def asymptotics(k: int, n_values: Iterable[int], d: int = 2) -> AsymptoticsReport:
    """
    |B| / (d+1)^n against the limit 1/(dk+1)

    Raises:
        OutOfRangeError: for n outside [0, 2000] or k < 1
    """
    n_values = list(n_values)
    if k < 1:
        raise OutOfRangeError(f"k must be positive, got {k}")
    for n in n_values:
        if n < 0 or n > MAX_N:
            raise OutOfRangeError(f"n={n} outside [0, {MAX_N}]")

    limit = Fraction(1, d * k + 1)
    rows = []
    deviations = []
    for n in n_values:
        size = candidate_size(n, d, k, "B" if d in (1, 2) else "conjecture")
        ratio = Fraction(size, (d + 1) ** n)
        deviation = abs(ratio - limit)
        deviations.append(deviation)
        rows.append(
            AsymptoticsRow(n=n, candidate=size, ratio=format_rational(ratio), deviation=deviation_decimal(deviation))
        )
    decreasing = all(x > y for x, y in zip(deviations, deviations[1:]))
    logger.info(f"Asymptotics for d={d}, k={k} over {len(rows)} values of n")
    return AsymptoticsReport(d=d, k=k, limit=format_rational(limit), rows=rows, decreasing=decreasing)
