"""
Exact weight assignment for the chain families and the induced-weight check

Weights are attached to chain groups: W is the total weight of a group and
every chain in it carries W / group_count. All arithmetic uses Fraction.
"""
from collections import Counter, defaultdict
from fractions import Fraction
from itertools import groupby, product
from math import comb
from typing import Dict, List, Optional, Union
import logging
import random

from schemas.chains import ChainFamily, ChainGroup
from schemas.weights import (
    InducedDeviation,
    InducedReport,
    PositivityEntry,
    WeightEntry,
    WeightTableDocument,
    format_rational,
)
from services.chains import (
    GroupKey,
    chains_of_group,
    enumerate_chain_groups,
    enumerate_point_chains,
    falling,
    footprint_keys,
    group_count,
    group_distance,
)
from services.errors import OutOfRangeError
from services.grid import binom, multinomial

logger = logging.getLogger(__name__)


class WeightTable:
    """Total group weights W keyed by owner: layer m (d=1) or (a, c) (d=2)"""

    def __init__(
        self,
        n: int,
        d: int,
        k: int,
        entries: Dict[GroupKey, Fraction],
        family: ChainFamily = "basic",
        method: str = "generic",
    ):
        self.n = n
        self.d = d
        self.k = k
        self.entries = dict(entries)
        self.family = family
        self.method = method
        self._groups: Optional[List[ChainGroup]] = None

    @property
    def groups(self) -> List[ChainGroup]:
        if self._groups is None:
            self._groups = enumerate_chain_groups(self.n, self.d, self.k, self.family)
        return self._groups

    def W(self, *key: int) -> Fraction:
        """
        Look up a group weight, 0 outside the cube

        Mirror names resolve to the owning group: W(c, a) for a symmetric
        group owned by (a, c), and W(n - m) for d=1.
        """
        if self.d == 1:
            (m,) = key
            if m < 0 or m > self.n:
                return Fraction(0)
            if m in self.entries:
                return self.entries[m]
            return self.entries.get(self.n - m, Fraction(0))
        a, c = key
        if a < 0 or c < 0 or a + c > self.n:
            return Fraction(0)
        if (a, c) in self.entries:
            return self.entries[(a, c)]
        return self.entries.get((c, a), Fraction(0))

    def per_chain_weight(self, g: ChainGroup) -> Fraction:
        return self.entries[g.key] / group_count(g)

    def total_weight(self) -> Fraction:
        return sum(self.entries.values(), Fraction(0))

    def perturbed(self, key: GroupKey, delta: Union[int, Fraction]) -> "WeightTable":
        """Copy of the table with one entry shifted by delta"""
        if key not in self.entries:
            raise OutOfRangeError(f"{key} is not an owner of this table")
        entries = dict(self.entries)
        entries[key] = entries[key] + delta
        return WeightTable(self.n, self.d, self.k, entries, self.family, f"{self.method}+perturbed")

    def owner_label(self, key: GroupKey) -> Union[int, List[int]]:
        if self.d == 1:
            return key
        a, c = key
        return [a, self.n - a - c, c]

    def to_document(self) -> WeightTableDocument:
        rows = []
        for g in self.groups:
            weight = self.entries[g.key]
            count = group_count(g)
            rows.append(
                WeightEntry(
                    owner=self.owner_label(g.key),
                    width=g.width,
                    count=count,
                    W=format_rational(weight),
                    per_chain=format_rational(weight / count),
                )
            )
        return WeightTableDocument(
            n=self.n, d=self.d, k=self.k, family=self.family, method=self.method, entries=rows
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightTable):
            return NotImplemented
        return (self.n, self.d, self.k, self.entries) == (other.n, other.d, other.k, other.entries)

    def __repr__(self) -> str:
        return f"WeightTable(n={self.n}, d={self.d}, k={self.k}, method={self.method!r}, owners={len(self.entries)})"


def key_size(n: int, d: int, key: GroupKey) -> int:
    """Number of points of a layer (d=1) or a type (d=2)"""
    if d == 1:
        return binom(n, key)
    a, c = key
    return multinomial(n, a, c)


def _shuffled_within_distance(groups: List[ChainGroup], seed: int) -> List[ChainGroup]:
    rng = random.Random(seed)
    ordered = []
    for _, block in groupby(groups, key=group_distance):
        block = list(block)
        rng.shuffle(block)
        ordered.extend(block)
    return ordered


def assign_weights_generic(
    n: int,
    d: int,
    k: int,
    family: ChainFamily = "basic",
    seed: Optional[int] = None,
) -> WeightTable:
    """
    Assign weights owner by owner, from the outermost inwards

    Each owner receives its type (or layer) size minus the weight already
    placed on it by previously assigned groups. Negative results are kept.

    Args:
        n: Dimension
        d: 1 or 2
        k: Maximal chain width
        family: Chain family whose footprints are used
        seed: When given, owners at equal distance are processed in a
            seeded random order instead of the canonical one
    """
    groups = enumerate_chain_groups(n, d, k, family)
    if seed is not None:
        groups = _shuffled_within_distance(groups, seed)

    covering: Dict[GroupKey, List[GroupKey]] = defaultdict(list)
    entries: Dict[GroupKey, Fraction] = {}
    for g in groups:
        owner = g.key
        covered = sum((entries[h] for h in covering[owner]), Fraction(0))
        entries[owner] = Fraction(key_size(n, d, owner)) - covered
        for t in footprint_keys(g):
            covering[t].append(owner)

    table = WeightTable(n, d, k, entries, family=family, method="generic")
    logger.debug(f"Generic assignment done for n={n}, d={d}, k={k}, family={family}")
    return table


def layer_U(n: int, k: int, m: int) -> int:
    """
    Alternating layer sums used by the inner d=1 weights

    For m <= n/2 the sum runs over i <= m, otherwise over i >= m, in both
    cases over i congruent to m modulo k+1.
    """
    step = k + 1
    total = 0
    if 2 * m <= n:
        i = m
        while i >= 0:
            total += binom(n, i) - binom(n, i - 1)
            i -= step
    else:
        i = m
        while i <= n:
            total += binom(n, i) - binom(n, i + 1)
            i += step
    return total


def assign_weights_fast_d1(n: int, k: int) -> WeightTable:
    memo: Dict[int, int] = {}

    def weight(m: int) -> int:
        if m < 0 or m > n:
            return 0
        if 2 * m > n:
            return weight(n - m)
        if m not in memo:
            if 2 * m <= n - k:
                memo[m] = comb(n, m) - binom(n, m - 1) + weight(m - k - 1)
            else:
                memo[m] = layer_U(n, k, m) - layer_U(n, k, m + k)
        return memo[m]

    groups = enumerate_chain_groups(n, 1, k)
    entries = {g.key: Fraction(weight(g.owner)) for g in groups}
    table = WeightTable(n, 1, k, entries, method="fast")
    table._groups = groups
    return table


def assign_weights_fast_d2(n: int, k: int) -> WeightTable:
    """
    Closed recursions for d=2

    Lower types use
        W(a,c) = T(a,c) - T(a+1,c-1) - W(a+1,c) + W(a+1+k,c-1-k) + W(a+1+k,c-k),
    inner ones additionally subtract the cross-middle groups W(a-k,c+k)
    and, when a-c < k-1, W(a-k+1,c+k). Upper owners use the mirrored
    recursion.
    """
    memo: Dict[tuple, int] = {}

    def size(a: int, c: int) -> int:
        return multinomial(n, a, c)

    def weight(a: int, c: int) -> int:
        if a < 0 or c < 0 or a + c > n:
            return 0
        if a < c and c - a <= k:
            return weight(c, a)
        if (a, c) in memo:
            return memo[(a, c)]
        if a >= c:
            value = size(a, c) - size(a + 1, c - 1) - weight(a + 1, c)
            value += weight(a + 1 + k, c - 1 - k) + weight(a + 1 + k, c - k)
            if a - c < k:
                value -= weight(a - k, c + k)
                if a - c < k - 1:
                    value -= weight(a - k + 1, c + k)
        else:
            value = size(a, c) - size(a - 1, c + 1) - weight(a, c + 1)
            value += weight(a - 1 - k, c + 1 + k) + weight(a - k, c + 1 + k)
        memo[(a, c)] = value
        return value

    groups = enumerate_chain_groups(n, 2, k)
    entries = {g.key: Fraction(weight(*g.key)) for g in groups}
    table = WeightTable(n, 2, k, entries, method="fast")
    table._groups = groups
    return table


def assign_weights_fast(n: int, d: int, k: int) -> WeightTable:
    if d == 1:
        return assign_weights_fast_d1(n, k)
    return assign_weights_fast_d2(n, k)


def _deviation_report(n, d, k, mode, induced: Dict, label) -> InducedReport:
    deviations = []
    worst = Fraction(0)
    for key, value in induced.items():
        if value != 1:
            deviations.append(InducedDeviation(key=label(key), induced=format_rational(value)))
            worst = max(worst, abs(value - 1))
    return InducedReport(
        n=n, d=d, k=k, mode=mode, checked=len(induced),
        deviations=deviations, max_deviation=format_rational(worst),
    )


def verify_induced(
    table: WeightTable,
    mode: str = "type",
    max_points: Optional[int] = None,
) -> InducedReport:
    """
    Check that every type (or every point) carries induced weight exactly 1

    Args:
        table: Weight table to check
        mode: "type" compares group totals with type sizes; "point"
            enumerates chains and sums per-chain weights at each point
        max_points: Point budget override for point mode

    Raises:
        BudgetExceededError: if point mode is over budget
    """
    n, d, k = table.n, table.d, table.k
    if mode == "type":
        totals: Dict[GroupKey, Fraction] = defaultdict(Fraction)
        for g in table.groups:
            for t in footprint_keys(g):
                totals[t] += table.entries[g.key]
        if d == 1:
            keys = list(range(n + 1))
        else:
            keys = [(a, c) for a in range(n, -1, -1) for c in range(n - a + 1)]
        induced = {}
        for key in keys:
            induced[key] = totals.get(key, Fraction(0)) / key_size(n, d, key)
        return _deviation_report(n, d, k, "type", induced, table.owner_label)

    if mode != "point":
        raise OutOfRangeError(f"unknown induced-weight mode {mode!r}")
    if table.family != "basic":
        raise OutOfRangeError("point mode requires the basic chain family")

    # Raises on budget before anything is realized
    enumerate_point_chains(n, d, k, max_points=max_points)
    acc: Dict[tuple, Fraction] = {x: Fraction(0) for x in product(range(d + 1), repeat=n)}
    for g in table.groups:
        hits: Counter = Counter()
        for chain in chains_of_group(g):
            hits.update(chain.points())
        share = table.per_chain_weight(g)
        for point, times in hits.items():
            acc[point] += share * times
    logger.info(f"Point-level induced weights computed for {len(acc)} points (n={n}, d={d}, k={k})")
    return _deviation_report(n, d, k, "point", acc, list)


def positivity_report(table: WeightTable) -> List[PositivityEntry]:
    """Owners whose group weight is not strictly positive"""
    return [
        PositivityEntry(owner=table.owner_label(g.key), W=format_rational(table.entries[g.key]))
        for g in table.groups
        if table.entries[g.key] <= 0
    ]


def expected_non_positive(n: int, d: int) -> List[PositivityEntry]:
    """The single permitted zero: the all-ones singleton for d=2"""
    if d == 2 and n >= 1:
        return [PositivityEntry(owner=[0, n, 0], W="0")]
    return []


def sperner_chain_count(n: int, i: int) -> int:
    """Number of symmetric saturated chains from layer i to layer n-i"""
    if i < 0 or 2 * i > n:
        raise OutOfRangeError(f"layer {i} does not start a symmetric chain for n={n}")
    return comb(n, i) * falling(n - i, n - 2 * i)


def sperner_table(n: int) -> WeightTable:
    """Weighted symmetric chain decomposition of the subsets of [n]"""
    if n < 1:
        raise OutOfRangeError(f"n must be positive, got {n}")
    table = assign_weights_fast_d1(n, n)
    table.method = "sperner"
    return table
