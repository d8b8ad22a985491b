"""
Instance verification pipeline for the weight engine
"""
from math import comb
from typing import Iterable, List, Optional, Tuple
import logging

from config import get_settings
from schemas.weights import (
    InstanceVerification,
    NegativeControlWitness,
    SpernerReport,
    SpernerRow,
    format_rational,
)
from services.chains import group_count
from services.errors import BudgetExceededError, OutOfRangeError
from services.weights import (
    assign_weights_fast,
    assign_weights_generic,
    expected_non_positive,
    positivity_report,
    sperner_table,
    verify_induced,
)
from tasks.pool import fan_out

logger = logging.getLogger(__name__)


def verify_instance(
    n: int,
    d: int,
    k: int,
    point_mode: Optional[bool] = None,
    seed: Optional[int] = None,
    max_points: Optional[int] = None,
) -> InstanceVerification:
    """
    Verify one (n, d, k) instance end to end

    Args:
        n: Dimension
        d: 1 or 2
        k: Maximal chain width
        point_mode: True forces the point-level check (budget permitting),
            False skips it, None runs it whenever (d+1)^n fits the budget
        seed: When given, also check that a seeded reordering of
            same-distance owners yields the same table
        max_points: Point budget override

    Returns:
        InstanceVerification: pass only when every executed check passes
    """
    if k < 1 or n < 0:
        raise OutOfRangeError(f"invalid parameters n={n}, k={k}")
    table = assign_weights_generic(n, d, k)
    induced = verify_induced(table, mode="type")
    notes: List[str] = []

    point_induced = None
    limit = max_points if max_points is not None else get_settings().point_budget
    run_points = point_mode if point_mode is not None else (d + 1) ** n <= limit
    if run_points:
        try:
            point_induced = verify_induced(table, mode="point", max_points=limit)
        except BudgetExceededError as e:
            if point_mode:
                raise
            notes.append(f"point-level check skipped: {e}")

    non_positive = positivity_report(table)
    if k >= 2:
        rule = "strict"
        expected = expected_non_positive(n, d)
        positivity_ok = [e.owner for e in non_positive] == [e.owner for e in expected] and all(
            e.W == "0" for e in non_positive
        )
    else:
        rule = "non_negative"
        expected = []
        positivity_ok = all(not e.W.startswith("-") for e in non_positive)
        if non_positive:
            notes.append(f"k=1: {len(non_positive)} zero weight(s), permitted")

    fast_agrees = assign_weights_fast(n, d, k) == table
    order_invariant = None
    if seed is not None:
        order_invariant = assign_weights_generic(n, d, k, seed=seed) == table

    ok = (
        induced.ok
        and (point_induced is None or point_induced.ok)
        and positivity_ok
        and fast_agrees
        and order_invariant is not False
    )
    if not ok:
        logger.warning(f"Verification failed for n={n}, d={d}, k={k}")
    return InstanceVerification(
        n=n,
        d=d,
        k=k,
        status="pass" if ok else "fail",
        induced=induced,
        point_induced=point_induced,
        non_positive=non_positive,
        expected_non_positive=expected,
        positivity_rule=rule,
        fast_path_agrees=fast_agrees,
        order_invariant=order_invariant,
        notes=notes,
    )


def _verify_args(args: Tuple[int, int, int, Optional[bool], Optional[int]]) -> InstanceVerification:
    return verify_instance(*args)


def verify_instances(
    d: int,
    instances: Iterable[Tuple[int, int]],
    point_mode: Optional[bool] = None,
    seed: Optional[int] = None,
    jobs: Optional[int] = None,
) -> List[InstanceVerification]:
    work = [(n, d, k, point_mode, seed) for n, k in instances if 1 <= k]
    return fan_out(_verify_args, work, jobs)


def verify_sperner(n: int) -> SpernerReport:
    """Check the weighted symmetric chain decomposition of the subsets of [n]"""
    table = sperner_table(n)
    induced = verify_induced(table, mode="type")
    rows = []
    for g in table.groups:
        i = g.owner
        weight = table.entries[g.key]
        count = group_count(g)
        rows.append(
            SpernerRow(
                length=n + 1 - 2 * i,
                chains=count,
                W=format_rational(weight),
                per_chain=format_rational(weight / count),
            )
        )
    all_positive = all(w > 0 for w in table.entries.values())
    closed_form = all(
        table.entries[g.key] == comb(n, g.owner) - (comb(n, g.owner - 1) if g.owner >= 1 else 0)
        for g in table.groups
    )
    # Total chain weight must reach the width of the middle layer
    total = table.total_weight()
    bound = comb(n, n // 2)
    bound_holds = total == bound
    if not bound_holds:
        logger.warning(f"Sperner n={n}: total weight {total} differs from C({n},{n // 2}) = {bound}")
    ok = induced.ok and closed_form and all_positive and bound_holds
    return SpernerReport(
        n=n,
        status="pass" if ok else "fail",
        rows=sorted(rows, key=lambda r: -r.length),
        induced=induced,
        all_positive=all_positive,
        total_weight=format_rational(total),
        bound=bound,
        bound_holds=bound_holds,
    )


def find_negative_control(n_max: int = 10, family: str = "anti_basic") -> Optional[NegativeControlWitness]:
    """
    Search small instances for a negative weight under another chain family

    Returns:
        The first (n, k, owner) with W < 0, scanning n then k upwards, or None
    """
    searched = 0
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            searched += 1
            table = assign_weights_generic(n, 2, k, family=family)
            for g in table.groups:
                weight = table.entries[g.key]
                if weight < 0:
                    logger.info(f"Negative weight {weight} at owner {g.owner.as_list()} for n={n}, k={k}")
                    return NegativeControlWitness(
                        family=family,
                        n=n,
                        k=k,
                        owner=g.owner.as_list(),
                        W=format_rational(weight),
                        searched=searched,
                    )
    logger.info(f"No negative weight for family {family} up to n={n_max}")
    return None
