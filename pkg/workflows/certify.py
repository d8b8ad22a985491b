"""
Certification pipeline: candidate residue class versus the exact oracle
"""
from typing import List, Optional, Set
import logging

from config import get_settings
from schemas.oracle import Verdict
from services.errors import BudgetExceededError, UnsupportedVariantError
from services.grid import (
    CandidateVariant,
    THEOREM_VARIANTS,
    build_candidate_set,
    candidate_size,
    is_unproven,
    validate_set,
)
from services.oracle import build_conflict_graph, enumerate_maximum_sets, max_independent_set

logger = logging.getLogger(__name__)


def _predicted_variants(n: int, d: int, variant: CandidateVariant) -> List[CandidateVariant]:
    """Candidate variants whose sets are predicted maximum"""
    floor_variant, ceil_variant = ("B1", "B2") if variant in THEOREM_VARIANTS else ("conjecture", "conjecture_ceil")
    if (n * d) % 2 == 0:
        return [floor_variant]
    return [floor_variant, ceil_variant]


def _certify(
    n: int,
    d: int,
    k: int,
    variant: CandidateVariant,
    max_vertices: Optional[int],
    use_symmetry: bool,
) -> Verdict:
    unproven = is_unproven(d, variant)
    size = candidate_size(n, d, k, variant)
    notes: List[str] = []
    if unproven:
        notes.append("UNPROVEN: residue-class conjecture for d >= 3")

    try:
        graph = build_conflict_graph(n, d, k, max_vertices=max_vertices)
    except BudgetExceededError as e:
        logger.warning(f"Certification of n={n}, d={d}, k={k} incomplete: {e}")
        return Verdict(
            n=n, d=d, k=k, candidate=size, status="incomplete", variant=variant,
            unproven=unproven, certified=False, notes=notes + [str(e)],
        )

    candidate = build_candidate_set(n, d, k, variant, max_points=len(graph))
    valid = validate_set(candidate, k).ok
    result = max_independent_set(graph, use_symmetry=use_symmetry)
    predicted = _predicted_variants(n, d, variant)
    verdict = Verdict(
        n=n, d=d, k=k, mis=result.size, candidate=size, variant=variant, unproven=unproven,
        candidate_valid=valid, predicted_maxima=len(predicted), certified=result.certified,
        status="pass", notes=notes,
    )
    if not result.certified:
        verdict.status = "incomplete"
        verdict.notes.append("branch and bound stopped at the node limit")
        return verdict
    if not valid or size != result.size:
        verdict.status = "fail"
        return verdict

    if len(graph) > get_settings().ENUMERATION_MAX_VERTICES:
        verdict.notes.append("too many vertices to enumerate maximum sets; uniqueness not checked")
        return verdict

    enumerated = enumerate_maximum_sets(graph, size=result.size)
    verdict.maximum_set_count = len(enumerated.all_solutions)
    if enumerated.truncated:
        verdict.notes.append("maximum-set enumeration truncated")
        return verdict
    if k == 1:
        # Every residue class mod d+1 of the right size is maximum here
        verdict.notes.append("k=1: maximum sets are not unique; uniqueness not asserted")
        return verdict

    expected: Set[frozenset] = {
        build_candidate_set(n, d, k, v, max_points=len(graph)).as_frozenset() for v in predicted
    }
    actual = {s.as_frozenset() for s in enumerated.all_solutions}
    verdict.unique = len(actual) == 1
    if actual != expected:
        verdict.status = "fail"
        verdict.notes.append(f"expected {len(expected)} maximum set(s), found {len(actual)}")
    return verdict


def certify_theorem(
    n: int,
    d: int,
    k: int,
    variant: CandidateVariant = "B",
    max_vertices: Optional[int] = None,
    use_symmetry: bool = False,
) -> Verdict:
    """
    Certify that the residue class is a largest k-Sperner set for d in {1, 2}

    PASS when the candidate is independent, its size equals the exact MIS
    size and, where enumeration is feasible and k >= 2, the maximum sets are
    exactly the predicted residue classes.

    Raises:
        UnsupportedVariantError: for d outside {1, 2} or a conjecture variant
    """
    if d not in (1, 2) or variant not in THEOREM_VARIANTS:
        raise UnsupportedVariantError(f"certify covers d in {{1, 2}} with variants {THEOREM_VARIANTS}")
    logger.info(f"Certifying n={n}, d={d}, k={k}, variant={variant}")
    return _certify(n, d, k, variant, max_vertices, use_symmetry)


def run_conjecture(
    n: int,
    d: int,
    k: int,
    max_vertices: Optional[int] = None,
    use_symmetry: bool = False,
) -> Verdict:
    """Compare the residue-class conjecture with the oracle for any d"""
    logger.info(f"Checking the residue-class conjecture at n={n}, d={d}, k={k}")
    return _certify(n, d, k, "conjecture", max_vertices, use_symmetry)
