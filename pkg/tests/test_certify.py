import pytest

from services.errors import UnsupportedVariantError
from workflows.certify import certify_theorem, run_conjecture


@pytest.mark.parametrize("k", [2, 3])
def test_d2_n3_unique(k):
    verdict = certify_theorem(3, 2, k)
    assert verdict.status == "pass"
    assert verdict.mis == verdict.candidate == 7
    assert verdict.unique is True
    assert verdict.maximum_set_count == 1


def test_d2_n3_k1_is_not_unique():
    verdict = certify_theorem(3, 2, 1)
    assert verdict.status == "pass"
    assert verdict.mis == 9
    assert verdict.unique is None
    assert verdict.maximum_set_count > 1
    assert any("k=1" in note for note in verdict.notes)


def test_d1_even():
    verdict = certify_theorem(4, 1, 2)
    assert verdict.status == "pass"
    assert verdict.mis == 6
    assert verdict.unique is True


def test_d1_odd_has_two_maxima():
    verdict = certify_theorem(3, 1, 2)
    assert verdict.status == "pass"
    assert verdict.predicted_maxima == 2
    assert verdict.maximum_set_count == 2
    assert verdict.unique is False


def test_ceil_variant():
    verdict = certify_theorem(3, 1, 2, variant="B2")
    assert verdict.status == "pass"
    assert verdict.candidate == 3


def test_over_budget_is_incomplete():
    verdict = certify_theorem(5, 2, 2)
    assert verdict.status == "incomplete"
    assert verdict.mis is None
    assert verdict.candidate == 53
    assert not verdict.certified


def test_graph_too_large_to_enumerate():
    verdict = certify_theorem(4, 2, 2)
    assert verdict.status == "pass"
    assert verdict.unique is None
    assert verdict.maximum_set_count is None


def test_theorem_rejects_d3_and_conjecture_variants():
    with pytest.raises(UnsupportedVariantError):
        certify_theorem(2, 3, 1)
    with pytest.raises(UnsupportedVariantError):
        certify_theorem(2, 2, 1, variant="conjecture")


def test_conjecture_is_labelled_unproven():
    verdict = run_conjecture(2, 3, 1)
    assert verdict.unproven
    assert verdict.status == "pass"
    assert verdict.mis == 4
    assert any("UNPROVEN" in note for note in verdict.notes)


def test_conjecture_for_proven_d_is_not_flagged():
    verdict = run_conjecture(2, 2, 2)
    assert not verdict.unproven
    assert verdict.status == "pass"


@pytest.mark.slow
@pytest.mark.parametrize("n,d,k", [(n, 1, k) for n in range(1, 6) for k in range(1, n + 1)])
def test_d1_range(n, d, k):
    assert certify_theorem(n, d, k).status == "pass"


@pytest.mark.parametrize("n,count", [(2, 1), (3, 2), (4, 1)])
def test_sperner_structure_with_k_equal_n(n, count):
    verdict = certify_theorem(n, 1, n)
    assert verdict.status == "pass"
    assert verdict.maximum_set_count == count


@pytest.mark.slow
@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 5) for k in range(1, n + 1)])
def test_d2_range(n, k):
    verdict = certify_theorem(n, 2, k)
    assert verdict.status == "pass"
    assert verdict.mis == verdict.candidate
