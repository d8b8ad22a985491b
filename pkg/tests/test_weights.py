from fractions import Fraction
from math import comb

import pytest

from services.errors import BudgetExceededError, OutOfRangeError
from services.weights import (
    assign_weights_fast,
    assign_weights_generic,
    layer_U,
    positivity_report,
    sperner_chain_count,
    sperner_table,
    verify_induced,
)
from workflows.induced import find_negative_control, verify_instance, verify_instances, verify_sperner


class TestHandTables:
    def test_d1_n4_k2(self):
        table = assign_weights_generic(4, 1, 2)
        assert [table.W(m) for m in range(5)] == [1, 3, 1, 3, 1]

    def test_d2_n3_k2(self):
        table = assign_weights_generic(3, 2, 2)
        expected = {(3, 0): 1, (0, 3): 1, (2, 0): 2, (1, 0): 1, (2, 1): 1, (0, 0): 0, (1, 1): 1}
        assert table.entries == {key: Fraction(value) for key, value in expected.items()}
        # Symmetric groups answer to their mirror name too
        assert table.W(1, 2) == 1
        assert table.W(4, 0) == 0

    def test_d2_n4_k2(self):
        table = assign_weights_generic(4, 2, 2)
        expected = {(4, 0): 1, (3, 0): 3, (3, 1): 3, (2, 0): 3, (2, 1): 2, (2, 2): 1, (1, 0): 1, (1, 1): 1, (0, 0): 0}
        for key, value in expected.items():
            assert table.W(*key) == value, key

    def test_d2_n1_k1(self):
        table = assign_weights_generic(1, 2, 1)
        assert table.W(1, 0) == 1
        assert table.W(0, 0) == 0

    def test_per_chain_weight(self):
        table = assign_weights_generic(4, 1, 2)
        g = next(g for g in table.groups if g.key == 1)
        assert table.per_chain_weight(g) == Fraction(3, 24)
        document = table.to_document()
        assert document.entries[0].per_chain == "1/12"


@pytest.mark.parametrize("n", range(1, 9))
def test_fast_path_matches_generic_d2(n):
    for k in range(1, n + 1):
        assert assign_weights_fast(n, 2, k) == assign_weights_generic(n, 2, k), (n, k)


@pytest.mark.parametrize("n", range(1, 13))
def test_fast_path_matches_generic_d1(n):
    for k in range(1, n + 1):
        assert assign_weights_fast(n, 1, k) == assign_weights_generic(n, 1, k), (n, k)


def test_layer_U():
    # Class of 1 modulo 3 below the middle of n=6
    assert layer_U(6, 2, 1) == 6 - 1
    assert layer_U(6, 2, 3) == (20 - 15) + (1 - 0)


class TestInduced:
    def test_type_level(self):
        report = verify_induced(assign_weights_generic(6, 2, 3))
        assert report.ok
        assert report.checked == 28

    def test_point_level(self):
        report = verify_induced(assign_weights_generic(3, 2, 2), mode="point")
        assert report.ok
        assert report.checked == 27

    def test_perturbation_is_detected(self):
        table = assign_weights_generic(4, 2, 2).perturbed((2, 0), 1)
        report = verify_induced(table)
        assert not report.ok
        assert [2, 2, 0] in [deviation.key for deviation in report.deviations]

    def test_point_budget(self):
        with pytest.raises(BudgetExceededError):
            verify_induced(assign_weights_generic(8, 2, 2), mode="point")

    def test_unknown_mode(self):
        with pytest.raises(OutOfRangeError):
            verify_induced(assign_weights_generic(3, 2, 2), mode="layer")


def test_order_invariance():
    for seed in (1, 7, 42):
        assert assign_weights_generic(7, 2, 2, seed=seed) == assign_weights_generic(7, 2, 2)


def test_positivity_only_all_ones_is_zero():
    table = assign_weights_generic(5, 2, 2)
    assert [entry.owner for entry in positivity_report(table)] == [[0, 5, 0]]


def test_k1_weights_are_non_negative():
    table = assign_weights_generic(5, 2, 1)
    assert all(value >= 0 for value in table.entries.values())


class TestVerifyInstance:
    def test_passes_with_point_mode(self):
        result = verify_instance(4, 2, 2, point_mode=True, seed=3)
        assert result.status == "pass"
        assert result.point_induced is not None and result.point_induced.ok
        assert result.fast_path_agrees
        assert result.order_invariant
        assert result.positivity_rule == "strict"

    def test_k1_uses_non_negative_rule(self):
        result = verify_instance(3, 2, 1)
        assert result.status == "pass"
        assert result.positivity_rule == "non_negative"

    def test_skips_points_over_budget(self):
        result = verify_instance(9, 2, 2)
        assert result.status == "pass"
        assert result.point_induced is None

    def test_forced_point_mode_over_budget(self):
        with pytest.raises(BudgetExceededError):
            verify_instance(9, 2, 2, point_mode=True)

    def test_invalid_k(self):
        with pytest.raises(OutOfRangeError):
            verify_instance(3, 2, 0)


def test_verify_instances_keeps_order():
    results = verify_instances(1, [(4, 1), (4, 2), (5, 3)])
    assert [(r.n, r.k) for r in results] == [(4, 1), (4, 2), (5, 3)]
    assert all(r.status == "pass" for r in results)


class TestSperner:
    def test_chain_counts(self):
        assert sperner_chain_count(4, 0) == 24
        assert sperner_chain_count(4, 1) == 24
        assert sperner_chain_count(4, 2) == 6
        with pytest.raises(OutOfRangeError):
            sperner_chain_count(4, 3)

    def test_table(self):
        table = sperner_table(4)
        assert [table.W(i) for i in range(3)] == [1, 3, 2]

    @pytest.mark.parametrize("n", range(1, 16))
    def test_report(self, n):
        report = verify_sperner(n)
        assert report.status == "pass"
        assert report.all_positive
        assert report.rows[0].length == n + 1
        assert report.bound == comb(n, n // 2)
        assert report.total_weight == str(comb(n, n // 2))
        assert report.bound_holds

    def test_report_fails_when_total_misses_middle_layer(self, monkeypatch):
        table = sperner_table(6)
        shifted = table.perturbed(table.groups[0].key, 1)
        monkeypatch.setattr("workflows.induced.sperner_table", lambda n: shifted)
        report = verify_sperner(6)
        assert not report.bound_holds
        assert report.total_weight == "21"
        assert report.status == "fail"


def test_negative_control_finds_anti_basic_witness():
    witness = find_negative_control(4)
    assert witness is not None
    assert (witness.n, witness.k) == (2, 2)
    assert witness.owner == [0, 2, 0]
    assert witness.W == "-1"
    assert witness.searched == 3


def test_anti_basic_n3_k2():
    table = assign_weights_generic(3, 2, 2, family="anti_basic")
    assert table.W(0, 0) == -1


@pytest.mark.slow
def test_full_d2_range():
    instances = [(n, k) for n in range(1, 13) for k in range(1, n + 1)]
    assert all(r.status == "pass" for r in verify_instances(2, instances))


@pytest.mark.slow
def test_full_d1_range():
    instances = [(n, k) for n in range(1, 21) for k in range(1, n + 1)]
    assert all(r.status == "pass" for r in verify_instances(1, instances))
