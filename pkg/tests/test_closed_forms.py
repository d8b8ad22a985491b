from math import comb

import pytest

from services.closed_forms import (
    F_eval,
    S_diff_positive_check,
    S_eval,
    S_prime_eval,
    U_D_expansion,
    U_eval,
    binom_signed,
    figurate,
    l_C,
    layer_mod_compare,
    layer_mod_sum,
    sum_form_G,
)
from services.errors import OutOfRangeError, UnknownLemmaError
from workflows.lemmas import LEMMAS, check_lemma, run_lemma_suite


class TestFigurate:
    def test_values(self):
        assert figurate(1, 5) == 5
        assert figurate(0, 0) == 0
        assert figurate(0, 3) == 1
        assert figurate(2, 4) == 10

    @pytest.mark.parametrize("d", range(0, 5))
    def test_sum_matches_closed(self, d):
        for i in range(0, 9):
            assert figurate(d, i, via="sum") == figurate(d, i, via="closed")

    def test_negative(self):
        with pytest.raises(OutOfRangeError):
            figurate(-1, 2)


def test_binom_signed():
    assert binom_signed(-2, 2) == 3
    assert binom_signed(5, 0) == 1
    assert binom_signed(-1, 3) == -1
    assert binom_signed(7, -1) == 0
    assert binom_signed(2, 3) == 0


class TestRowSums:
    def test_hand_value(self):
        # T(2,1) - T(3,1) for n = 4
        assert S_eval(4, 0, 2, 1) == 8
        assert S_eval(4, 0, 2, 1, via="closed") == 8

    @pytest.mark.parametrize("n", [3, 6])
    def test_closed_forms(self, n):
        for d in range(0, 3):
            for a in range(0, n + 1):
                for c in range(0, n - a + 1):
                    assert S_eval(n, d, a, c) == S_eval(n, d, a, c, via="closed")
                    assert S_prime_eval(n, d, a, c) == S_prime_eval(n, d, a, c, via="closed")

    def test_corner(self):
        assert S_eval(5, 0, 5, 0) == 1
        assert S_prime_eval(5, 0, 0, 5) == 1

    def test_difference_range(self):
        assert S_diff_positive_check(6, 1, 3, 1)
        with pytest.raises(OutOfRangeError):
            S_diff_positive_check(6, 2, 2, 1)


class TestU:
    def test_hand_values(self):
        assert [U_eval(4, 2, 2, 1), U_eval(4, 2, 1, 1), U_eval(4, 2, 2, 2)] == [5, 1, 2]
        assert [U_eval(4, 1, 3, 1), U_eval(4, 1, 2, 1), U_eval(4, 1, 1, 1)] == [3, 6, 3]

    def test_mirror(self):
        assert U_eval(6, 2, 1, 3) == U_eval(6, 2, 3, 1)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_column_zero(self, n):
        for k in range(1, n + 1):
            for a in range(0, n + 1):
                expected = comb(n - 1, a - 1) if a >= 1 else 0
                assert U_eval(n, k, a, 0) == expected

    def test_d_expansion(self):
        assert U_D_expansion(4, 2, 2, 1) == 5
        assert U_D_expansion(4, 1, 2, 1) == 6
        with pytest.raises(OutOfRangeError):
            U_D_expansion(4, 1, 1, 2)


class TestF:
    def test_k1(self):
        assert F_eval(4, 1, 0, 2) == 8

    def test_n4_k2(self):
        values = {(1, 0): 6, (1, 1): 8, (2, 1): 4, (2, 0): 3, (3, 0): 1, (4, 0): 0}
        for (B, C), value in values.items():
            assert F_eval(4, 2, B, C) == value, (B, C)

    def test_vanishes_off_range(self):
        assert F_eval(4, 2, -1, 2) == 0
        assert F_eval(4, 2, 2, -1) == 0
        assert sum_form_G(4, 2, -1, 0) == 0

    def test_sum_form_matches(self):
        for B in range(0, 6):
            for C in range(0, 6 - B + 1):
                assert sum_form_G(6, 2, B, C) == F_eval(6, 2, B, C), (B, C)

    def test_residue_steps(self):
        assert l_C(7, 1, 2) == 2
        assert l_C(1, 4, 2) == -1
        with pytest.raises(OutOfRangeError):
            l_C(7, 2, 2)


class TestLayerMod:
    def test_sums(self):
        assert layer_mod_sum(4, 2, 2) == 6
        assert layer_mod_sum(4, 2, 1) == 5
        assert sum(layer_mod_sum(9, 3, m) for m in range(4)) == 2 ** 9

    def test_compare(self):
        result = layer_mod_compare(4, 2, 2, 1)
        assert result.ordering == ">"
        assert result.criterion == ">"
        assert result.agrees
        assert result.within_stated_range
        assert not layer_mod_compare(4, 1, 0, 1).within_stated_range


@pytest.mark.parametrize("n,k", [(5, 1), (6, 2), (7, 3), (4, 4)])
def test_every_lemma(n, k):
    for name in LEMMAS:
        report = check_lemma(name, n, k)
        assert report.status == "pass", (name, report.counterexample)


@pytest.mark.parametrize("name,n,k", [("inner_W_eq_U_diff", 8, 2), ("F_symmetry", 10, 3), ("F_monotone", 10, 3)])
def test_named_instances(name, n, k):
    report = check_lemma(name, n, k)
    assert report.passed
    assert report.instances_checked > 0


def test_comparator_is_skipped_for_k1():
    report = check_lemma("layer_mod_comparator", 6, 1)
    assert report.passed
    assert report.instances_checked == 0
    assert report.note


def test_unknown_lemma():
    with pytest.raises(UnknownLemmaError):
        check_lemma("no_such_lemma", 4, 2)
    with pytest.raises(UnknownLemmaError):
        run_lemma_suite(["F_monotone", "no_such_lemma"], [(4, 2)])


def test_out_of_range():
    with pytest.raises(OutOfRangeError):
        check_lemma("F_monotone", 3, 4)


def test_suite_skips_k_above_n():
    reports = run_lemma_suite(["F_recursion", "step1"], [(3, 2), (3, 4)])
    assert [(r.lemma, r.n, r.k) for r in reports] == [("F_recursion", 3, 2), ("step1", 3, 2)]


@pytest.mark.slow
def test_suite_full_range():
    instances = [(n, k) for n in range(1, 13) for k in range(1, n + 1)]
    reports = run_lemma_suite(list(LEMMAS), instances)
    assert all(r.passed for r in reports)


def test_F_symmetry_covers_B_zero_only():
    report = check_lemma("F_symmetry", 4, 2)
    assert report.passed
    assert report.instances_checked == 5
    assert "B = 0" in report.note
    # The mirror identity does not extend to B > 0
    assert F_eval(4, 2, 1, 1) != F_eval(4, 2, 1, 2)


FULL_RANGES = [
    ("S_closed_form", 30, 1),
    ("S_prime_closed_form", 30, 1),
    ("U_diff_eq_F_diff", 20, 1),
    ("U_diff_sum_form", 20, 1),
    ("F_symmetry", 25, 1),
    ("F_monotone", 25, 1),
    ("F_recursion", 25, 1),
    ("F_B_zero_positive", 25, 1),
    ("F_C_zero_nonnegative", 25, 1),
    ("layer_mod_comparator", 20, 2),
]


@pytest.mark.slow
@pytest.mark.parametrize(
    "name,n",
    [(name, n) for name, n_max, k_min in FULL_RANGES for n in range(max(1, k_min), n_max + 1)],
)
def test_lemma_full_range(name, n):
    k_min = next(k for lemma_name, _, k in FULL_RANGES if lemma_name == name)
    for k in range(k_min, n + 1):
        report = check_lemma(name, n, k)
        assert report.passed, (name, n, k, report.counterexample)
