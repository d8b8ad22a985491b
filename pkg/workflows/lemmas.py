"""
Exhaustive lemma scans at a single (n, k)

Every checker walks the full quantifier range of its identity for the given
instance and stops at the first counterexample. Checkers are registered by
name; `check_lemma` dispatches and `run_lemma_suite` fans instances out.
"""
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple
import logging

from schemas.closed_forms import PropertyReport
from services.closed_forms import (
    F_eval,
    R_eval,
    R_prime_eval,
    S_diff_positive_check,
    S_eval,
    S_prime_eval,
    U_D_expansion,
    U_eval,
    layer_mod_compare,
    sum_form_G,
)
from services.errors import OutOfRangeError, UnknownLemmaError
from services.grid import binom
from services.weights import WeightTable, assign_weights_generic, layer_U
from tasks.pool import fan_out

logger = logging.getLogger(__name__)

Checker = Callable[[int, int], PropertyReport]
LEMMAS: Dict[str, Checker] = {}


def lemma(name: str):
    """Register a checker under name"""
    def register(fn: Checker) -> Checker:
        LEMMAS[name] = fn
        return fn
    return register


@lru_cache(maxsize=64)
def _table(n: int, d: int, k: int) -> WeightTable:
    return assign_weights_generic(n, d, k)


def _lower_types(n: int) -> Iterable[Tuple[int, int]]:
    for c in range(0, n // 2 + 1):
        for a in range(c, n - c + 1):
            yield a, c


def _types(n: int) -> Iterable[Tuple[int, int]]:
    for a in range(n, -1, -1):
        for c in range(0, n - a + 1):
            yield a, c


def _inner_lower(n: int, k: int) -> Iterable[Tuple[int, int]]:
    return ((a, c) for a, c in _lower_types(n) if a - c < k)


def _plain(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    return value


class _Scan:
    """Counts instances and keeps the first counterexample"""

    def __init__(self, name: str, n: int, k: int):
        self.name, self.n, self.k = name, n, k
        self.checked = 0
        self.counterexample: Optional[Dict[str, Any]] = None

    def expect(self, ok: bool, **witness) -> bool:
        self.checked += 1
        if not ok and self.counterexample is None:
            self.counterexample = {key: _plain(value) for key, value in witness.items()}
            logger.warning(f"{self.name} fails at n={self.n}, k={self.k}: {self.counterexample}")
        return ok

    def report(self, note: Optional[str] = None) -> PropertyReport:
        return PropertyReport(
            lemma=self.name,
            n=self.n,
            k=self.k,
            status="pass" if self.counterexample is None else "fail",
            counterexample=self.counterexample,
            instances_checked=self.checked,
            note=note,
        )


@lemma("S_closed_form")
def _s_closed_form(n: int, k: int) -> PropertyReport:
    scan = _Scan("S_closed_form", n, k)
    for d in range(n + 1):
        for a, c in _types(n):
            by_sum, closed = S_eval(n, d, a, c), S_eval(n, d, a, c, via="closed")
            if not scan.expect(by_sum == closed, d=d, a=a, c=c, sum=by_sum, closed=closed):
                return scan.report()
    return scan.report()


@lemma("S_prime_closed_form")
def _s_prime_closed_form(n: int, k: int) -> PropertyReport:
    scan = _Scan("S_prime_closed_form", n, k)
    for d in range(n + 1):
        for a, c in _types(n):
            by_sum, closed = S_prime_eval(n, d, a, c), S_prime_eval(n, d, a, c, via="closed")
            if not scan.expect(by_sum == closed, d=d, a=a, c=c, sum=by_sum, closed=closed):
                return scan.report()
    return scan.report()


@lemma("S_difference")
def _s_difference(n: int, k: int) -> PropertyReport:
    scan = _Scan("S_difference", n, k)
    for d in range(n + 1):
        for c in range(n + 1):
            for a in range(c + d, n - c + 1):
                if c == 0 and a == d and a < n:
                    continue
                if not scan.expect(S_diff_positive_check(n, d, a, c), d=d, a=a, c=c):
                    return scan.report()
    return scan.report(note="corner c=0, a=d<n skipped: both sides vanish")


@lemma("step1")
def _step1(n: int, k: int) -> PropertyReport:
    scan = _Scan("step1", n, k)
    table = _table(n, 2, k)
    for a, c in _lower_types(n):
        if a - c < k:
            continue
        rhs = (
            S_eval(n, 0, a, c)
            - S_eval(n, 0, a + 1, c - 1)
            + R_eval(table, 0, a + 1 + k, c - 1 - k)
            + R_eval(table, 0, a + 1 + k, c - k)
        )
        if not scan.expect(table.W(a, c) == rhs, a=a, c=c, W=table.W(a, c), rhs=rhs):
            break
    return scan.report()


@lemma("step1_prime")
def _step1_prime(n: int, k: int) -> PropertyReport:
    scan = _Scan("step1_prime", n, k)
    table = _table(n, 2, k)
    for a, c in _types(n):
        if c - a < k + 1:
            continue
        rhs = (
            S_prime_eval(n, 0, a, c)
            - S_prime_eval(n, 0, a - 1, c + 1)
            + R_prime_eval(table, 0, a - 1 - k, c + 1 + k)
            + R_prime_eval(table, 0, a - k, c + 1 + k)
        )
        if not scan.expect(table.W(a, c) == rhs, a=a, c=c, W=table.W(a, c), rhs=rhs):
            break
    return scan.report()


@lemma("step2")
def _step2(n: int, k: int) -> PropertyReport:
    scan = _Scan("step2", n, k)
    table = _table(n, 2, k)
    for d in range(n + 1):
        for a, c in _lower_types(n):
            if a - c < k:
                continue
            lhs = R_eval(table, d, a, c)
            rhs = (
                S_eval(n, d + 1, a, c)
                - S_eval(n, d + 1, a + 1, c - 1)
                + R_eval(table, d + 1, a + 1 + k, c - 1 - k)
                + R_eval(table, d + 1, a + 1 + k, c - k)
            )
            if not scan.expect(lhs == rhs, d=d, a=a, c=c, lhs=lhs, rhs=rhs):
                return scan.report()
    return scan.report()


@lemma("step2_prime")
def _step2_prime(n: int, k: int) -> PropertyReport:
    scan = _Scan("step2_prime", n, k)
    table = _table(n, 2, k)
    for d in range(n + 1):
        for a, c in _types(n):
            if c - a < k + 1:
                continue
            lhs = R_prime_eval(table, d, a, c)
            rhs = (
                S_prime_eval(n, d + 1, a, c)
                - S_prime_eval(n, d + 1, a - 1, c + 1)
                + R_prime_eval(table, d + 1, a - 1 - k, c + 1 + k)
                + R_prime_eval(table, d + 1, a - k, c + 1 + k)
            )
            if not scan.expect(lhs == rhs, d=d, a=a, c=c, lhs=lhs, rhs=rhs):
                return scan.report()
    return scan.report()


@lemma("U_outer_eq_W")
def _u_outer_eq_w(n: int, k: int) -> PropertyReport:
    scan = _Scan("U_outer_eq_W", n, k)
    table = _table(n, 2, k)
    for a, c in _types(n):
        if abs(a - c) < k:
            continue
        u, w = U_eval(n, k, a, c), table.W(a, c)
        if not scan.expect(u == w, a=a, c=c, U=u, W=w):
            break
    return scan.report()


@lemma("U_corner_values")
def _u_corner_values(n: int, k: int) -> PropertyReport:
    scan = _Scan("U_corner_values", n, k)
    for a in range(n + 1):
        u, expected = U_eval(n, k, a, 0), binom(n - 1, a - 1)
        if not scan.expect(u == expected, a=a, c=0, U=u, expected=expected):
            return scan.report()
    scan.expect(U_eval(n, k, n, 0) == 1, a=n, c=0, U=U_eval(n, k, n, 0), expected=1)
    return scan.report()


@lemma("U_D_expansion")
def _u_d_expansion(n: int, k: int) -> PropertyReport:
    scan = _Scan("U_D_expansion", n, k)
    for a, c in _lower_types(n):
        u, unfolded = U_eval(n, k, a, c), U_D_expansion(n, k, a, c)
        if not scan.expect(u == unfolded, a=a, c=c, U=u, expansion=unfolded):
            break
    return scan.report()


@lemma("inner_W_eq_U_diff")
def _inner_w_eq_u_diff(n: int, k: int) -> PropertyReport:
    scan = _Scan("inner_W_eq_U_diff", n, k)
    table = _table(n, 2, k)
    for a, c in _inner_lower(n, k):
        w = table.W(a, c)
        diff = U_eval(n, k, a, c) - U_eval(n, k, a - k, c + k)
        if not scan.expect(w == diff, a=a, c=c, W=w, U_diff=diff):
            break
    return scan.report()


@lemma("inner_W_eq_U_diff_d1")
def _inner_w_eq_u_diff_d1(n: int, k: int) -> PropertyReport:
    scan = _Scan("inner_W_eq_U_diff_d1", n, k)
    table = _table(n, 1, k)
    for m in range(n // 2 + 1):
        if n - 2 * m >= k:
            continue
        w = table.W(m)
        diff = layer_U(n, k, m) - layer_U(n, k, m + k)
        if not scan.expect(w == diff, m=m, W=w, U_diff=diff):
            break
    return scan.report()


@lemma("U_diff_sum_form")
def _u_diff_sum_form(n: int, k: int) -> PropertyReport:
    scan = _Scan("U_diff_sum_form", n, k)
    for a, c in _inner_lower(n, k):
        b = n - a - c
        diff = U_eval(n, k, a, c) - U_eval(n, k, a - k, c + k)
        form = sum_form_G(n, k, b, c) - sum_form_G(n, k, b, c - 1)
        if not scan.expect(diff == form, a=a, b=b, c=c, U_diff=diff, sum_form=form):
            break
    return scan.report()


@lemma("sum_form_eq_F")
def _sum_form_eq_f(n: int, k: int) -> PropertyReport:
    scan = _Scan("sum_form_eq_F", n, k)
    for b in range(n + 1):
        for c in range(n - b + 1):
            g, f = sum_form_G(n, k, b, c), F_eval(n, k, b, c)
            if not scan.expect(g == f, B=b, C=c, sum_form=g, F=f):
                return scan.report()
    return scan.report()


@lemma("U_diff_eq_F_diff")
def _u_diff_eq_f_diff(n: int, k: int) -> PropertyReport:
    scan = _Scan("U_diff_eq_F_diff", n, k)
    for a, c in _inner_lower(n, k):
        b = n - a - c
        diff = U_eval(n, k, a, c) - U_eval(n, k, a - k, c + k)
        f_diff = F_eval(n, k, b, c) - F_eval(n, k, b, c - 1)
        if not scan.expect(diff == f_diff, a=a, b=b, c=c, U_diff=diff, F_diff=f_diff):
            break
    return scan.report()


@lemma("F_symmetry")
def _f_symmetry(n: int, k: int) -> PropertyReport:
    scan = _Scan("F_symmetry", n, k)
    # F(n,B,C) = F(n,B,A) fails once B > 0 (n=4, k=2, B=1 gives 8 against 7)
    for c in range(n + 1):
        f, mirrored = F_eval(n, k, 0, c), F_eval(n, k, 0, n - c)
        if not scan.expect(f == mirrored, B=0, C=c, F=f, F_mirror=mirrored):
            break
    return scan.report(note="covers B = 0 only: F(n,0,C) = F(n,0,n-C)")


@lemma("F_monotone")
def _f_monotone(n: int, k: int) -> PropertyReport:
    scan = _Scan("F_monotone", n, k)
    for a, c in _inner_lower(n, k):
        b = n - a - c
        step = F_eval(n, k, b, c) - F_eval(n, k, b, c - 1)
        if (b, c) == (n, 0):
            ok = step == 0
        elif k >= 2:
            ok = step > 0
        else:
            ok = step >= 0
        if not scan.expect(ok, B=b, C=c, F_step=step):
            break
    note = None if k >= 2 else "k=1: only the weak inequality is asserted"
    return scan.report(note=note)


@lemma("F_recursion")
def _f_recursion(n: int, k: int) -> PropertyReport:
    scan = _Scan("F_recursion", n, k)
    if n < 1:
        return scan.report()
    for b in range(n + 1):
        for c in range(1, n - b + 1):
            lhs = F_eval(n, k, b, c)
            rhs = F_eval(n - 1, k, b, c) + F_eval(n - 1, k, b - 1, c) + F_eval(n - 1, k, b, c - 1)
            if not scan.expect(lhs == rhs, B=b, C=c, F=lhs, recursion=rhs):
                return scan.report()
    return scan.report()


@lemma("F_B_zero_positive")
def _f_b_zero_positive(n: int, k: int) -> PropertyReport:
    scan = _Scan("F_B_zero_positive", n, k)
    for c in range(n + 1):
        f = F_eval(n, k, 0, c)
        if not scan.expect(f > 0, B=0, C=c, F=f):
            break
    return scan.report()


@lemma("F_C_zero_nonnegative")
def _f_c_zero_nonnegative(n: int, k: int) -> PropertyReport:
    scan = _Scan("F_C_zero_nonnegative", n, k)
    for b in range(n + 1):
        f = F_eval(n, k, b, 0)
        if b == n:
            ok = f == 0
        elif k >= 2:
            ok = f > 0
        else:
            ok = f >= 0
        if not scan.expect(ok, B=b, C=0, F=f):
            break
    return scan.report()


@lemma("layer_mod_comparator")
def _layer_mod_comparator(n: int, k: int) -> PropertyReport:
    scan = _Scan("layer_mod_comparator", n, k)
    if k < 2:
        return scan.report(note="the closest-element criterion is stated for k >= 2; nothing checked")
    for m in range(k + 1):
        for m_prime in range(m + 1, k + 1):
            result = layer_mod_compare(n, k, m, m_prime)
            if not scan.expect(result.agrees, **result.model_dump()):
                return scan.report()
    return scan.report()


def check_lemma(name: str, n: int, k: int) -> PropertyReport:
    """
    Run one registered lemma checker

    Raises:
        UnknownLemmaError: if no checker is registered under name
        OutOfRangeError: if k < 1 or n < k
    """
    if name not in LEMMAS:
        raise UnknownLemmaError(f"unknown lemma {name!r}; known: {', '.join(LEMMAS)}")
    if k < 1 or n < k:
        raise OutOfRangeError(f"lemma checks need 1 <= k <= n, got n={n}, k={k}")
    return LEMMAS[name](n, k)


def _check_instance(args: Tuple[str, int, int]) -> PropertyReport:
    return check_lemma(*args)


def run_lemma_suite(
    names: Iterable[str],
    instances: Iterable[Tuple[int, int]],
    jobs: Optional[int] = None,
) -> List[PropertyReport]:
    """
    Check every named lemma at every (n, k) instance

    Instances with k > n are skipped. Unknown names raise before any work.
    """
    names = list(names)
    for name in names:
        if name not in LEMMAS:
            raise UnknownLemmaError(f"unknown lemma {name!r}")
    work = [(name, n, k) for n, k in instances if 1 <= k <= n for name in names]
    logger.info(f"Running {len(work)} lemma checks")
    reports = fan_out(_check_instance, work, jobs)
    failed = sum(1 for r in reports if not r.passed)
    logger.info(f"Lemma suite finished: {len(reports) - failed} passed, {failed} failed")
    return reports
