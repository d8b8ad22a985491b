"""
Closed forms and alternating sums behind the weight recursions

S and S' are figurate-weighted alternating sums of type sizes along a row
(fixed c) or a column (fixed a) of the staircase; R and R' are the same sums
taken over a weight table. U and F_k are the auxiliary quantities used for
the inner types. Everything is exact integer (or Fraction, for R) arithmetic.
"""
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Literal, Optional

from schemas.closed_forms import LayerModComparison
from services.errors import OutOfRangeError
from services.grid import binom, multinomial
from services.weights import WeightTable

Via = Literal["sum", "closed"]


def figurate(d: int, i: int, via: Via = "closed") -> int:
    """
    Figurate number P_d(i)

    P_0 is the indicator of i > 0 and P_d(i) = P_{d-1}(1) + ... + P_{d-1}(i).
    """
    if d < 0 or i < 0:
        raise OutOfRangeError(f"figurate numbers need d, i >= 0, got d={d}, i={i}")
    if d == 0:
        return 1 if i > 0 else 0
    if via == "closed":
        return comb(i + d - 1, d)
    return sum(figurate(d - 1, j, via="sum") for j in range(1, i + 1))


def binom_signed(u: int, lower: int) -> int:
    """Generalized binomial u(u-1)...(u-l+1)/l!, 0 for a negative lower index"""
    if lower < 0:
        return 0
    numerator = 1
    for j in range(lower):
        numerator *= u - j
    denominator = 1
    for j in range(2, lower + 1):
        denominator *= j
    return numerator // denominator


# Row and column sums over type sizes

def S_eval(n: int, d: int, a: int, c: int, via: Via = "sum") -> int:
    """S(d,a,c) = sum_{i>=a} P_d(i-a+1) T(i,c) (-1)^(i-a)"""
    if a < 0 or c < 0:
        return 0
    if via == "closed":
        return binom(n, c) * binom_signed(n - c - d - 1, n - a - c)
    total = 0
    for i in range(a, n - c + 1):
        term = figurate(d, i - a + 1) * multinomial(n, i, c)
        total += -term if (i - a) % 2 else term
    return total


def S_prime_eval(n: int, d: int, a: int, c: int, via: Via = "sum") -> int:
    """S'(d,a,c) = sum_{i>=c} P_d(i-c+1) T(a,i) (-1)^(i-c)"""
    if a < 0 or c < 0:
        return 0
    if via == "closed":
        return binom(n, a) * binom_signed(n - a - d - 1, n - a - c)
    total = 0
    for i in range(c, n - a + 1):
        term = figurate(d, i - c + 1) * multinomial(n, a, i)
        total += -term if (i - c) % 2 else term
    return total


def D_eval(n: int, d: int, a: int, c: int) -> int:
    return S_eval(n, d, a, c, via="closed") - S_eval(n, d, a + 1, c - 1, via="closed")


def S_diff_positive_check(n: int, d: int, a: int, c: int) -> bool:
    """
    Whether S(d,a,c) > S(d,a+1,c-1)

    Raises:
        OutOfRangeError: if a < c + d or the type leaves the simplex
    """
    if a < c + d or a + c > n or c < 0:
        raise OutOfRangeError(f"S-difference needs a >= c + d inside the simplex, got d={d}, a={a}, c={c}")
    return S_eval(n, d, a, c) > S_eval(n, d, a + 1, c - 1)


# The same sums over a weight table

def R_eval(table: WeightTable, d: int, a: int, c: int) -> Fraction:
    n = table.n
    if a < 0 or c < 0:
        return Fraction(0)
    total = Fraction(0)
    for i in range(a, n - c + 1):
        term = figurate(d, i - a + 1) * table.W(i, c)
        total += -term if (i - a) % 2 else term
    return total


def R_prime_eval(table: WeightTable, d: int, a: int, c: int) -> Fraction:
    n = table.n
    if a < 0 or c < 0:
        return Fraction(0)
    total = Fraction(0)
    for i in range(c, n - a + 1):
        term = figurate(d, i - c + 1) * table.W(a, i)
        total += -term if (i - c) % 2 else term
    return total


@lru_cache(maxsize=None)
def U_eval(n: int, k: int, a: int, c: int) -> int:
    """
    Outer-type recursion extended to every type

    U vanishes outside the simplex, follows the lower key recursion for
    a >= c and is mirrored for a < c.
    """
    if a < 0 or c < 0 or a + c > n:
        return 0
    if a < c:
        return U_eval(n, k, c, a)
    return (
        multinomial(n, a, c)
        - multinomial(n, a + 1, c - 1)
        - U_eval(n, k, a + 1, c)
        + U_eval(n, k, a + 1 + k, c - 1 - k)
        + U_eval(n, k, a + 1 + k, c - k)
    )


def U_D_expansion(n: int, k: int, a: int, c: int) -> int:
    """U(a,c) for a lower type, unfolded into D terms"""
    if a < c:
        raise OutOfRangeError(f"the D expansion is stated for lower types, got a={a}, c={c}")
    step = k + 1
    total = 0
    for i in range(c // k + 1):
        for j in range(i + 1):
            total += comb(i, j) * D_eval(n, i, a + i * step, c - i * step + j)
    return total


def l_C(C: int, c: int, k: int) -> int:
    """How many multiples of k+1 separate c from C"""
    if (C - c) % (k + 1):
        raise OutOfRangeError(f"{c} is not congruent to {C} modulo {k + 1}")
    return (C - c) // (k + 1)


def _residue_start(C: int, B: int, k: int) -> int:
    # Smallest c >= -B congruent to C
    step = k + 1
    return C - step * ((C + B) // step)


def sum_form_G(n: int, k: int, B: int, C: int) -> int:
    """
    Double sum obtained by unfolding U(A,C) - U(A-k,C+k)

    G = sum_c sum_j C(l,j) C(n,c+j) C(n-c-j-l-1, B-j), c over the class of C.
    """
    if B < 0 or C < 0:
        return 0
    total = 0
    for c in range(_residue_start(C, B, k), n + 1, k + 1):
        lc = l_C(C, c, k)
        for j in range(0, B + 1):
            total += binom_signed(lc, j) * binom(n, c + j) * binom_signed(n - c - j - lc - 1, B - j)
    return total


@lru_cache(maxsize=None)
def F_eval(n: int, k: int, B: int, C: int) -> int:
    """
    F_k(n,B,C), zero for negative B or C

    Sums C(n,c+h) C(l+B-h, B-h) C(c+l+h, h) (-1)^(B-h) over h in [0, B] and
    c congruent to C modulo k+1, with l the number of steps between c and C.
    """
    if B < 0 or C < 0:
        return 0
    total = 0
    for c in range(_residue_start(C, B, k), n + 1, k + 1):
        lc = l_C(C, c, k)
        for h in range(0, B + 1):
            term = binom(n, c + h) * binom_signed(lc + B - h, B - h) * binom_signed(c + lc + h, h)
            total += -term if (B - h) % 2 else term
    return total


def layer_mod_sum(n: int, k: int, m: int) -> int:
    """Sum of C(n,i) over i congruent to m modulo k+1"""
    step = k + 1
    return sum(comb(n, i) for i in range(m % step, n + 1, step))


def _middle_distance(n: int, k: int, m: int) -> Optional[int]:
    # |2i - n| for the element of the class closest to n/2; None for an empty class
    distances = [abs(2 * i - n) for i in range(m % (k + 1), n + 1, k + 1)]
    return min(distances) if distances else None


def _ordering(x, y) -> str:
    if x == y:
        return "="
    return "<" if x < y else ">"


def layer_mod_compare(n: int, k: int, m: int, m_prime: int) -> LayerModComparison:
    """
    Compare two mod-(k+1) layer sums against the closest-element criterion

    The class whose closest member lies nearer to the middle has the larger
    sum; equally near classes have equal sums. The criterion is stated for
    k >= 2.
    """
    if n < 0 or k < 1:
        raise OutOfRangeError(f"invalid parameters n={n}, k={k}")
    first, second = layer_mod_sum(n, k, m), layer_mod_sum(n, k, m_prime)
    dist, dist_prime = _middle_distance(n, k, m), _middle_distance(n, k, m_prime)
    far = 2 * n + 1
    # Nearer class means larger sum, so the criterion compares distances reversed
    criterion = _ordering(
        far if dist_prime is None else dist_prime,
        far if dist is None else dist,
    )
    ordering = _ordering(first, second)
    return LayerModComparison(
        n=n,
        k=k,
        m=m,
        m_prime=m_prime,
        sum_m=first,
        sum_m_prime=second,
        ordering=ordering,
        criterion=criterion,
        within_stated_range=k >= 2,
        agrees=ordering == criterion,
    )
