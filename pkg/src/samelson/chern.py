"""Chern character coefficients on complex projective space.

On CP^N the reduced line bundle class x = L - 1 has ch(x) = e^t - 1, so
ch_j(x^k) is the coefficient of t^j in (e^t - 1)^k.  That number is computed
three independent ways here:

* ``chern_via_series``: expand (e^t - 1)^k in Q[t]/(t^(j+1)) and read off t^j.
* ``chern_via_compositions``: sum prod 1/i_l! over ordered compositions
  (i_1, ..., i_k) of j, i.e. the termwise expansion of (ch x)^k.
* ``chern_via_stirling``: the closed identity k! S(j, k) / j!.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .rational_core import factorial, stirling2
from .trunc_series import TruncSeries, exp_minus_one

COMPOSITION_LIMIT = 30


@dataclass(frozen=True)
class ChernCoefficient:
    j: int
    k: int
    value: Fraction


def _check_jk(j: int, k: int) -> None:
    if j < 1 or k < 1:
        raise ValueError(f"need j >= 1 and k >= 1, got j={j}, k={k}")


@lru_cache(maxsize=None)
def _series_power(cap: int, k: int) -> TruncSeries:
    # (e^t - 1)^k at fixed cap, built from the (k-1)-th power
    if k == 0:
        return TruncSeries.one(cap)
    return _series_power(cap, k - 1) * exp_minus_one(cap)


def chern_via_series(j: int, k: int) -> Fraction:
    _check_jk(j, k)
    return _series_power(j, k).coefficient(j)


def partitions(total: int, parts: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` into exactly ``parts`` positive parts, nonincreasing."""
    if largest is None:
        largest = total
    if parts == 0:
        if total == 0:
            yield ()
        return
    # the remaining parts - 1 entries each need at least 1
    hi = min(largest, total - (parts - 1))
    lo = -(-total // parts)  # ceil: the first part is the largest
    for first in range(hi, lo - 1, -1):
        for rest in partitions(total - first, parts - 1, first):
            yield (first,) + rest


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered compositions by direct enumeration; C(total-1, parts-1) of them."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def chern_via_compositions(j: int, k: int) -> Fraction:
    """Sum of prod_l 1/i_l! over ordered compositions of j into k parts.

    Compositions are grouped by their sorted form: a partition with part
    multiplicities m_1, m_2, ... stands for k!/(m_1! m_2! ...) orderings, all
    with the same product.  Partitions of 30 number in the thousands, where
    ordered compositions number about 5e8.
    """
    _check_jk(j, k)
    if j > COMPOSITION_LIMIT:
        raise ValueError(f"oracle size limit: j={j} exceeds {COMPOSITION_LIMIT}")
    total = Fraction(0)
    k_fact = factorial(k)
    for lam in partitions(j, k):
        orderings = k_fact
        for mult in Counter(lam).values():
            orderings //= factorial(mult)
        denom = 1
        for part in lam:
            denom *= factorial(part)
        total += Fraction(orderings, denom)
    return total


def chern_by_enumeration(j: int, k: int) -> Fraction:
    """Literal ordered-composition sum; only for small j."""
    _check_jk(j, k)
    total = Fraction(0)
    for combo in compositions(j, k):
        denom = 1
        for part in combo:
            denom *= factorial(part)
        total += Fraction(1, denom)
    return total


def chern_via_stirling(j: int, k: int) -> Fraction:
    _check_jk(j, k)
    return Fraction(factorial(k) * stirling2(j, k), factorial(j))


def chern_coefficient(j: int, k: int) -> ChernCoefficient:
    return ChernCoefficient(j, k, chern_via_series(j, k))


def paper_A_formula(m: int, n: int) -> Fraction:
    """Half-range sum  sum_{k=1}^{n-m} 1/(k! (2n-2m+1-k)!).

    The total degree 2n-2m+1 is odd, so this lists each unordered pair
    {k, 2n-2m+1-k} once; twice this value is ch_{2n-2m+1}(x^2).
    """
    if not 1 <= m < n:
        raise ValueError(f"need 1 <= m < n, got m={m}, n={n}")
    top = 2 * n - 2 * m + 1
    return sum(
        (Fraction(1, factorial(k) * factorial(top - k)) for k in range(1, n - m + 1)),
        Fraction(0),
    )
