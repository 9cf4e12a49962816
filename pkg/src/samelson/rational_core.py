"""Exact integer and rational helpers.

Python ints are arbitrary precision and ``fractions.Fraction`` normalizes at
construction (``gcd(|num|, den) == 1``, ``den >= 1``), so both serve directly
as the Integer and Rational types of this package.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

Rational = Fraction

__all__ = [
    "Rational",
    "factorial",
    "gcd_all",
    "stirling2",
    "format_fraction",
]


def factorial(k: int) -> int:
    if k < 0:
        raise ValueError(f"factorial of negative number: {k}")
    return math.factorial(k)


def gcd_all(values: Iterable[int]) -> int:
    """Positive generator ``d`` of the subgroup of Z spanned by ``values``.

    Raises ValueError on an empty or all-zero input, since ``{0}`` has no
    positive generator.
    """
    values = list(values)
    if not values:
        raise ValueError("degenerate subgroup: no generators")
    d = math.gcd(*values)
    if d == 0:
        raise ValueError("degenerate subgroup: all generators are zero")
    return d


@lru_cache(maxsize=None)
def stirling2(j: int, k: int) -> int:
    """Stirling number of the second kind S(j, k)."""
    if j < 0 or k < 0:
        raise ValueError(f"stirling2 needs nonnegative arguments, got ({j}, {k})")
    if j == 0 and k == 0:
        return 1
    if j == 0 or k == 0 or k > j:
        return 0
    return k * stirling2(j - 1, k) + stirling2(j - 1, k - 1)


def format_fraction(q: Fraction) -> str:
    """Render as ``p/q``; zero renders as ``0``."""
    q = Fraction(q)
    if q == 0:
        return "0"
    return f"{q.numerator}/{q.denominator}"
