"""The truncated polynomial ring Q[t]/(t^(D+1))."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .rational_core import factorial


@dataclass(frozen=True)
class TruncSeries:
    """Element of Q[t]/(t^(cap+1)), stored as its ``cap + 1`` coefficients.

    Arithmetic between series of different caps raises ValueError rather than
    silently re-truncating.
    """

    cap: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.cap < 0:
            raise ValueError(f"cap must be nonnegative, got {self.cap}")
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != self.cap + 1:
            raise ValueError(
                f"expected {self.cap + 1} coefficients for cap {self.cap}, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable) -> "TruncSeries":
        coeffs = tuple(coeffs)
        return cls(len(coeffs) - 1, coeffs)

    @classmethod
    def zero(cls, cap: int) -> "TruncSeries":
        return cls(cap, (Fraction(0),) * (cap + 1))

    @classmethod
    def one(cls, cap: int) -> "TruncSeries":
        return cls(cap, (Fraction(1),) + (Fraction(0),) * cap)

    @classmethod
    def t(cls, cap: int) -> "TruncSeries":
        coeffs = [Fraction(0)] * (cap + 1)
        if cap >= 1:
            coeffs[1] = Fraction(1)
        return cls(cap, coeffs)

    def _check_cap(self, other: "TruncSeries") -> None:
        if not isinstance(other, TruncSeries):
            raise TypeError(f"expected TruncSeries, got {type(other).__name__}")
        if other.cap != self.cap:
            raise ValueError(f"cap mismatch: {self.cap} != {other.cap}")

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_cap(other)
        return TruncSeries(self.cap, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(self.cap, [-a for a in self.coeffs])

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return self + (-other)

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_cap(other)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (self.cap + 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j in range(self.cap + 1 - i):
                if b[j]:
                    out[i + j] += ai * b[j]
        return TruncSeries(self.cap, out)

    def __pow__(self, k: int) -> "TruncSeries":
        if k < 0:
            raise ValueError(f"negative exponent {k}")
        result = TruncSeries.one(self.cap)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def coefficient(self, j: int) -> Fraction:
        if not 0 <= j <= self.cap:
            raise ValueError(f"degree out of range: {j} not in [0, {self.cap}]")
        return self.coeffs[j]

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"


def zero(cap: int) -> TruncSeries:
    return TruncSeries.zero(cap)


def one(cap: int) -> TruncSeries:
    return TruncSeries.one(cap)


def add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return a + b


def mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return a * b


def pow(a: TruncSeries, k: int) -> TruncSeries:  # noqa: A001
    return a**k


def coefficient(a: TruncSeries, j: int) -> Fraction:
    return a.coefficient(j)


def exp_minus_one(cap: int) -> TruncSeries:
    """e^t - 1 truncated at degree ``cap``; the Chern character of x = L - 1."""
    if cap < 0:
        raise ValueError(f"cap must be nonnegative, got {cap}")
    return TruncSeries(cap, [Fraction(0)] + [Fraction(1, factorial(i)) for i in range(1, cap + 1)])
