"""Bott periodicity lookups: KSp^{-2} of spheres and complexification factors."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Group(str, Enum):
    Z = "Z"
    Z2 = "Z/2"
    ZERO = "0"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SphereKSpGroup:
    q: int
    group: Group


@dataclass(frozen=True)
class ScalingFactor:
    j: int
    sigma: int


def ksp_minus2_of_sphere(q: int) -> SphereKSpGroup:
    """Reduced KSp^{-2}(S^q).

    S^{4i+2} -> Z, S^{4i+1} -> 0, S^{4r} -> Z/2 for r even else 0,
    S^{4r-1} -> 0 for r even else Z/2.
    """
    if q < 1:
        raise ValueError(f"sphere dimension must be >= 1, got {q}")
    rem = q % 4
    if rem == 2:
        group = Group.Z
    elif rem == 1:
        group = Group.ZERO
    elif rem == 0:
        r = q // 4
        group = Group.Z2 if r % 2 == 0 else Group.ZERO
    else:
        r = (q + 1) // 4
        group = Group.ZERO if r % 2 == 0 else Group.Z2
    return SphereKSpGroup(q, group)


def complexification_sigma(j: int) -> ScalingFactor:
    """Factor by which c': KSp^{-2}(S^{4j+2}) -> K^{-2}(S^{4j+2}) scales generators.

    1 for even j, 2 for odd j.
    """
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    return ScalingFactor(j, 1 if j % 2 == 0 else 2)


def displayed_sigma_endpoints(m: int, n: int) -> dict[int, int]:
    """The scaling factors written out explicitly for xi_1, xi_2 and xi_{n-m+1}.

    Keys are generator indices k (xi_k sits over S^{4(m+k-1)+2}).  For even m
    the list opens 1, 2, ...; for odd m it opens 2, 1, ...; the last factor is 1
    for even n and 2 for odd n.  Where two of these rules land on the same
    index they must agree.
    """
    if not 1 <= m < n:
        raise ValueError(f"need 1 <= m < n, got m={m}, n={n}")
    rank = n - m + 1
    opening = (1, 2) if m % 2 == 0 else (2, 1)
    last = 1 if n % 2 == 0 else 2
    out = {1: opening[0], 2: opening[1]}
    if out.get(rank, last) != last:
        raise AssertionError(f"endpoint rules disagree at k={rank} for m={m}, n={n}")
    out[rank] = last
    return out
