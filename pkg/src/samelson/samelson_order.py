"""Order of the Samelson product <eps_{m,n}, eps_{m,n}> in Sp(n).

With X = S^{4m-1} ^ Q_{n-m+1}, the group [X, Sp(n)] is the cokernel of a map
psi: KSp^{-2}(X) -> H^{4n+2}(X) = Z.  KSp^{-2}(X) is free on generators
xi_1, ..., xi_{n-m+1} (xi_k over the cell S^{4(m+k-1)+2}), and

    |psi(xi_k)| = sigma(m+k-1) * (2n+1)! * ch_{2n-2m+1}(x^{2k-1})

where sigma is the complexification factor.  The image of psi is d*Z with d
the gcd of these values, so the cokernel is Z/d.  Signs are dropped
throughout: a subgroup of Z does not change when its generators are negated.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .bott_tables import complexification_sigma, displayed_sigma_endpoints
from .chern import chern_via_series
from .rational_core import factorial, gcd_all

SigmaLookup = Callable[[int], int]


class IntegralityError(ArithmeticError):
    """(2n+1)! * ch_{2n+1} failed to land in the integers."""


@dataclass(frozen=True)
class SamelsonParams:
    m: int
    n: int

    def __post_init__(self):
        if not (isinstance(self.m, int) and isinstance(self.n, int)):
            raise TypeError("m and n must be integers")
        if not 1 <= self.m < self.n:
            raise ValueError(f"need 1 <= m < n, got m={self.m}, n={self.n}")

    @property
    def top_degree(self) -> int:
        """2n - 2m + 1, the t-degree carrying H^{4n+2}(X)."""
        return 2 * self.n - 2 * self.m + 1

    @property
    def rank(self) -> int:
        return self.n - self.m + 1


@dataclass(frozen=True)
class PsiGenerator:
    k: int
    chern_coeff: Fraction
    phi_value: int
    sigma: int
    psi_value: int


@dataclass(frozen=True)
class OrderReport:
    params: SamelsonParams
    generators: list[PsiGenerator] = field(repr=False)
    computed_order: int
    closed_form_order: int
    sigma_consistent: bool = True

    @property
    def matches(self) -> bool:
        return self.computed_order == self.closed_form_order

    @property
    def verified(self) -> bool:
        """Order matches and the scaling factors agree with the displayed endpoints."""
        return self.matches and self.sigma_consistent

    @property
    def verdict(self) -> str:
        return "match" if self.matches else "mismatch"

    @property
    def group_description(self) -> str:
        return f"Z/{self.computed_order}"


def default_sigma(j: int) -> int:
    return complexification_sigma(j).sigma


def build_generators(params: SamelsonParams, sigma: SigmaLookup | None = None) -> list[PsiGenerator]:
    """psi-images of the basis xi_1, ..., xi_{n-m+1}.

    xi'_k is the image of zeta (x) x^{2k-1} under the complexified quasi-projective
    inclusion, so its Chern coefficient is ch_{2n-2m+1}(x^{2k-1}).
    """
    sigma = sigma or default_sigma
    top = params.top_degree
    scale = factorial(2 * params.n + 1)
    gens = []
    for k in range(1, params.rank + 1):
        coeff = chern_via_series(top, 2 * k - 1)
        phi = coeff * scale
        if phi.denominator != 1:
            raise IntegralityError(
                f"integrality violation: (2n+1)! * a_{{{top},{2 * k - 1}}} = {phi} "
                f"for m={params.m}, n={params.n}"
            )
        s = sigma(params.m + k - 1)
        gens.append(PsiGenerator(k, coeff, phi.numerator, s, s * phi.numerator))
    return gens


def closed_form(params: SamelsonParams) -> int:
    """(2n+1)!/(2n-2m+1)!, doubled when m is odd."""
    ratio = factorial(2 * params.n + 1) // factorial(params.top_degree)
    return ratio if params.m % 2 == 0 else 2 * ratio


def compute_order(params: SamelsonParams, sigma: SigmaLookup | None = None) -> OrderReport:
    gens = build_generators(params, sigma)
    order = gcd_all(abs(g.psi_value) for g in gens)
    return OrderReport(params, gens, order, closed_form(params), sigma_endpoints_agree(gens, params))


def sigma_endpoints_agree(gens: list[PsiGenerator], params: SamelsonParams) -> bool:
    # a wrong factor on a non-leading generator cannot move the gcd, so the
    # gcd alone would not notice it
    expected = displayed_sigma_endpoints(params.m, params.n)
    return all(gens[k - 1].sigma == s for k, s in expected.items())


def first_generator_dominates(params: SamelsonParams, sigma: SigmaLookup | None = None) -> bool:
    """Whether psi(xi_1) alone generates the image, i.e. divides every other value."""
    gens = build_generators(params, sigma)
    lead = abs(gens[0].psi_value)
    return all(abs(g.psi_value) % lead == 0 for g in gens[1:])


def sweep(max_n: int, sigma: SigmaLookup | None = None) -> list[OrderReport]:
    """Reports for all 1 <= m < n <= max_n, ordered by (n, m)."""
    return [
        compute_order(SamelsonParams(m, n), sigma)
        for n in range(2, max_n + 1)
        for m in range(1, n)
    ]
