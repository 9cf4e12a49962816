import math
from fractions import Fraction as F

import pytest

from samelson.rational_core import factorial, stirling2
from samelson.samelson_order import (
    IntegralityError,
    SamelsonParams,
    build_generators,
    closed_form,
    compute_order,
    first_generator_dominates,
    sweep,
)
import samelson.samelson_order as so


def test_params_validation():
    with pytest.raises(ValueError):
        SamelsonParams(3, 3)
    with pytest.raises(ValueError):
        SamelsonParams(0, 2)
    p = SamelsonParams(2, 5)
    assert p.top_degree == 7 and p.rank == 4


def test_generators_2_3():
    gens = build_generators(SamelsonParams(2, 3))
    assert len(gens) == 2
    g = gens[0]
    assert (g.k, g.chern_coeff, g.phi_value, g.sigma, g.psi_value) == (1, F(1, 6), 840, 1, 840)
    assert factorial(7) // factorial(3) == 840


def test_generators_1_2():
    g1, g2 = build_generators(SamelsonParams(1, 2))
    assert (g1.chern_coeff, g1.phi_value, g1.sigma, g1.psi_value) == (F(1, 6), 20, 2, 40)
    assert (g2.chern_coeff, g2.phi_value, g2.sigma, g2.psi_value) == (1, 120, 1, 120)


@pytest.mark.parametrize("m, n, expected", [(2, 3, 840), (1, 2, 40), (3, 4, 120960)])
def test_closed_form(m, n, expected):
    assert closed_form(SamelsonParams(m, n)) == expected


def test_compute_order_examples():
    r = compute_order(SamelsonParams(2, 3))
    assert r.computed_order == 840 and r.verdict == "match" and r.verified
    assert r.group_description == "Z/840"
    # brute gcd of hand-derived values: 840 and 2 * 7! * a_{3,3}
    assert math.gcd(840, 2 * 5040) == 840
    r = compute_order(SamelsonParams(1, 2))
    assert r.computed_order == 40 and r.verdict == "match"


def test_order_divides_every_generator():
    for r in sweep(8):
        assert r.computed_order >= 1
        assert all(g.psi_value % r.computed_order == 0 for g in r.generators)


def test_generators_against_stirling_oracle():
    for r in sweep(9):
        p = r.params
        for g in r.generators:
            kk = 2 * g.k - 1
            expected = factorial(2 * p.n + 1) * factorial(kk) * stirling2(p.top_degree, kk) // factorial(p.top_degree)
            assert g.phi_value == expected


def test_first_generator_dominates():
    assert first_generator_dominates(SamelsonParams(1, 2))
    assert first_generator_dominates(SamelsonParams(2, 4))
    for n in range(2, 13):
        for m in range(1, n):
            assert first_generator_dominates(SamelsonParams(m, n))


def test_sweep_order():
    pairs = [(r.params.m, r.params.n) for r in sweep(4)]
    assert pairs == [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]


def test_integrality_violation_is_raised(monkeypatch):
    monkeypatch.setattr(so, "chern_via_series", lambda j, k: F(1, factorial(2 * 10)))
    with pytest.raises(IntegralityError, match="integrality violation"):
        build_generators(SamelsonParams(1, 2))


def test_corrupted_leading_sigma_breaks_match():
    def bad(j):
        return 1 if j == 1 else so.default_sigma(j)

    r = compute_order(SamelsonParams(1, 2), sigma=bad)
    assert r.computed_order == 20 and r.verdict == "mismatch"


def test_corrupted_trailing_sigma_caught_by_endpoint_check():
    def bad(j):
        return 2 if j == 2 else so.default_sigma(j)

    r = compute_order(SamelsonParams(1, 2), sigma=bad)
    # gcd(40, 240) is still 40: the order alone cannot see this
    assert r.matches
    assert not r.sigma_consistent and not r.verified
