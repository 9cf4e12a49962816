"""Exact verification of the order of the Samelson product <eps_{m,n}, eps_{m,n}> in Sp(n)."""
from .bott_tables import complexification_sigma, ksp_minus2_of_sphere
from .chern import chern_via_compositions, chern_via_series, chern_via_stirling, paper_A_formula
from .rational_core import factorial, gcd_all, stirling2
from .samelson_order import (
    IntegralityError,
    OrderReport,
    PsiGenerator,
    SamelsonParams,
    build_generators,
    closed_form,
    compute_order,
    first_generator_dominates,
    sweep,
)
from .trunc_series import TruncSeries, exp_minus_one

__version__ = "0.1.0"
