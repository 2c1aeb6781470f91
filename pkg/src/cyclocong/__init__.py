"""Exact computations and congruence checks for cyclotomic polynomials at ``x = 1``."""
from .cyclotomic import cyclo_data, cyclotomic_poly, deriv_at_one
from .ntheory import carmichael, euler_phi, factorize, jordan, moebius
from .polyx import ExactPoly, taylor_shift
from .symbolic import JPoly, ratio_table

__version__ = "0.1.0"

__all__ = [
    "ExactPoly",
    "JPoly",
    "carmichael",
    "cyclo_data",
    "cyclotomic_poly",
    "deriv_at_one",
    "euler_phi",
    "factorize",
    "jordan",
    "moebius",
    "ratio_table",
    "taylor_shift",
]
