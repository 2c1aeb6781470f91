"""Cyclotomic polynomials and their values and derivatives at ``x = 1``."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .ntheory import divisors, euler_phi, is_prime, mangoldt_exp, moebius
from .polyx import (
    ExactPoly,
    derivative,
    eval_float,
    eval_rat,
    inflate,
    poly_exact_div,
    poly_mul,
    taylor_shift,
)

__all__ = [
    "CycloData",
    "cyclotomic_poly",
    "cyclo_data",
    "shifted_coeffs",
    "deriv_at_one",
    "check_lebesgue",
    "lebesgue_divisor_product",
    "check_holder",
    "check_prime_power_reduction",
    "prime_deriv_formula",
    "check_positivity",
    "sign_change_2p",
    "sign_change_2p_exact",
    "closed_form_2p_derivative",
]


def _x_pow_minus_one(d: int) -> ExactPoly:
    return ExactPoly([-1] + [0] * (d - 1) + [1])


@lru_cache(maxsize=4096)
def cyclotomic_poly(n: int) -> ExactPoly:
    """The n-th cyclotomic polynomial from the Moebius product of ``x^d - 1``.

    Numerator factors are multiplied first, then the denominator factors are
    divided out one by one, divisors taken in increasing order.
    """
    if n < 1:
        raise ValueError("n must be positive")
    num = ExactPoly((1,))
    dens = []
    for d in divisors(n):
        mu = moebius(n // d)
        if mu == 1:
            num = poly_mul(num, _x_pow_minus_one(d))
        elif mu == -1:
            dens.append(d)
    for d in dens:
        num = poly_exact_div(num, _x_pow_minus_one(d))
    return num


@dataclass(frozen=True)
class CycloData:
    n: int
    phi_n: ExactPoly
    b: tuple[int, ...]

    @property
    def degree(self) -> int:
        return self.phi_n.degree


def cyclo_data(n: int) -> CycloData:
    """``Phi_n`` together with the coefficients ``b_n(h)`` of ``Phi_n(x+1)``."""
    f = cyclotomic_poly(n)
    return CycloData(n, f, taylor_shift(f, 1).coeffs)


@lru_cache(maxsize=4096)
def shifted_coeffs(n: int, order: int) -> tuple[int, ...]:
    """``b_n(0..order)``, zero-padded past the degree; only ``order + 1`` shift passes."""
    f = cyclotomic_poly(n)
    cs = taylor_shift(f, 1, order=order).coeffs
    return cs + (0,) * (order + 1 - len(cs))


def deriv_at_one(n: int, k: int) -> int:
    """``Phi_n^(k)(1) = k! * b_n(k)``; zero once ``k`` exceeds ``phi(n)``."""
    if k < 0:
        raise ValueError("derivative order must be non-negative")
    if k > euler_phi(n):
        return 0
    return math.factorial(k) * shifted_coeffs(n, k)[k]


def lebesgue_divisor_product(n: int) -> Fraction:
    """``prod_{d | n} d^mu(n/d)`` evaluated exactly."""
    value = Fraction(1)
    for d in divisors(n):
        mu = moebius(n // d)
        if mu:
            value *= Fraction(d) ** mu
    return value


def check_lebesgue(n: int) -> bool:
    if n < 2:
        raise ValueError("the value-at-one identity needs n >= 2")
    value = eval_rat(cyclotomic_poly(n), 1)
    return value == mangoldt_exp(n) == lebesgue_divisor_product(n)


def check_holder(n: int) -> bool:
    if n < 2:
        raise ValueError("the log-derivative identity needs n >= 2")
    f = cyclotomic_poly(n)
    return 2 * eval_rat(derivative(f, 1), 1) == euler_phi(n) * eval_rat(f, 1)


def check_prime_power_reduction(p: int, e: int) -> bool:
    """``Phi_{p^e}(x) == Phi_p(x^(p^(e-1)))``."""
    if not is_prime(p) or e < 2:
        raise ValueError("need a prime p and e >= 2")
    return cyclotomic_poly(p**e) == inflate(cyclotomic_poly(p), p ** (e - 1))


def prime_deriv_formula(p: int, l: int) -> int:
    """Closed form ``p(p-1)...(p-l) / (l+1)`` for ``Phi_p^(l)(1)``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not 0 <= l < p:
        raise ValueError("need 0 <= l < p")
    num = math.prod(range(p - l, p + 1))
    q, r = divmod(num, l + 1)
    assert r == 0
    return q


def check_positivity(n: int) -> bool:
    """All shifted coefficients ``b_n(h)``, ``1 <= h <= phi(n)``, are positive."""
    b = cyclo_data(n).b
    return all(c > 0 for c in b[1:])


def sign_change_2p(p: int) -> tuple[float, int]:
    """``(Phi_2p'(1 - 1/sqrt(p)), Phi_2p'(1))`` in float and exact arithmetic."""
    if p < 3 or not is_prime(p):
        raise ValueError("need an odd prime")
    df = derivative(cyclotomic_poly(2 * p), 1)
    x_star = 1.0 - 1.0 / math.sqrt(p)
    return eval_float(df, x_star), eval_rat(df, 1)


def sign_change_2p_exact(p: int, denom: int = 10**6) -> tuple[Fraction, Fraction]:
    """Exact fallback: evaluate ``Phi_2p'`` at a rational ``x~`` with ``1 - 1/sqrt(p) < x~ < 1``.

    ``x~ = 1 - a/denom`` with ``a = floor(denom/sqrt(p))`` lowered by one
    when ``denom^2/p`` is a perfect square. A negative value there, together
    with the positive value at 1, still brackets a root below 1.
    Returns ``(x~, value)``.
    """
    if p < 3 or not is_prime(p):
        raise ValueError("need an odd prime")
    a = math.isqrt(denom * denom // p)
    if a * a * p >= denom * denom:
        a -= 1
    x = 1 - Fraction(a, denom)
    df = derivative(cyclotomic_poly(2 * p), 1)
    return x, eval_rat(df, x)


def closed_form_2p_derivative(p: int) -> float:
    """The closed-form value of ``Phi_2p'`` at ``1 - 1/sqrt(p)`` (independent of the polynomial)."""
    s = math.sqrt(p)
    x = 1 - 1 / s
    return ((2 * p - s + 1 / s - 1) * x ** (p - 1) - 1) / (2 - 1 / s) ** 2
