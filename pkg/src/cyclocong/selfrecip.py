"""Coefficient identities for products of quadratics and self-reciprocal polynomials.

For ``t = (t_1, ..., t_q)`` the coefficients ``b(t; h)`` of
``prod (x^2 + t_j x + t_j)`` are a fixed binomial transform of the
coefficients ``a(t; l)`` of ``prod (y + t_j)``. Applied to a self-reciprocal
``f(x) = x^q g(x + 1/x)`` this expresses the Taylor coefficients of ``f`` at
``x = 1`` through those of ``g`` at ``y = 2`` and leads to divisibility of
odd-order derivatives at 1.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .ntheory import binomial, stirling1
from .polyx import ExactPoly, poly_mul, taylor_shift
from .report import CongruenceReport

__all__ = [
    "NotSelfReciprocal",
    "OddDegree",
    "TSeq",
    "ReciprocalPair",
    "expand_quadratic_product",
    "expand_linear_product",
    "b_from_a",
    "chebyshev_like",
    "g_from_f",
    "reexpand",
    "alpha_coeffs",
    "reciprocal_pair",
    "check_recip_identity",
    "check_recip_congruences",
    "constant_example_check",
    "stirling_example_check",
    "random_tseq",
    "random_self_reciprocal",
]


class NotSelfReciprocal(ValueError):
    pass


class OddDegree(ValueError):
    pass


@dataclass(frozen=True)
class TSeq:
    t: tuple

    def __init__(self, t: Sequence):
        if len(t) < 1:
            raise ValueError("TSeq needs at least one entry")
        object.__setattr__(self, "t", tuple(t))

    @property
    def q(self) -> int:
        return len(self.t)


def _as_tseq(ts) -> TSeq:
    return ts if isinstance(ts, TSeq) else TSeq(ts)


def expand_quadratic_product(ts) -> list:
    """Coefficients ``b(t; 0..2q)`` by direct multiplication (the oracle side)."""
    acc = ExactPoly((1,))
    for tj in _as_tseq(ts).t:
        acc = poly_mul(acc, ExactPoly((tj, tj, 1)))
    return _padded(acc, 2 * _as_tseq(ts).q)


def expand_linear_product(ts) -> list:
    """Coefficients ``a(t; 0..q)`` of ``prod (y + t_j)``."""
    acc = ExactPoly((1,))
    for tj in _as_tseq(ts).t:
        acc = poly_mul(acc, ExactPoly((tj, 1)))
    return _padded(acc, _as_tseq(ts).q)


def _padded(f: ExactPoly, degree: int) -> list:
    return [f[h] for h in range(degree + 1)]


def b_from_a(a: Sequence, q: int, h_max: int | None = None) -> list:
    """``b(h) = sum_l C(q-l, h-2l) a(l)`` for ``h = 0..2q`` (or up to ``h_max``).

    Binomials with a negative lower index or lower index above the upper one
    count as zero, so the sum runs over ``0 <= l <= h // 2``.
    """
    if len(a) != q + 1:
        raise ValueError(f"expected {q + 1} coefficients, got {len(a)}")
    top = 2 * q if h_max is None else min(h_max, 2 * q)
    out = []
    for h in range(top + 1):
        s = 0
        for l in range(min(h // 2, q) + 1):
            c = binomial(q - l, h - 2 * l)
            if c:
                s += c * a[l]
        out.append(s)
    return out


def chebyshev_like(m_max: int) -> list[ExactPoly]:
    """``P_0..P_m_max`` with ``x^m + x^-m = P_m(x + 1/x)``.

    ``P_0 = 2``, ``P_1 = y`` and ``P_m = y P_{m-1} - P_{m-2}``.
    """
    y = ExactPoly((0, 1))
    ps = [ExactPoly((2,)), y]
    for _ in range(2, m_max + 1):
        ps.append(y * ps[-1] - ps[-2])
    return ps[: m_max + 1]


def _check_even_self_reciprocal(f: ExactPoly) -> int:
    if f.is_zero() or f.degree % 2:
        raise OddDegree(f"degree {f.degree} is not even")
    if not f.is_self_reciprocal():
        raise NotSelfReciprocal(f"{f} is not self-reciprocal")
    return f.degree // 2


def g_from_f(f: ExactPoly) -> ExactPoly:
    """The ``g`` with ``f(x) = x^q g(x + 1/x)`` for self-reciprocal ``f`` of degree ``2q``."""
    q = _check_even_self_reciprocal(f)
    ps = chebyshev_like(q)
    # x^-q f = c_q + sum_{m>=1} c_{q+m} (x^m + x^-m)
    g = ExactPoly((f[q],))
    for m in range(1, q + 1):
        c = f[q + m]
        if c:
            g = g + ps[m] * c
    return g


def reexpand(g: ExactPoly) -> ExactPoly:
    """``x^q g(x + 1/x)`` with ``q = deg g``, as an ordinary polynomial in ``x``."""
    q = g.degree
    out = ExactPoly()
    # x^q (x + 1/x)^m = x^(q-m) (x^2 + 1)^m
    sq = ExactPoly((1, 0, 1))
    power = ExactPoly((1,))
    for m in range(q + 1):
        if g[m]:
            out = out + ExactPoly.monomial(q - m) * power * g[m]
        power = power * sq
    return out


def alpha_coeffs(g: ExactPoly) -> list:
    """Coefficients of ``g(y + 2)``."""
    return list(taylor_shift(g, 2).coeffs)


@dataclass(frozen=True)
class ReciprocalPair:
    f: ExactPoly
    g: ExactPoly
    beta: tuple
    alpha: tuple

    @property
    def q(self) -> int:
        return self.g.degree


def reciprocal_pair(f: ExactPoly) -> ReciprocalPair:
    g = g_from_f(f)
    if reexpand(g) != f:
        raise AssertionError("re-expansion of g does not reproduce f")
    q = g.degree
    beta = tuple(_padded(taylor_shift(f, 1), 2 * q))
    alpha = tuple(alpha_coeffs(g))
    return ReciprocalPair(f, g, beta, alpha)


def check_recip_identity(f: ExactPoly) -> bool:
    """Shifted coefficients of ``f`` equal the binomial transform of those of ``g(y+2)``."""
    pair = reciprocal_pair(f)
    return list(pair.beta) == b_from_a(list(pair.alpha), pair.q) and pair.beta[-1] == pair.alpha[-1]


def check_recip_congruences(f: ExactPoly, k_max: int | None = None, params: dict | None = None) -> list[CongruenceReport]:
    """Divisibility of ``f'''(1)`` and ``f^(2k+1)(1)`` computed through ``g``.

    Derivatives come from ``b_from_a(alpha(g))``, not from shifting ``f``
    itself. ``k_max`` defaults to ``q``; orders beyond ``2q`` give zero
    dividends.
    """
    g = g_from_f(f)
    q = g.degree
    if k_max is None:
        k_max = max(q, 2)
    beta = b_from_a(alpha_coeffs(g), q, h_max=2 * k_max + 1)
    beta += [0] * (2 * k_max + 2 - len(beta))
    base = dict(params or {})

    def deriv(h: int) -> int:
        return math.factorial(h) * beta[h]

    reports = [
        CongruenceReport(
            "odd_deriv.cubic", {**base, "k": 1}, 2 * deriv(3), 2 * q - 2,
        )
    ]
    if q % 2 == 0:
        reports.append(
            CongruenceReport("odd_deriv.cubic_strong", {**base, "k": 1}, deriv(3), 2 * q - 2)
        )
    for k in range(2, k_max + 1):
        reports.append(
            CongruenceReport("odd_deriv.higher", {**base, "k": k}, deriv(2 * k + 1), 2 * q - 2 * k)
        )
    return reports


def constant_example_check(a, q: int) -> bool:
    """Constant sequence ``t_j = a`` against the binomial-theorem closed form."""
    b = expand_quadratic_product([a] * q)
    closed = [
        sum(binomial(q - l, h - 2 * l) * math.comb(q, l) * a ** (q - l) for l in range(h // 2 + 1))
        for h in range(2 * q + 1)
    ]
    via_a = b_from_a(expand_linear_product([a] * q), q)
    return b == closed == via_a


def stirling_example_check(q: int, sign: int) -> bool:
    """``t_j = sign * j``: linear coefficients are (unsigned) Stirling numbers ``s(q+1, l+1)``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    b = expand_quadratic_product([sign * j for j in range(1, q + 1)])
    if sign == -1:
        a = [stirling1(q + 1, l + 1) for l in range(q + 1)]
    else:
        a = [abs(stirling1(q + 1, l + 1)) for l in range(q + 1)]
    return b == b_from_a(a, q)


def random_tseq(rng: random.Random, q_max: int = 12, bound: int = 50, rational: bool = True) -> TSeq:
    q = rng.randint(1, q_max)
    if rational:
        vals = [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(q)]
    else:
        vals = [rng.randint(-bound, bound) for _ in range(q)]
    return TSeq(vals)


def random_self_reciprocal(rng: random.Random, q_max: int = 12, bound: int = 50) -> ExactPoly:
    """Random palindromic integer polynomial of even degree ``2q`` with nonzero ends."""
    q = rng.randint(1, q_max)
    half = [rng.randint(-bound, bound) for _ in range(q + 1)]
    while half[0] == 0:
        half[0] = rng.randint(-bound, bound)
    return ExactPoly(half[:-1] + [half[-1]] + half[:-1][::-1])
