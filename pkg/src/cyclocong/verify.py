"""Batch congruence checks over ranges of ``n`` and ``k``."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .cyclotomic import (
    check_holder,
    check_lebesgue,
    check_positivity,
    cyclotomic_poly,
    prime_deriv_formula,
    shifted_coeffs,
    sign_change_2p,
    sign_change_2p_exact,
)
from .ntheory import carmichael, euler_phi, is_prime, jordan, primes_up_to
from .report import CheckReport, CongruenceReport, Report, divides, emit_report, sort_reports
from .selfrecip import check_recip_congruences

__all__ = [
    "TrivialModulus",
    "trivial_modulus",
    "check_trivial_congruence",
    "nondivisibility_witness",
    "check_theorem3",
    "check_theorem3_selfrecip",
    "check_positivity_range",
    "check_scalar_identities",
    "check_prime_derivatives",
    "check_sign_change",
    "CongruenceReport",
    "CheckReport",
    "divides",
    "emit_report",
    "sort_reports",
    "SIGN_MARGIN",
    "all_passed",
]

SIGN_MARGIN = 1e-6


@dataclass(frozen=True)
class TrivialModulus:
    k: int
    M: int
    parts: tuple[tuple[int, int], ...]


def trivial_modulus(k: int) -> TrivialModulus:
    """``prod p^e`` over prime powers with ``lambda(p^e) | k`` and ``lambda(p^(e+1)) !| k``.

    ``lambda(p) = p - 1`` for odd ``p``, so only primes with ``(p - 1) | k``
    can contribute; ``p = 2`` always does.
    """
    if k < 1:
        raise ValueError("k must be positive")
    parts = []
    for p in primes_up_to(k + 1):
        if p != 2 and k % (p - 1):
            continue
        e = 0
        while k % carmichael(p ** (e + 1)) == 0:
            e += 1
        if e:
            parts.append((p, e))
    return TrivialModulus(k, math.prod(p**e for p, e in parts), tuple(parts))


def check_trivial_congruence(k: int, n_max: int) -> list[CongruenceReport]:
    """``J_k(n) = 0 mod M(k)`` for ``k + 2 <= n <= n_max``."""
    if k < 3:
        raise ValueError("the trivial congruence is stated for k >= 3")
    M = trivial_modulus(k).M
    return [
        CongruenceReport("jordan.trivial_modulus", {"n": n, "k": k}, jordan(k, n), M)
        for n in range(k + 2, n_max + 1)
    ]


def nondivisibility_witness(k: int, M_prime: int, n0: int, n_budget: int) -> int | None:
    """First ``n`` in ``[n0, n0 + n_budget]`` with ``J_k(n) != 0 mod M_prime``.

    Primes are tried first (for a prime ``q``, ``J_k(q) = q^k - 1`` and
    Dirichlet's theorem guarantees a good residue class), then the remaining
    integers. ``None`` means nothing was found within the budget.
    """
    if M_prime <= trivial_modulus(k).M:
        raise ValueError("M_prime must exceed the trivial modulus")
    span = range(max(n0, 1), n0 + n_budget + 1)
    ordered = [n for n in span if is_prime(n)] + [n for n in span if not is_prime(n)]
    for n in ordered:
        if jordan(k, n) % M_prime:
            return n
    return None


def _odd_derivative_reports(n: int, phi_n: int, derivs: dict[int, int], k_max: int) -> list[CongruenceReport]:
    p = {"n": n}
    out = [CongruenceReport("odd_deriv.cubic", {**p, "k": 1}, 2 * derivs[3], phi_n - 2)]
    if phi_n % 4 == 0:
        out.append(CongruenceReport("odd_deriv.cubic_strong", {**p, "k": 1}, derivs[3], phi_n - 2))
    for k in range(2, k_max + 1):
        out.append(CongruenceReport("odd_deriv.higher", {**p, "k": k}, derivs[2 * k + 1], phi_n - 2 * k))
    return out


def check_theorem3(n_range: Iterable[int], k_max: int = 10) -> list[CongruenceReport]:
    """Odd-order derivative divisibility for every ``n`` in ``n_range``.

    ``2 Phi_n'''(1)`` by ``phi(n) - 2`` (and ``Phi_n'''(1)`` itself when
    ``4 | phi(n)``), and ``Phi_n^(2k+1)(1)`` by ``phi(n) - 2k`` for
    ``2 <= k <= k_max``. Derivatives come from a truncated shift of
    ``Phi_n``.
    """
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    top = 2 * k_max + 1
    out: list[CongruenceReport] = []
    for n in n_range:
        if n < 2:
            raise ValueError("n must be at least 2")
        b = shifted_coeffs(n, top)
        derivs = {h: math.factorial(h) * b[h] for h in range(3, top + 1, 2)}
        out.extend(_odd_derivative_reports(n, euler_phi(n), derivs, k_max))
    return out


def check_theorem3_selfrecip(n_range: Iterable[int], k_max: int = 10) -> list[CongruenceReport]:
    """Same claims computed through ``g_from_f`` and the binomial transform."""
    out = []
    for n in n_range:
        out.extend(check_recip_congruences(cyclotomic_poly(n), k_max=k_max, params={"n": n}))
    return out


def check_positivity_range(n_range: Iterable[int]) -> list[CheckReport]:
    return [CheckReport("shift.positivity", {"n": n}, check_positivity(n)) for n in n_range]


def check_scalar_identities(n_range: Iterable[int]) -> list[CheckReport]:
    out = []
    for n in n_range:
        out.append(CheckReport("value_at_one", {"n": n}, check_lebesgue(n)))
        out.append(CheckReport("log_derivative_at_one", {"n": n}, check_holder(n)))
    return out


def check_prime_derivatives(p_max: int) -> list[CheckReport]:
    """Closed-form ``Phi_p^(l)(1)`` against the shift, and divisibility by ``p``."""
    out = []
    for p in primes_up_to(p_max):
        if p == 2:
            continue
        b = shifted_coeffs(p, p - 1)
        for l in range(p):
            closed = prime_deriv_formula(p, l)
            ok = closed == math.factorial(l) * b[l] and (l == 0 or closed % p == 0)
            out.append(CheckReport("prime_deriv", {"p": p, "l": l}, ok))
    return out


def check_sign_change(p_max: int, margin: float = SIGN_MARGIN) -> list[CheckReport]:
    """``Phi_2p'`` is negative at ``1 - 1/sqrt(p)`` and positive at 1.

    Values closer to zero than ``margin`` fall back to exact evaluation at a
    rational point just to the right of ``1 - 1/sqrt(p)``.
    """
    out = []
    for p in primes_up_to(p_max):
        if p == 2:
            continue
        left, at_one = sign_change_2p(p)
        if abs(left) > margin:
            ok = left < 0 < at_one
            note = f"left={left:.6g}; at_one={at_one}"
        else:
            x, exact = sign_change_2p_exact(p)
            ok = exact < 0 < at_one
            note = f"exact at {x}: {float(exact):.6g}; at_one={at_one}"
        out.append(CheckReport("signchange", {"p": p}, ok, note))
    return out


def all_passed(reports: Iterable[Report]) -> bool:
    return all(r.passed for r in reports)

