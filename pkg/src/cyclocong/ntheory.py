"""Scalar number-theoretic functions used throughout the package.

Everything here works on Python ints and :class:`fractions.Fraction`, so
results are exact at any size. Factorization is plain trial division, which
is adequate for the desk-scale ranges the verification harness covers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

__all__ = [
    "Factorization",
    "factorize",
    "is_prime",
    "primes_up_to",
    "divisors",
    "moebius",
    "euler_phi",
    "jordan",
    "jordan_divisor_sum",
    "carmichael",
    "mangoldt_exp",
    "stirling1",
    "bernoulli",
    "falling",
    "binomial",
    "gl_order",
    "gl_order_bruteforce",
]


@dataclass(frozen=True)
class Factorization:
    """Prime factorization ``n = prod(p**e for p, e in factors)``."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod_ = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"malformed factorization {self.factors!r}")
            last = p
            prod_ *= p**e
        if prod_ != self.n:
            raise ValueError(f"factors {self.factors!r} do not multiply to {self.n}")

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)


def _check_positive(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"expected an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


@lru_cache(maxsize=8192)
def factorize(n: int) -> Factorization:
    _check_positive(n)
    factors = []
    m = n
    for p in (2, 3):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    p = 5
    step = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += step
        step = 6 - step
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    return factorize(n).factors == ((n, 1),)


def primes_up_to(limit: int) -> list[int]:
    """Sieve of Eratosthenes, inclusive of ``limit``."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in increasing order."""
    fac = factorize(n)
    out = [1]
    for p, e in fac.factors:
        out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)


def moebius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac.factors):
        return 0
    return -1 if len(fac.factors) % 2 else 1


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorize(n).factors:
        result -= result // p
    return result


def jordan(k: int, n: int) -> int:
    """Jordan totient ``J_k(n)`` via the multiplicative product form.

    ``J_k(p^e) = p^(k(e-1)) * (p^k - 1)``, which is
    ``n^k * prod(1 - p^-k)`` regrouped into integers.
    """
    _check_positive(k)
    result = 1
    for p, e in factorize(n).factors:
        pk = p**k
        result *= pk ** (e - 1) * (pk - 1)
    return result


def jordan_divisor_sum(k: int, n: int) -> int:
    """Jordan totient by its defining divisor sum (used as a cross-check)."""
    return sum(moebius(n // d) * d**k for d in divisors(n))


def _carmichael_prime_power(p: int, e: int) -> int:
    if p == 2:
        if e == 1:
            return 1
        if e == 2:
            return 2
        return 2 ** (e - 2)
    return p ** (e - 1) * (p - 1)


def carmichael(n: int) -> int:
    """Exponent of the unit group of Z/nZ."""
    result = 1
    for p, e in factorize(n).factors:
        result = math.lcm(result, _carmichael_prime_power(p, e))
    return result


def mangoldt_exp(n: int) -> int:
    """``exp(Lambda(n))``: ``p`` if ``n`` is a power of the prime ``p``, else 1."""
    fac = factorize(n)
    if len(fac.factors) == 1:
        return fac.factors[0][0]
    return 1


@lru_cache(maxsize=None)
def _stirling1_row(m: int) -> tuple[int, ...]:
    if m == 0:
        return (1,)
    prev = _stirling1_row(m - 1)
    # s(m, j) = s(m-1, j-1) - (m-1) s(m-1, j)
    row = [0] * (m + 1)
    for j in range(m + 1):
        left = prev[j - 1] if j >= 1 else 0
        right = prev[j] if j < m else 0
        row[j] = left - (m - 1) * right
    return tuple(row)


def stirling1(m: int, j: int) -> int:
    """Signed Stirling number of the first kind ``s(m, j)``.

    Defined by ``x(x-1)...(x-m+1) = sum_j s(m, j) x^j``; zero for ``j > m``.
    """
    if m < 0 or j < 0:
        raise ValueError("stirling1 needs non-negative arguments")
    if j > m:
        return 0
    # iterate rows up front so deep m does not blow the recursion limit
    for i in range(0, m, 256):
        _stirling1_row(i)
    return _stirling1_row(m)[j]


@lru_cache(maxsize=None)
def _bernoulli_list(m: int) -> tuple[Fraction, ...]:
    # Convention t e^t/(e^t - 1): sum_{j<=m} C(m+1, j) B_j = m + 1.
    out: list[Fraction] = []
    for i in range(m + 1):
        acc = Fraction(i + 1) - sum(
            (math.comb(i + 1, j) * out[j] for j in range(i)), Fraction(0)
        )
        out.append(acc / (i + 1))
    return tuple(out)


def bernoulli(m: int) -> Fraction:
    """Bernoulli number with ``B_1 = +1/2`` (generating function ``t e^t/(e^t-1)``)."""
    if m < 0:
        raise ValueError("bernoulli index must be non-negative")
    size = 1
    while size <= m:
        size *= 2
    return _bernoulli_list(max(size, 32))[m]


def falling(r, l: int):
    """Falling factorial ``r (r-1) ... (r-l+1)``.

    Works for any ring element supporting ``-`` and ``*`` with ints
    (ints, Fractions, :class:`cyclocong.symbolic.JPoly`).
    """
    if l < 0:
        raise ValueError("falling factorial length must be non-negative")
    result = 1
    for i in range(l):
        result = (r - i) * result
    return result


def binomial(m: int, n: int) -> int:
    """Binomial coefficient with ``C(m, n) = 0`` when ``n < 0`` or ``n > m >= 0``."""
    if n < 0 or m < 0 or n > m:
        return 0
    return math.comb(m, n)


def gl_order(k: int, n: int) -> int:
    """Order of GL_k(Z/nZ) from the Jordan totient product formula."""
    _check_positive(k)
    _check_positive(n)
    result = n ** (k * (k - 1) // 2)
    for j in range(1, k + 1):
        result *= jordan(j, n)
    return result


def _det_mod(matrix: list[list[int]], n: int) -> int:
    size = len(matrix)
    if size == 1:
        return matrix[0][0] % n
    total = 0
    for col in range(size):
        minor = [row[:col] + row[col + 1 :] for row in matrix[1:]]
        sign = -1 if col % 2 else 1
        total += sign * matrix[0][col] * _det_mod(minor, n)
    return total % n


def gl_order_bruteforce(k: int, n: int) -> int:
    """Count invertible k x k matrices over Z/nZ by enumeration (tiny k, n only)."""
    count = 0
    for entries in product(range(n), repeat=k * k):
        rows = [list(entries[i * k : (i + 1) * k]) for i in range(k)]
        if math.gcd(_det_mod(rows, n), n) == 1:
            count += 1
    return count
