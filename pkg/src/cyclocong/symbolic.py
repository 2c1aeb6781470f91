"""Derivative ratios ``Phi_n^(l)(1) / Phi_n(1)`` as polynomials in Jordan totients.

The ratio for generic ``n >= 2`` lives in ``Q[J_1, J_2, ...]`` with
``J_1 = phi``. It is produced by a Leibniz recursion whose inputs are the
Taylor coefficients, as polynomials in a formal divisor ``d``, of the
logarithmic derivative of ``(x^d - 1)/(x - 1)`` at ``x = 1``; every ``d^j``
is then summed against ``mu(n/d)`` to become ``J_j``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .ntheory import bernoulli, falling, jordan
from .polyx import DPoly, DSeries, ExactPoly, binom_poly, dseries_div, poly_exact_div

__all__ = [
    "JPoly",
    "phi",
    "J",
    "RatioTable",
    "taylor_h_coeffs",
    "jordan_substitute",
    "ratio_table",
    "assert_even_only",
    "conjecture_check",
    "eval_ratio_at",
    "corollary_polys",
    "corollary_fixtures",
    "omegas",
    "omega_set",
    "lehmer_rhs",
    "lehmer_rhs_symbolic",
    "lehmer_check",
    "LehmerResult",
]


def _strip(exps: Iterable[int]) -> tuple[int, ...]:
    e = list(exps)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def _add_exps(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    return tuple(x + y for x, y in zip(a, b)) + a[len(b):]


class JPoly:
    """Sparse polynomial over Q in ``J_1 (= phi), J_2, ...``.

    Keys of ``terms`` are exponent vectors ``(e_1, e_2, ...)`` with trailing
    zeros stripped, so polynomials over different numbers of variables
    compare equal when they are the same polynomial.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        clean: dict[tuple, Fraction] = {}
        for exps, c in (terms or {}).items():
            if c:
                key = _strip(exps)
                clean[key] = clean.get(key, Fraction(0)) + Fraction(c)
                if not clean[key]:
                    del clean[key]
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> "JPoly":
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def var(cls, j: int) -> "JPoly":
        if j < 1:
            raise ValueError("Jordan variables are indexed from 1")
        return cls._raw({(0,) * (j - 1) + (1,): Fraction(1)})

    @classmethod
    def const(cls, c) -> "JPoly":
        return cls({(): c})

    @property
    def maxj(self) -> int:
        return max((len(e) for e in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def uses(self, j: int) -> bool:
        return any(len(e) >= j and e[j - 1] for e in self.terms)

    def weighted_degree(self) -> int:
        return max((sum(i * x for i, x in enumerate(e, 1)) for e in self.terms), default=-1)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = JPoly.const(other)
        if not isinstance(other, JPoly):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __neg__(self):
        return JPoly._raw({e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = JPoly.const(other)
        if not isinstance(other, JPoly):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return JPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = JPoly.const(other)
        if not isinstance(other, JPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return JPoly()
            return JPoly._raw({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, JPoly):
            return NotImplemented
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exps(e1, e2)
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return JPoly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, e: int):
        result = JPoly.const(1)
        for _ in range(e):
            result = result * self
        return result

    def evaluate(self, values: Mapping[int, object] | Callable[[int], object]) -> Fraction:
        """Substitute numbers for every variable; ``values`` maps index ``j`` to ``J_j``."""
        get = values if callable(values) else values.__getitem__
        cache: dict[int, object] = {}
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for j, x in enumerate(e, 1):
                if x:
                    if j not in cache:
                        cache[j] = get(j)
                    term *= cache[j] ** x
            total += term
        return total

    def by_power_of(self, j: int) -> dict[int, "JPoly"]:
        """Split as ``sum_e J_j^e * C_e`` with ``C_e`` free of ``J_j``."""
        out: dict[int, dict] = {}
        for e, c in self.terms.items():
            x = e[j - 1] if len(e) >= j else 0
            rest = list(e) + [0] * max(0, j - len(e))
            rest[j - 1] = 0
            out.setdefault(x, {})[_strip(rest)] = c
        return {x: JPoly._raw(t) for x, t in out.items()}

    def substitute(self, j: int, value) -> "JPoly":
        acc = JPoly()
        for x, coeff in self.by_power_of(j).items():
            acc = acc + coeff * (Fraction(value) ** x)
        return acc

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        def key(item):
            e = item[0]
            return (-sum(e), tuple(-x for x in e))
        return sorted(self.terms.items(), key=key)

    def to_text(self) -> str:
        """Canonical text: monomials by descending total degree, rationals as ``p/q``."""
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                (("phi" if j == 1 else f"J{j}") + (f"^{x}" if x > 1 else ""))
                for j, x in enumerate(e, 1)
                if x
            )
            mag = abs(c)
            coeff = f"{mag.numerator}" if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            body = coeff if not mono else (mono if mag == 1 else f"{coeff}*{mono}")
            out.append(("-" if c < 0 else "+", body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"JPoly({self.to_text()})"

    __str__ = to_text


phi = JPoly.var(1)


def J(j: int) -> JPoly:
    return JPoly.var(j)


def taylor_h_coeffs(order: int) -> list[DPoly]:
    """Taylor coefficients at ``t = 0`` of ``(((d-1)t - 1)(t+1)^(d-1) + 1) / (t((t+1)^d - 1))``.

    Both numerator and denominator start at ``d * t^2``; that factor is
    cancelled before the series division so the divisor has constant term 1.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    top = order + 2
    d_minus_1 = ExactPoly((-1, 1))
    num = []
    den = []
    for j in range(top + 1):
        c = -binom_poly(-1, j)
        if j >= 1:
            c = c + d_minus_1 * binom_poly(-1, j - 1)
        if j == 0:
            c = c + 1
        num.append(c)
        den.append(binom_poly(0, j - 1) if j >= 2 else ExactPoly())
    d = ExactPoly((0, 1))
    a = DSeries(num, top).shift_down(2).map(lambda c: poly_exact_div(c, d))
    b = DSeries(den, top).shift_down(2).map(lambda c: poly_exact_div(c, d))
    return list(dseries_div(a, b).coeffs)


def jordan_substitute(c: DPoly) -> JPoly:
    """``sum_j c_j d^j -> sum_{j>=1} c_j J_j``; the constant term sums to zero over ``mu``."""
    return JPoly({(0,) * (j - 1) + (1,): Fraction(cj) for j, cj in enumerate(c.coeffs) if j >= 1})


@dataclass(frozen=True)
class RatioTable:
    max_order: int
    R: tuple[JPoly, ...]

    def __getitem__(self, l: int) -> JPoly:
        return self.R[l]

    def to_text(self) -> str:
        return "".join(f"R[{l}] = {r.to_text()}\n" for l, r in enumerate(self.R))


@lru_cache(maxsize=None)
def _log_derivative_series(order: int) -> tuple[JPoly, ...]:
    cs = taylor_h_coeffs(order)
    return tuple(jordan_substitute(c) * math.factorial(m) for m, c in enumerate(cs))


@lru_cache(maxsize=None)
def _ratios(L: int) -> tuple[JPoly, ...]:
    if L == 0:
        return (JPoly.const(1),)
    prev = _ratios(L - 1)
    S = _log_derivative_series(L - 1)
    k = L - 1
    acc = JPoly()
    for i in range(k + 1):
        acc = acc + (prev[i] * S[k - i]) * math.comb(k, i)
    return prev + (acc,)


def ratio_table(L: int) -> RatioTable:
    """``R[l] = Phi_n^(l)(1)/Phi_n(1)`` for ``l = 0..L`` by the Leibniz recursion.

    ``R[k+1] = sum_i C(k, i) R[i] S[k-i]`` where ``S[m]`` is ``m!`` times the
    m-th Taylor coefficient after Jordan substitution. All variables,
    odd-indexed ones included, are carried through.
    """
    if L < 0:
        raise ValueError("order must be non-negative")
    for l in range(0, L, 8):
        _ratios(l)
    return RatioTable(L, _ratios(L))


def assert_even_only(rt: RatioTable | Iterable[JPoly]) -> bool:
    """No monomial of any ratio involves ``J_3, J_5, ...``."""
    polys = rt.R if isinstance(rt, RatioTable) else list(rt)
    for r in polys:
        for e in r.terms:
            if any(x for j, x in enumerate(e, 1) if j >= 3 and j % 2):
                return False
    return True


def conjecture_check(k: int, rt: RatioTable | None = None) -> tuple[bool, JPoly | None]:
    """Is ``R[2k+1]`` divisible by ``phi - 2k`` in ``Q[phi, J_2, ...]``?

    Divisibility is decided by the substitution ``phi -> 2k``; the quotient
    comes from synthetic division in ``phi`` and is verified by
    multiplying back.
    """
    if k < 1:
        raise ValueError("k must be positive")
    order = 2 * k + 1
    if rt is None or rt.max_order < order:
        rt = ratio_table(order)
    r = rt[order]
    c = 2 * k
    if not r.substitute(1, c).is_zero():
        return False, None
    parts = r.by_power_of(1)
    top = max(parts)
    q: dict[int, JPoly] = {}
    carry = JPoly()
    for e in range(top, 0, -1):
        carry = parts.get(e, JPoly()) + carry * c
        q[e - 1] = carry
    remainder = parts.get(0, JPoly()) + carry * c
    quotient = JPoly()
    for e, coeff in q.items():
        quotient = quotient + coeff * (phi**e)
    if not remainder.is_zero() or quotient * (phi - c) != r:
        return False, None
    return True, quotient


def eval_ratio_at(rt: RatioTable, l: int, n: int) -> Fraction:
    """Numeric value of ``R[l]`` at ``n`` (``J_j <- J_j(n)``)."""
    if n < 2:
        raise ValueError("the ratio polynomials describe n >= 2 only")
    if l > rt.max_order:
        raise ValueError(f"table only reaches order {rt.max_order}")
    return rt[l].evaluate(lambda j: jordan(j, n))


def corollary_polys() -> dict[int, JPoly]:
    """The closed forms for orders 2 to 5 (order 5 as ``(phi - 4)`` times its cofactor)."""
    J2, J4 = J(2), J(4)
    r2 = J2 / 12 + phi**2 / 4 - phi / 2
    r3 = (phi - 2) * (J2 + phi * (phi - 4)) / 8
    r4 = (
        30 * J2 * phi**2
        - 180 * J2 * phi
        + 5 * J2**2
        + 220 * J2
        - 2 * J4
        + 15 * phi**4
        - 180 * phi**3
        + 660 * phi**2
        - 720 * phi
    ) / 240
    r5_cofactor = (
        3 * phi**4
        - 48 * phi**3
        + 10 * J2 * phi**2
        + 228 * phi**2
        - 80 * J2 * phi
        - 288 * phi
        + 5 * J2**2
        + 100 * J2
        - 2 * J4
    ) / 96
    return {2: r2, 3: r3, 4: r4, 5: (phi - 4) * r5_cofactor}


def corollary_fixtures(rt: RatioTable | None = None) -> bool:
    rt = rt if rt is not None and rt.max_order >= 5 else ratio_table(5)
    return all(rt[l] == poly for l, poly in corollary_polys().items())


def omegas(t: Callable[[int], object]) -> list:
    """Lehmer's four correction terms, generic over the ring of ``t(r)`` values."""
    t2, t4, t6, t8 = t(2), t(4), t(6), t(8)
    F = Fraction
    om1 = t2
    om2 = t4 - 5 * falling(t2, 2)
    om3 = t6 - 7 * t4 * (t2 - 1) + F(35, 3) * falling(t2, 3) + F(14, 3) * t2
    om4 = (
        t8
        - F(20, 3) * t6 * (t2 - 1)
        - F(7, 3) * falling(t4, 2)
        + F(70, 3) * t4 * falling(t2 - 1, 2)
        - F(175, 9) * falling(t2, 4)
        + F(10, 3) * t6
        - F(280, 9) * falling(t2, 2)
        + F(290, 9) * t2
    )
    return [om1, om2, om3, om4]


def omega_set() -> list[JPoly]:
    """``Omega_1..Omega_4`` as Jordan polynomials via ``t_r = J_r / (2r)``."""
    return omegas(lambda r: J(r) / (2 * r))


def _lehmer_sum(h: int, t1, om: list):
    total = falling(t1, h)
    for l in range(1, 5):
        c = math.comb(h, 2 * l) if 2 * l <= h else 0
        if c:
            total = total + 2 * bernoulli(2 * l) * c * falling(t1 - l, h - 2 * l) * om[l - 1]
    return total


def lehmer_rhs(n: int, h: int) -> Fraction:
    if not 0 <= h <= 9:
        raise ValueError("the printed correction terms cover 0 <= h <= 9 only")
    tv = lambda r: Fraction(jordan(r, n), 2 * r)  # noqa: E731
    return Fraction(_lehmer_sum(h, tv(1), omegas(tv)))


def lehmer_rhs_symbolic(h: int) -> JPoly:
    if not 0 <= h <= 9:
        raise ValueError("the printed correction terms cover 0 <= h <= 9 only")
    return JPoly.const(0) + _lehmer_sum(h, phi / 2, omega_set())


@dataclass(frozen=True)
class LehmerResult:
    lhs_derivative: Fraction
    lhs_b: Fraction
    rhs: Fraction

    @property
    def matched_normalization(self) -> str:
        if self.rhs == self.lhs_derivative:
            return "derivative_ratio"
        if self.rhs == self.lhs_b:
            return "b_ratio"
        return "neither"


def lehmer_check(n: int, h: int) -> LehmerResult:
    """Compare the expansion against ``Phi_n^(h)(1)/Phi_n(1)`` and ``b_n(h)/Phi_n(1)``."""
    from .cyclotomic import deriv_at_one

    if n < 2:
        raise ValueError("n must be at least 2")
    value_at_one = deriv_at_one(n, 0)
    dh = deriv_at_one(n, h)
    return LehmerResult(
        Fraction(dh, value_at_one),
        Fraction(dh // math.factorial(h), value_at_one),
        lehmer_rhs(n, h),
    )
