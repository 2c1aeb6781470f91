"""Exact dense univariate polynomials and truncated power series.

:class:`ExactPoly` holds integer or :class:`~fractions.Fraction`
coefficients, lowest degree first. The same class doubles as a polynomial in
the formal symbol ``d`` (:data:`DPoly`), and :class:`DSeries` is a truncated
power series in ``t`` whose coefficients are ``DPoly`` values.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import accumulate
from math import factorial
from typing import Iterable, Sequence

__all__ = [
    "NonExactDivision",
    "NonUnitLeadingTerm",
    "ExactPoly",
    "DPoly",
    "DSeries",
    "poly_mul",
    "poly_exact_div",
    "derivative",
    "taylor_shift",
    "inflate",
    "eval_rat",
    "eval_float",
    "dseries_mul",
    "dseries_div",
    "binom_poly",
]


class NonExactDivision(ArithmeticError):
    """Polynomial division left a nonzero remainder (or needed a non-integer quotient)."""


class NonUnitLeadingTerm(ArithmeticError):
    """Series division by a series whose constant term is not a nonzero rational."""


def _is_int(c) -> bool:
    return isinstance(c, int) or (isinstance(c, Fraction) and c.denominator == 1)


class ExactPoly:
    """Immutable dense polynomial; ``coeffs[h]`` is the coefficient of ``x^h``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple = tuple(cs)

    @classmethod
    def x(cls) -> "ExactPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "ExactPoly":
        return cls([0] * degree + [coeff])

    @classmethod
    def const(cls, c) -> "ExactPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(_is_int(c) for c in self.coeffs)

    def is_monic(self) -> bool:
        return self.leading == 1

    def is_self_reciprocal(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __getitem__(self, h: int):
        if 0 <= h < len(self.coeffs):
            return self.coeffs[h]
        return 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, ExactPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == ExactPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"ExactPoly({list(self.coeffs)!r})"

    def __str__(self):
        return self.format()

    def format(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for h in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[h]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if h == 0:
                body = str(mag)
            else:
                mono = var if h == 1 else f"{var}^{h}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __neg__(self):
        return ExactPoly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ExactPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ExactPoly(c * other for c in self.coeffs)
        if isinstance(other, ExactPoly):
            return poly_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = ExactPoly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __floordiv__(self, other):
        return poly_exact_div(self, _as_poly(other))

    def __call__(self, x):
        if isinstance(x, float):
            return eval_float(self, x)
        return eval_rat(self, x)


DPoly = ExactPoly


def _as_poly(obj):
    if isinstance(obj, ExactPoly):
        return obj
    if isinstance(obj, (int, Fraction)):
        return ExactPoly((obj,))
    return NotImplemented


def poly_mul(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    """Exact convolution product; zero coefficients of either factor are skipped."""
    if a.is_zero() or b.is_zero():
        return ExactPoly()
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    bnz = [(j, c) for j, c in enumerate(b.coeffs) if c != 0]
    for i, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        for j, cb in bnz:
            out[i + j] += ca * cb
    return ExactPoly(out)


def poly_exact_div(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    """Quotient ``q`` with ``a == q * b`` exactly.

    Polynomials with ``int`` coefficients stay integral: if a quotient
    coefficient would be a proper fraction, :class:`NonExactDivision` is raised instead of
    promoting to rationals. The divisor's nonzero terms are iterated
    sparsely, so dividing by ``x^d - 1`` costs ``O(deg a)``.
    """
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero():
        return ExactPoly()
    db = b.degree
    if a.degree < db:
        raise NonExactDivision(f"{a} is not divisible by {b}")
    integral = all(isinstance(c, int) for c in a.coeffs + b.coeffs)
    lead = b.leading
    rem = list(a.coeffs)
    lower = [(j, c) for j, c in enumerate(b.coeffs[:-1]) if c != 0]
    quot = [0] * (a.degree - db + 1)
    for i in range(len(quot) - 1, -1, -1):
        top = rem[i + db]
        if top == 0:
            continue
        if integral:
            qc, r = divmod(top, lead)
            if r:
                raise NonExactDivision(f"{a} is not divisible by {b} over the integers")
        else:
            qc = Fraction(top) / lead
        quot[i] = qc
        rem[i + db] = 0
        for j, c in lower:
            rem[i + j] -= qc * c
    if any(rem[:db]):
        raise NonExactDivision(f"{a} is not divisible by {b}")
    return ExactPoly(quot)


def derivative(f: ExactPoly, k: int = 1) -> ExactPoly:
    """k-fold formal derivative."""
    if k < 0:
        raise ValueError("derivative order must be non-negative")
    if k == 0:
        return f
    return ExactPoly(
        c * (factorial(h) // factorial(h - k))
        for h, c in enumerate(f.coeffs)
        if h >= k
    )


def taylor_shift(f: ExactPoly, c: int = 1, order: int | None = None) -> ExactPoly:
    """Return ``f(x + c)``, optionally truncated to terms of degree ``<= order``.

    Repeated synthetic division by ``x - c``: pass ``i`` finalizes the
    coefficient of ``x^i``, so a truncated shift stops after ``order + 1``
    passes. Each pass is a suffix scan done with ``itertools.accumulate``.
    """
    cs = list(f.coeffs)
    n = len(cs)
    if n <= 1 or c == 0:
        out = cs
    else:
        passes = n - 1 if order is None else min(n - 1, order + 1)
        if c == -1:
            def step(acc, v):
                return v - acc
        else:
            def step(acc, v):
                return v + c * acc
        for i in range(passes):
            tail = cs[:i - 1 if i else None:-1]
            scanned = list(accumulate(tail) if c == 1 else accumulate(tail, step))
            cs[i:] = scanned[::-1]
        out = cs
    if order is not None:
        out = out[: order + 1]
    return ExactPoly(out)


def inflate(f: ExactPoly, m: int) -> ExactPoly:
    """``f(x^m)``."""
    if m < 1:
        raise ValueError("inflation factor must be positive")
    out = [0] * (m * f.degree + 1) if f.coeffs else []
    for h, c in enumerate(f.coeffs):
        out[h * m] = c
    return ExactPoly(out)


def eval_rat(f: ExactPoly, x):
    """Horner evaluation in exact arithmetic (ints stay ints)."""
    acc = 0
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


def eval_float(f: ExactPoly, x: float) -> float:
    acc = 0.0
    for c in reversed(f.coeffs):
        acc = acc * x + float(c)
    return acc


class DSeries:
    """Power series ``sum_m coeffs[m] t^m`` truncated after ``t^order``.

    Coefficients are :data:`DPoly` values (polynomials over Q in ``d``).
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int):
        if order < 0:
            raise ValueError("series order must be non-negative")
        cs = [_as_poly(c) for c in list(coeffs)[: order + 1]]
        cs += [ExactPoly()] * (order + 1 - len(cs))
        self.order = order
        self.coeffs: tuple[ExactPoly, ...] = tuple(cs)

    def __getitem__(self, m: int) -> ExactPoly:
        return self.coeffs[m]

    def __eq__(self, other):
        if not isinstance(other, DSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        return f"DSeries({[str(c.format('d')) for c in self.coeffs]}, order={self.order})"

    def truncate(self, order: int) -> "DSeries":
        return DSeries(self.coeffs, min(order, self.order))

    def shift_down(self, k: int) -> "DSeries":
        """Divide by ``t^k``; the dropped low coefficients must be zero."""
        if any(not c.is_zero() for c in self.coeffs[:k]):
            raise NonExactDivision(f"series is not divisible by t^{k}")
        return DSeries(self.coeffs[k:], self.order - k)

    def map(self, fn) -> "DSeries":
        return DSeries([fn(c) for c in self.coeffs], self.order)

    def __mul__(self, other):
        return dseries_mul(self, other)

    def __truediv__(self, other):
        return dseries_div(self, other)


def dseries_mul(a: DSeries, b: DSeries) -> DSeries:
    order = min(a.order, b.order)
    out = []
    for m in range(order + 1):
        acc = ExactPoly()
        for i in range(m + 1):
            if a.coeffs[i].is_zero() or b.coeffs[m - i].is_zero():
                continue
            acc = acc + a.coeffs[i] * b.coeffs[m - i]
        out.append(acc)
    return DSeries(out, order)


def dseries_div(a: DSeries, b: DSeries) -> DSeries:
    """Quotient in ``Q[d][[t]]``; ``b[0]`` must be a nonzero rational constant."""
    lead = b.coeffs[0]
    if lead.degree != 0:
        raise NonUnitLeadingTerm(f"constant term {lead.format('d')} is not a unit of Q[d]")
    inv = Fraction(1) / Fraction(lead.coeffs[0])
    order = min(a.order, b.order)
    q: list[ExactPoly] = []
    for m in range(order + 1):
        acc = a.coeffs[m]
        for i in range(1, m + 1):
            if b.coeffs[i].is_zero() or q[m - i].is_zero():
                continue
            acc = acc - b.coeffs[i] * q[m - i]
        q.append(acc * inv)
    return DSeries(q, order)


def binom_poly(a: int, j: int) -> ExactPoly:
    """Coefficient of ``t^j`` in ``(1+t)^(d+a)`` as a polynomial in ``d``.

    That is ``(d+a)(d+a-1)...(d+a-j+1) / j!``.
    """
    if j < 0:
        raise ValueError("binomial index must be non-negative")
    num = ExactPoly((1,))
    for i in range(j):
        num = num * ExactPoly((a - i, 1))
    return num * Fraction(1, factorial(j))

