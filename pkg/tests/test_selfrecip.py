import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cyclocong.cyclotomic import cyclotomic_poly, deriv_at_one
from cyclocong.ntheory import euler_phi
from cyclocong.polyx import ExactPoly, poly_mul
from cyclocong.selfrecip import (
    NotSelfReciprocal,
    OddDegree,
    TSeq,
    alpha_coeffs,
    b_from_a,
    check_recip_congruences,
    check_recip_identity,
    constant_example_check,
    expand_linear_product,
    expand_quadratic_product,
    g_from_f,
    random_self_reciprocal,
    reciprocal_pair,
    reexpand,
    stirling_example_check,
)

P = ExactPoly


def test_expand_quadratic_examples():
    a = Fraction(3, 7)
    assert expand_quadratic_product([a]) == [a, a, 1]
    assert expand_quadratic_product([1, 1]) == [1, 2, 3, 2, 1]
    # (x^2 - x - 1)(x^2 - 2x - 2)
    assert expand_quadratic_product([-1, -2]) == [2, 4, -1, -3, 1]


def test_expand_linear_examples():
    assert expand_linear_product([5]) == [5, 1]
    assert expand_linear_product([1, 1]) == [1, 2, 1]
    assert expand_linear_product([1, 2, 3]) == [6, 11, 6, 1]


def test_b_from_a_examples():
    assert b_from_a([4, 1], 1) == [4, 4, 1]
    assert b_from_a([5, 5, 1], 2) == [5, 10, 10, 5, 1]
    with pytest.raises(ValueError):
        b_from_a([1, 2, 3], 1)


tseqs = st.lists(
    st.builds(Fraction, st.integers(-50, 50), st.integers(1, 12)), min_size=1, max_size=12
)


@settings(max_examples=150, deadline=None)
@given(tseqs)
def test_product_identity(t):
    assert b_from_a(expand_linear_product(t), len(t)) == expand_quadratic_product(t)


@pytest.mark.parametrize("a", range(-3, 4))
@pytest.mark.parametrize("q", range(1, 9))
def test_constant_example(a, q):
    assert constant_example_check(a, q)


@pytest.mark.parametrize("q", range(1, 9))
@pytest.mark.parametrize("sign", [1, -1])
def test_stirling_example(q, sign):
    assert stirling_example_check(q, sign)


def test_stirling_small_cases():
    # q = 1, t = -1: x^2 - x - 1, s(2, 1) = -1, s(2, 2) = 1
    assert expand_quadratic_product([-1]) == b_from_a([-1, 1], 1)
    # q = 2, t = (1, 2): |s(3, l + 1)| = (2, 3, 1)
    assert expand_linear_product([1, 2]) == [2, 3, 1]
    assert expand_quadratic_product([1, 2]) == b_from_a([2, 3, 1], 2)


def test_g_from_f_examples():
    assert g_from_f(cyclotomic_poly(5)) == P([-1, 1, 1])
    assert g_from_f(cyclotomic_poly(6)) == P([-1, 1])
    assert g_from_f(P([1, 0, 1])) == P([0, 1])


def test_g_from_f_errors():
    with pytest.raises(OddDegree):
        g_from_f(P([1, 1]))
    with pytest.raises(NotSelfReciprocal):
        g_from_f(P([1, 2, 3]))


def test_alpha_examples():
    assert alpha_coeffs(P([-1, 1, 1])) == [5, 5, 1]
    assert alpha_coeffs(P([-1, 1])) == [1, 1]
    assert alpha_coeffs(P([0, 1])) == [2, 1]


def test_g_roundtrip_cyclotomic():
    for n in range(3, 501):
        f = cyclotomic_poly(n)
        g = g_from_f(f)
        assert g.degree == euler_phi(n) // 2
        assert reexpand(g) == f


def test_g_is_min_poly_of_2cos():
    import math

    for n in (5, 7, 12, 15):
        g = g_from_f(cyclotomic_poly(n))
        assert abs(g(2 * math.cos(2 * math.pi / n))) < 1e-9


@pytest.mark.parametrize("f", [cyclotomic_poly(5), cyclotomic_poly(12), poly_mul(P([1, 3, 1]), P([1, 1, 1]))])
def test_recip_identity_examples(f):
    assert check_recip_identity(f)


def test_pair_invariants():
    rng = random.Random(7)
    for _ in range(50):
        pair = reciprocal_pair(random_self_reciprocal(rng))
        assert pair.beta[-1] == pair.alpha[-1]
        assert len(pair.beta) == 2 * pair.q + 1


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-50, 50), min_size=1, max_size=12), st.integers(-50, 50).filter(bool))
def test_recip_identity_random(half, end):
    cs = [end] + half
    f = P(cs + cs[:-1][::-1])
    assert check_recip_identity(f)
    assert all(r.passed for r in check_recip_congruences(f))


def test_recip_congruences_phi5():
    reports = check_recip_congruences(cyclotomic_poly(5))
    cubic = [r for r in reports if r.claim_id == "odd_deriv.cubic"][0]
    strong = [r for r in reports if r.claim_id == "odd_deriv.cubic_strong"][0]
    assert (cubic.dividend, cubic.modulus) == (60, 2)
    assert (strong.dividend, strong.modulus) == (30, 2)
    assert all(r.passed for r in reports)


def test_recip_congruences_zero_dividend_past_degree():
    reports = check_recip_congruences(P([1, 0, 1]), k_max=4)
    high = [r for r in reports if r.claim_id == "odd_deriv.higher"]
    assert all(r.dividend == 0 and r.passed for r in high)


def test_recip_derivatives_match_direct():
    for n in (7, 13, 60, 105):
        reports = check_recip_congruences(cyclotomic_poly(n), k_max=6)
        for r in reports:
            k = r.params["k"]
            if r.claim_id == "odd_deriv.cubic":
                assert r.dividend == 2 * deriv_at_one(n, 3)
            elif r.claim_id == "odd_deriv.higher":
                assert r.dividend == deriv_at_one(n, 2 * k + 1)


def test_random_degree20_all_pass():
    rng = random.Random(2024)
    for _ in range(30):
        half = [rng.randint(-50, 50) for _ in range(10)] + [rng.randint(1, 50)]
        half[0] = half[0] or 1
        f = P(half[:-1] + [half[-1]] + half[:-1][::-1])
        assert f.degree == 20
        assert all(r.passed for r in check_recip_congruences(f, k_max=9))


def test_tseq_requires_entries():
    with pytest.raises(ValueError):
        TSeq([])
