import pytest

from cyclocong.ntheory import carmichael, jordan
from cyclocong.verify import (
    check_positivity_range,
    check_prime_derivatives,
    check_scalar_identities,
    check_sign_change,
    check_theorem3,
    check_theorem3_selfrecip,
    check_trivial_congruence,
    nondivisibility_witness,
    trivial_modulus,
)

TABLE = {2: 24, 4: 240, 6: 504, 8: 480, 10: 264, 12: 65520, 14: 24, 16: 16320, 18: 28728, 20: 13200}


@pytest.mark.parametrize("k, M", sorted(TABLE.items()))
def test_trivial_modulus_table(k, M):
    assert trivial_modulus(k).M == M


@pytest.mark.parametrize("k", range(1, 22, 2))
def test_trivial_modulus_odd(k):
    assert trivial_modulus(k).M == 2


@pytest.mark.parametrize("k", range(1, 41))
def test_trivial_modulus_exact_level(k):
    tm = trivial_modulus(k)
    for p, e in tm.parts:
        assert k % carmichael(p**e) == 0
        assert k % carmichael(p ** (e + 1)) != 0


def test_trivial_modulus_is_gcd_of_prime_values():
    # M(k) is the gcd of q^k - 1 over large primes q
    from math import gcd

    from cyclocong.ntheory import primes_up_to

    for k in range(1, 21):
        g = 0
        for q in primes_up_to(3000)[k + 2 :]:
            g = gcd(g, q**k - 1)
        assert g == trivial_modulus(k).M


def test_trivial_congruence_examples():
    r = [x for x in check_trivial_congruence(3, 5) if x.params["n"] == 5][0]
    assert (r.dividend, r.modulus, r.passed) == (124, 2, True)
    r = [x for x in check_trivial_congruence(4, 7) if x.params["n"] == 7][0]
    assert (r.dividend, r.modulus, r.passed) == (2400, 240, True)


def test_trivial_congruence_k12():
    reports = check_trivial_congruence(12, 1000)
    assert len(reports) == 1000 - 13
    assert all(r.passed and r.modulus == 65520 for r in reports)


def test_trivial_congruence_rejects_small_k():
    with pytest.raises(ValueError):
        check_trivial_congruence(2, 10)


def test_witness_examples():
    # J_3(2) = 7 is already odd; starting past 2 gives J_3(3) = 26 = 2 mod 4
    assert nondivisibility_witness(3, 4, 2, 10) == 2
    assert nondivisibility_witness(3, 4, 3, 10) == 3
    assert jordan(3, 3) % 4 == 2
    n = nondivisibility_witness(5, 3, 2, 50)
    assert n is not None and jordan(5, n) % 3


def test_witness_tiny_budget_is_none():
    # J_2(7) = 48, so a budget covering only n = 7 finds nothing
    assert nondivisibility_witness(2, 48, 7, 0) is None
    assert nondivisibility_witness(2, 48, 7, 4) is not None


def test_witness_requires_larger_modulus():
    with pytest.raises(ValueError):
        nondivisibility_witness(4, 240, 2, 10)


def test_theorem3_examples():
    reports = check_theorem3([5, 15], k_max=3)
    r = [x for x in reports if x.params == {"n": 5, "k": 1} and x.claim_id == "odd_deriv.cubic"][0]
    assert (r.dividend, r.modulus) == (60, 2)
    strong = [x for x in reports if x.params["n"] == 15 and x.claim_id == "odd_deriv.cubic_strong"][0]
    assert strong.modulus == 6 and strong.passed
    assert all(r.passed for r in reports)


def test_theorem3_zero_modulus_edge():
    # phi(5) = 4 = 2k for k = 2: order 5 exceeds the degree
    r = [x for x in check_theorem3([5], k_max=2) if x.claim_id == "odd_deriv.higher"][0]
    assert (r.dividend, r.modulus, r.passed) == (0, 0, True)


def test_theorem3_rejects_small_kmax():
    with pytest.raises(ValueError):
        check_theorem3([5], k_max=1)


def test_theorem3_paths_agree():
    ns = range(3, 121)
    a = [(r.claim_id, r.params, r.dividend, r.modulus) for r in check_theorem3(ns)]
    b = [(r.claim_id, r.params, r.dividend, r.modulus) for r in check_theorem3_selfrecip(ns)]
    assert a == b


def test_positivity_and_identities_small():
    assert all(r.passed for r in check_positivity_range(range(2, 100)))
    assert all(r.passed for r in check_scalar_identities(range(2, 100)))


def test_prime_derivatives_report_top_order():
    reports = check_prime_derivatives(20)
    failing = sorted((r.params["p"], r.params["l"]) for r in reports if not r.passed)
    # only l = p - 1 breaks divisibility by p, since (p-1)! is a unit mod p
    assert failing == [(3, 2), (5, 4), (7, 6), (11, 10), (13, 12), (17, 16), (19, 18)]


def test_sign_change_small():
    reports = check_sign_change(30)
    assert [r.params["p"] for r in reports] == [3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert all(r.passed for r in reports)


def test_sign_change_forced_fallback():
    reports = check_sign_change(7, margin=1e9)
    assert all(r.passed and r.witness.startswith("exact") for r in reports)
