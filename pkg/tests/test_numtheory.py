import threading

import pytest

from specialsu.errors import DomainError
from specialsu.numtheory import (Residue, binomial, binomial_cache_info, catalan,
                                 catalan_congruence, divisors, euler_phi, is_prime, mobius,
                                 primes_up_to, set_binomial_cache_size, wilson_check)

import oracles


@pytest.mark.parametrize("n,expected", [(1, [1]), (12, [1, 2, 3, 4, 6, 12]), (7, [1, 7])])
def test_divisors_examples(n, expected):
    assert divisors(n) == expected


def test_divisors_match_trial_division():
    for n in range(1, 500):
        assert divisors(n) == oracles.trial_divisors(n)


@pytest.mark.parametrize("n,expected", [(1, 1), (12, 4), (13, 12), (97, 96)])
def test_euler_phi_examples(n, expected):
    assert euler_phi(n) == expected


@pytest.mark.parametrize("n,expected", [(1, 1), (6, 1), (12, 0), (30, -1)])
def test_mobius_examples(n, expected):
    assert mobius(n) == expected


def test_phi_and_mobius_match_brute_force():
    for n in range(1, 300):
        assert euler_phi(n) == oracles.phi(n)
        assert mobius(n) == oracles.mobius(n)


@pytest.mark.parametrize("fn", [divisors, euler_phi, mobius])
def test_zero_is_outside_domain(fn):
    with pytest.raises(DomainError):
        fn(0)


def test_totient_and_mobius_divisor_sums():
    for n in range(1, 10**4 + 1):
        ds = divisors(n)
        assert sum(euler_phi(d) for d in ds) == n
        assert sum(mobius(d) for d in ds) == (1 if n == 1 else 0)


def test_binomial_examples():
    assert binomial(8, 5) == 56
    assert binomial(12, 7) == 792
    assert binomial(9, 0) == 1
    assert binomial(3, 5) == 0
    with pytest.raises(DomainError):
        binomial(-1, 0)


def test_binomial_against_pascal_triangle():
    tri = oracles.pascal(200)
    for a in range(201):
        for b in range(a + 1):
            assert binomial(a, b) == tri[a][b]


def test_pascal_rule():
    for a in range(1, 201):
        for b in range(1, 201):
            assert binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b)


def test_binomial_beyond_64_bits():
    # C(2p-2, p) leaves 64-bit range around p = 34
    assert binomial(2 * 37 - 2, 37) > 2**64
    assert binomial(200, 100) == 90548514656103281165404177077484163874504589675413336841320


def test_binomial_cache_is_bounded_and_threadsafe():
    set_binomial_cache_size(64)
    try:
        errors = []

        def work(offset):
            for a in range(offset, offset + 300):
                b = a // 2
                if binomial(a, b) != binomial(a - 1, b - 1) + binomial(a - 1, b):
                    errors.append(a)

        threads = [threading.Thread(target=work, args=(k,)) for k in range(2, 6)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert errors == []
        assert binomial_cache_info().currsize <= 64
    finally:
        set_binomial_cache_size(10**6)


@pytest.mark.parametrize("k", range(0, 10))
def test_catalan_against_dyck_paths(k):
    assert catalan(k) == oracles.dyck_paths(k)


def test_catalan_examples():
    assert catalan(0) == 1
    assert catalan(4) == 14
    assert catalan(6) == 132
    assert catalan(10) == 16796


def test_catalan_integrality():
    for k in range(501):
        assert binomial(2 * k, k) % (k + 1) == 0


@pytest.mark.parametrize("p,expected", [(3, 2), (5, 4), (11, 10)])
def test_catalan_congruence_examples(p, expected):
    r = catalan_congruence(p)
    assert r == Residue(expected, p)
    assert r.value == p - 1


def test_catalan_congruence_and_wilson_for_primes_to_1000():
    for p in primes_up_to(1000):
        assert catalan_congruence(p).value == p - 1
        assert wilson_check(p).value == p - 1


@pytest.mark.parametrize("p,expected", [(2, 1), (5, 4), (7, 6)])
def test_wilson_examples(p, expected):
    assert wilson_check(p).value == expected


@pytest.mark.parametrize("fn", [catalan_congruence, wilson_check])
def test_composite_rejected(fn):
    with pytest.raises(DomainError):
        fn(9)


def test_primality_matches_sieve_and_is_bounded():
    sieve = set(primes_up_to(20000))
    assert all(is_prime(n) == (n in sieve) for n in range(20001))
    assert is_prime(2**61 - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7
    assert is_prime(2**64 - 59)
    with pytest.raises(DomainError):
        is_prime(2**64)


def test_residue_invariant():
    with pytest.raises(DomainError):
        Residue(5, 5)
    with pytest.raises(DomainError):
        Residue(-1, 5)
