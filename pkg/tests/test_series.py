from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from specialsu.counting import count_special_formula
from specialsu.errors import DomainError
from specialsu.series import SeriesPoly, coefficient, expand_G, geometric_pow

import oracles


def ints(s):
    return [int(c) for c in s.coefficients]


@pytest.mark.parametrize("d,e,N,expected", [
    (1, 1, 3, [1, 1, 1, 1]),
    (2, 3, 4, [1, 0, 3, 0, 6]),
    (3, 1, 5, [1, 0, 0, 1, 0, 0]),
])
def test_geometric_pow(d, e, N, expected):
    assert ints(geometric_pow(d, e, N)) == expected


def test_geometric_pow_is_power_of_geometric_series():
    base = geometric_pow(2, 1, 12)
    prod = base * base * base * base
    assert prod == geometric_pow(2, 4, 12)


def test_expand_G_trivial_modulus():
    assert ints(expand_G(1, 6)) == [1, 0, 0, 0, 0, 0, 0]


def test_expand_G_examples():
    assert coefficient(expand_G(5, 10), 5) == 12
    assert coefficient(expand_G(7, 7), 7) == 114
    assert coefficient(expand_G(3, 10), 4) == count_special_formula(4, 3)


def test_expand_G_matches_brute_force_counts():
    for m in range(1, 8):
        G = expand_G(m, 7)
        for n in range(1, 8):
            assert coefficient(G, n) == len(oracles.multisets(n, m, True))


def test_expand_G_coefficient_identity_and_integrality():
    for m in range(1, 13):
        G = expand_G(m, 40)
        for n, c in enumerate(G.coefficients):
            assert c.denominator == 1 and c >= 0
            if n >= 1:
                assert c == count_special_formula(n, m)
        assert coefficient(G, 1) == 0


def test_coefficient_range():
    G = expand_G(3, 4)
    with pytest.raises(IndexError):
        coefficient(G, 5)


def test_bad_arguments():
    with pytest.raises(DomainError):
        geometric_pow(0, 1, 3)
    with pytest.raises(DomainError):
        expand_G(0, 3)


def test_truncation_order_is_the_smaller_one():
    a = SeriesPoly([1, 2, 3])
    b = SeriesPoly([1, 1, 1, 1, 1])
    assert (a * b).order == 2
    assert (a + b).order == 2
    assert (a * b).coefficients == (1, 3, 6)


def test_rationals_stay_reduced():
    s = SeriesPoly([Fraction(2, 4), Fraction(3, 9)])
    assert s.coefficients == (Fraction(1, 2), Fraction(1, 3))
    assert (s * 6).coefficients == (3, 2)


fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
series = st.lists(fractions, min_size=6, max_size=6).map(SeriesPoly)


@settings(max_examples=60, deadline=None)
@given(series, series, series)
def test_multiplication_commutative_and_associative(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
