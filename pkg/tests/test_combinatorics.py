import itertools
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from rsweight.combinatorics import (
    A_m,
    CycleType,
    QuadExtValue,
    cycle_index_average,
    cycle_types,
    egf_cycle_series,
    gen_binomial,
    inverse_sieve,
    liwan_sieve,
    sieve_N_from_M,
)

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def test_quad_normalizes_perfect_squares():
    v = QuadExtValue(1, 2, 9)
    assert v.is_rational() and v.rat == 7 and v.radicand == 1


def test_quad_ring_ops():
    s = QuadExtValue.sqrt(3)
    assert s * s == 3
    x = QuadExtValue(1, 2, 3) * QuadExtValue(Fraction(1, 2), -1, 3)
    assert (x.rat, x.irr) == (Fraction(1, 2) - 6, Fraction(-1) + 1)
    assert (QuadExtValue(2, 1, 5) / QuadExtValue(2, 1, 5)) == 1
    assert (1 / s) * s == 1
    with pytest.raises(ValueError):
        QuadExtValue.sqrt(2) + QuadExtValue.sqrt(3)


@given(fractions, fractions)
def test_quad_sign_matches_float(a, b):
    v = QuadExtValue(a, b, 3)
    f = float(a) + float(b) * 3**0.5
    if abs(f) > 1e-9:
        assert v.sign() == (1 if f > 0 else -1)
    assert (v - v).sign() == 0


def test_quad_sign_exact_tie():
    # 2 - sqrt(4) folds to 0; 3 - sqrt(9) too; a genuine near-tie stays nonzero
    assert QuadExtValue(-2, 1, 4).sign() == 0
    assert QuadExtValue(Fraction(-1732, 1000), 1, 3).sign() == 1


def test_quad_json_round_trip():
    v = QuadExtValue(Fraction(-7, 2), Fraction(9, 4), 3)
    assert QuadExtValue.from_json(v.to_json()) == v


def test_gen_binomial_examples():
    assert gen_binomial(Fraction(5, 7), 0) == 1
    assert gen_binomial(Fraction(1, 2), 2) == Fraction(-1, 8)
    for n in range(1, 6):
        for m in range(6):
            assert gen_binomial(-n, m) == (-1) ** m * comb(n + m - 1, m)
    assert gen_binomial(3, -1) == 0


@pytest.mark.parametrize("p", [3, 5])
def test_A_specializations(p):
    for u in range(-9, -1):
        for m in range(11):
            assert A_m(m, u, 1, p) == (-1) ** m * gen_binomial(-u, m)
            want = (-1) ** (m // p) * gen_binomial(Fraction(-u, p), m // p) if m % p == 0 else 0
            assert A_m(m, u, 0, p) == want
    assert A_m(2, -3, 1, p) == comb(3, 2)
    assert A_m(p, -3, 0, p) == Fraction(-3, p)


def _perm_cycle_lengths(perm):
    seen, out = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        out.append(length)
    return out


@pytest.mark.parametrize("m", range(1, 7))
def test_cycle_types_against_permutations(m):
    counts = {}
    for perm in itertools.permutations(range(m)):
        key = tuple(sorted(_perm_cycle_lengths(perm), reverse=True))
        counts[key] = counts.get(key, 0) + 1
    assert {ct.parts: ct.multiplicity for ct in cycle_types(m)} == counts
    assert sum(ct.multiplicity for ct in cycle_types(m)) == factorial(m)


def test_cycle_type_fields():
    ct = CycleType((3, 3, 2, 1))
    assert ct.size == 9 and ct.num_cycles == 4
    assert ct.num_cycles_coprime(3) == 2 and ct.lengths_coprime(3) == (2, 1)


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("u,w", [(Fraction(-3), Fraction(1, 3)), (Fraction(2, 5), Fraction(-7, 2)),
                                 (Fraction(-9), Fraction(0)), (Fraction(4), Fraction(1))])
def test_cycle_index_and_series_match_A(p, u, w):
    series = egf_cycle_series(u, w, p, 7)
    for m in range(8):
        a = A_m(m, u, w, p)
        assert cycle_index_average(m, u, w, p) == a
        assert series[m] == a


def test_A_with_sqrt_argument():
    w = 1 / QuadExtValue.sqrt(3)
    for m in range(6):
        assert cycle_index_average(m, -3, w, 3) == A_m(m, -3, w, 3) == egf_cycle_series(-3, w, 3, 5)[m]


@given(st.integers(0, 8), st.integers(-9, 9), st.integers(-6, 6).filter(bool))
def test_A_absolute_bound(m, u, vden):
    v = Fraction(1, vden)
    assert abs(QuadExtValue.coerce(A_m(m, u, v, 3))) <= A_m(m, abs(u), abs(v), 3)


def test_sieve_examples():
    assert sieve_N_from_M([0] * 5) == [0] * 5
    for s in range(5):
        M = [comb(s, j) for j in range(5)]
        assert sieve_N_from_M(M) == [int(r == s) for r in range(5)]
        assert inverse_sieve([int(r == s) for r in range(5)]) == M
    assert inverse_sieve([0] * 3) == [0] * 3


@given(st.lists(st.integers(-10**6, 10**6), max_size=12))
def test_sieve_round_trip(vec):
    assert sieve_N_from_M(inverse_sieve(vec)) == vec
    assert inverse_sieve(sieve_N_from_M(vec)) == vec


def test_liwan_examples():
    for n in range(6):
        for m in range(1, 6):
            falling = factorial(n) // factorial(n - m) if m <= n else 0
            assert liwan_sieve(lambda ct: n ** ct.num_cycles, m) == falling
    assert liwan_sieve(lambda ct: 17 if ct.parts == (1,) else 0, 1) == 17
