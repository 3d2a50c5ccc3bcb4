import itertools

import pytest
from hypothesis import given, strategies as st

from rsweight.errors import PreconditionError
from rsweight.field import (
    FieldSpec,
    build_domain,
    build_field,
    domain_from_json,
    field_from_json,
    is_irreducible_gfp,
    smallest_irreducible,
)


def brute_smallest_irreducible(p, a):
    """Smallest monic irreducible by root-free / factor-free search on small degrees."""
    best = None
    for low in itertools.product(range(p), repeat=a):
        poly = tuple(low) + (1,)
        key = tuple(reversed(poly))
        if is_irreducible_gfp(poly, p) and (best is None or key < best[0]):
            best = (key, poly)
    return best[1]


@pytest.mark.parametrize("p,a,expected", [
    (3, 1, (0, 1)),
    (3, 2, (1, 0, 1)),
    (2, 2, (1, 1, 1)),
    (2, 3, (1, 1, 0, 1)),
])
def test_modulus_is_smallest_irreducible(p, a, expected):
    assert build_field(p, a).modulus == expected
    assert smallest_irreducible(p, a) == brute_smallest_irreducible(p, a)


def test_gf8_cardinality():
    F = build_field(2, 3)
    assert F.q == 8 and list(F.elements()) == list(range(8))


def test_bad_parameters():
    with pytest.raises(PreconditionError):
        build_field(4, 1)
    with pytest.raises(PreconditionError):
        build_field(2, 21)
    with pytest.raises(PreconditionError):
        FieldSpec(3, 2, (0, 0, 1))


def test_prime_field_arithmetic(gf3):
    assert gf3.add(2, 2) == 1
    assert gf3.mul(2, 2) == 1
    assert gf3.sub(0, 1) == 2


@pytest.mark.parametrize("p,a", [(3, 1), (2, 2), (5, 1), (2, 3), (3, 2), (7, 1)])
def test_field_axioms(p, a):
    F = build_field(p, a)
    for x in range(1, F.q):
        assert F.mul(x, F.inv(x)) == 1
        assert F.pow(x, F.q) == x
    for x, y in itertools.product(range(F.q), repeat=2):
        assert F.add(F.sub(x, y), y) == x
        assert F.mul(x, y) == F.mul(y, x)


def test_inverse_of_zero(gf9):
    with pytest.raises(ZeroDivisionError):
        gf9.inv(0)


@given(st.integers(0, 80), st.integers(0, 80), st.integers(0, 80))
def test_distributive_gf81(x, y, z):
    F = build_field(3, 4)
    assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))


@given(st.integers(1, 80), st.integers(0, 10**30))
def test_pow_big_exponent(x, e):
    # the multiplicative group has order 80
    F = build_field(3, 4)
    assert F.pow(x, e) == F.pow(x, e % 80)


def test_index_round_trip(gf81):
    for x in range(gf81.q):
        assert gf81.from_coeffs(gf81.coeffs(x)) == x
    assert gf81.coeffs(1) == (1, 0, 0, 0)


def test_element_wrapper(gf9):
    x = gf9.element(4)
    assert int(x * x.inverse()) == 1
    assert int(x + x + x) == 0
    assert int(x**9) == 4


def test_quadratic_character_small(gf3, gf9):
    assert gf3.quadratic_character(1) == 1
    assert gf3.quadratic_character(2) == -1
    assert gf3.quadratic_character(0) == 0
    for c in (1, 2):
        assert gf9.quadratic_character(c) == 1
    with pytest.raises(PreconditionError):
        build_field(2, 2).quadratic_character(1)


@pytest.mark.parametrize("p,a", [(3, 1), (5, 1), (7, 1), (3, 2), (3, 3), (5, 2), (3, 4)])
def test_quadratic_character_balance_and_multiplicativity(p, a):
    F = build_field(p, a)
    vals = [F.quadratic_character(x) for x in range(1, F.q)]
    assert vals.count(1) == vals.count(-1) == (F.q - 1) // 2
    squares = {F.mul(x, x) for x in range(1, F.q)}
    assert all((v == 1) == (x in squares) for x, v in zip(range(1, F.q), vals))
    for x in range(1, F.q, 3):
        for y in range(1, F.q, 2):
            assert F.quadratic_character(F.mul(x, y)) == F.quadratic_character(x) * F.quadratic_character(y)


def test_character_over_subfield(gf81):
    # inside GF(81) every element of GF(9) is a square; over GF(9) half are not
    sub = gf81.subfield_elements(9)
    assert all(gf81.quadratic_character(x) == 1 for x in sub if x)
    vals = [gf81.quadratic_character(x, 9) for x in sub if x]
    assert vals.count(-1) == 4


def test_domains(gf9, gf4):
    D = build_domain(gf9, "subfield", 3)
    assert D.n == 3 and all(gf9.pow(x, 3) == x for x in D.elements)
    P = build_domain(gf9, "punctured", [1])
    assert P.elements == (1, 2) and P.n == 2
    G = build_domain(gf4, "subgroup", [1])
    assert G.elements == (0, 1)
    with pytest.raises(PreconditionError):
        build_domain(gf9, "subfield", 27)
    with pytest.raises(PreconditionError):
        build_domain(gf9, "explicit", [1, 1])


def test_subfield_closure(gf81):
    for n in (3, 9):
        S = set(gf81.subfield_elements(n))
        assert len(S) == n
        for x, y in itertools.product(S, repeat=2):
            assert gf81.add(x, y) in S and gf81.mul(x, y) in S and gf81.neg(x) in S
            if y:
                assert gf81.div(x, y) in S


def test_json_round_trip(gf9):
    assert field_from_json(gf9.to_json()) == gf9
    for kind, val in [("full", None), ("subfield", 3), ("punctured", [1]), ("explicit", [5, 2, 7])]:
        D = build_domain(gf9, kind, val)
        assert domain_from_json(gf9, D.to_json()) == D
