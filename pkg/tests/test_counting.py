import itertools
from fractions import Fraction
from math import comb

import pytest

from rsweight import build_domain, build_field
from rsweight.combinatorics import QuadExtValue, sieve_N_from_M
from rsweight.counting import (
    DISPLAY_FORMS,
    CountQuery,
    N_vector,
    R_m_formula,
    U_m,
    Ubar_m,
    Ubar_m_sieve,
    Vbar_m,
    Wbar_m,
    baseline_term,
    corollary_display,
    eq12_N,
    error_comparison,
    monic_root_count,
    select_engine,
    series_M_vector,
    series_N,
    theorem1_M,
    theorem1_N,
    theorem2_N,
    theorem3_N,
    theorem4_N,
    theorem4_display,
    theorem5_estimate,
)
from rsweight.errors import BudgetExceeded, PreconditionError
from rsweight.oracle import count_U, count_Ubar, count_Vbar, count_Vsystem, count_Wbar, oracle_M_vector

# oracle enumerations, recorded once
FROZEN = [
    ((3, 2), ("full", None), 2, (1, 2), [27, 34, 15, 3, 2]),
    ((3, 2), ("subfield", 3), 2, (4,), [57, 21, 3, 0]),
    ((3, 2), ("punctured", [1]), 3, (0,), [576, 144, 9, 0, 0]),
    ((3, 4), ("subfield", 9), 2, (0, 1), [5859, 682, 15, 3, 2]),
    ((3, 4), ("subfield", 9), 1, (0, 0), [72, 9, 0, 0]),
    ((5, 1), ("explicit", [0, 2, 3]), 2, (1, 4), [13, 9, 3, 0, 0]),
]


def _query(field, dom, k, gammas, r=0):
    F = build_field(*field)
    return CountQuery(F, build_domain(F, *dom), k, tuple(gammas), r)


@pytest.mark.parametrize("field,dom,k,gammas,expected", FROZEN)
def test_frozen_vectors(field, dom, k, gammas, expected):
    q = _query(field, dom, k, gammas)
    assert N_vector(theorem1_N, q) == expected
    assert N_vector(series_N, q) == expected
    engine = select_engine(q)
    if engine.startswith("theorem") and engine != "theorem1":
        from rsweight.counting import EXACT_ENGINES
        assert N_vector(EXACT_ENGINES[engine], q) == expected


def test_monic_root_count():
    for q in (3, 4, 5):
        for r in range(5):
            assert monic_root_count(q, r, r) == comb(q, r)
        for k in range(5):
            assert sum(monic_root_count(q, k, r) for r in range(k + 1)) == q**k
    assert baseline_term(3, 3, 1, 2) == 0


def test_theorem1_M_examples(gf3, full3):
    for g in range(3):
        q = CountQuery(gf3, full3, 1, (g,))
        vec = [theorem1_M(q.with_r(r)) for r in range(3)]
        assert vec == oracle_M_vector(gf3, full3, 1, (g,))
        assert vec[0] == 3
        assert sieve_N_from_M(vec) == N_vector(theorem1_N, q)
    assert theorem1_M(CountQuery(gf3, full3, 1, (0,), 5)) == 0


def test_theorem1_budget(gf9):
    D = build_domain(gf9, "full")
    with pytest.raises(BudgetExceeded):
        theorem1_N(CountQuery(gf9, D, 5, (1, 1), 0), budget=1000)


def test_theorem2_hand_cell(gf3, full3):
    assert N_vector(theorem2_N, CountQuery(gf3, full3, 1, (0,))) == [1, 1, 1]


def test_theorem2_refuses(gf9):
    with pytest.raises(PreconditionError):
        theorem2_N(CountQuery(gf9, build_domain(gf9, "punctured", [1]), 1, (0,)))
    with pytest.raises(PreconditionError):
        theorem2_N(CountQuery(gf9, build_domain(gf9, "full"), 1, (0, 0)))


def test_theorem3_gamma_outside():
    q = _query((3, 2), ("punctured", [1]), 2, (4,))
    assert [theorem3_N(q.with_r(r)) for r in range(4)] == [
        int(baseline_term(9, 2, 2, r)) for r in range(4)]


def test_U_examples(gf9):
    sub = build_domain(gf9, "subfield", 3)
    punct = build_domain(gf9, "punctured", [1])
    assert U_m(2, 1, gf9, sub) == 3
    assert U_m(2, 0, gf9, punct) == 2 == count_U(gf9, punct, 2, 0)
    for g in range(9):
        assert U_m(1, g, gf9, sub) == int(g in sub)
        for m in range(5):
            for D in (sub, punct):
                assert U_m(m, g, gf9, D) == count_U(gf9, D, m, g)


def test_Ubar_examples(gf3, full3, gf9):
    assert Ubar_m(3, 0, gf3, full3) == 6 == count_Ubar(gf3, full3, 3, 0)
    assert Ubar_m(1, 2, gf3, full3) == 1
    assert Ubar_m(4, 0, gf3, full3) == 0
    punct = build_domain(gf9, "punctured", [1])
    for D in (full3,):
        for m in range(6):
            for g in range(3):
                assert Ubar_m(m, g, gf3, D) == Ubar_m_sieve(m, g, gf3, D) == count_Ubar(gf3, D, m, g)
    for m in range(4):
        for g in range(9):
            assert Ubar_m(m, g, gf9, punct) == Ubar_m_sieve(m, g, gf9, punct) == count_Ubar(gf9, punct, m, g)


def test_eq12_assembly(gf9):
    D = build_domain(gf9, "subfield", 3)
    for k in range(3):
        for g in range(9):
            q = CountQuery(gf9, D, k, (g,))
            ubar = count_Ubar(gf9, D, k + 1, g)
            assert [eq12_N(q.with_r(r), ubar) for r in range(k + 2)] == N_vector(theorem1_N, q)


def test_R_m_formula_against_enumeration(gf9):
    D = build_domain(gf9, "full")
    for avec in [(1, 1), (1, 2), (2, 2, 2), (1, 1, 1), (1, 2, 1, 1)]:
        m = len(avec)
        for a0, b0 in itertools.product(range(0, 9, 2), range(9)):
            brute = count_Vsystem(gf9, D, avec, a0, b0)
            assert brute - Fraction(9) ** (m - 2) == R_m_formula(gf9, D, avec, a0, b0)


def test_R_m_refusals(gf9, gf3, full3):
    with pytest.raises(PreconditionError):
        R_m_formula(gf3, full3, (1, 1), 0, 0)
    with pytest.raises(PreconditionError):
        R_m_formula(gf9, build_domain(gf9, "full"), (3, 1), 0, 0)


def test_V_system_b0_outside_D(gf9):
    D = build_domain(gf9, "subfield", 3)
    outside = next(x for x in range(9) if x not in D)
    assert count_Vsystem(gf9, D, (1, 1, 2), 0, outside) == 0


@pytest.mark.parametrize("m", range(1, 5))
def test_Vbar_Wbar_small(gf9, m):
    D = build_domain(gf9, "full")
    for g1, g2 in itertools.product(range(9), repeat=2):
        assert Vbar_m(m, g1, g2, gf9, D) == count_Vbar(gf9, D, m, g1, g2)
        assert Wbar_m(m, g1, g2, gf9, D) == count_Wbar(gf9, D, m, g1, g2)


def test_Vbar_beyond_n(gf9):
    D = build_domain(gf9, "full")
    assert Vbar_m(10, 0, 0, gf9, D) == 0


def test_theorem4_refusals(gf4, gf9):
    with pytest.raises(PreconditionError, match="odd characteristic"):
        theorem4_N(CountQuery(gf4, build_domain(gf4, "full"), 1, (0, 1)))
    with pytest.raises(PreconditionError):
        theorem4_N(CountQuery(gf9, build_domain(gf9, "subfield", 3), 1, (0, 1)))
    with pytest.raises(PreconditionError):
        theorem4_N(CountQuery(gf9, build_domain(gf9, "full"), 1, (0,)))


def test_theorem4_partition(gf9):
    D = build_domain(gf9, "full")
    for k in range(4):
        for g in [(0, 0), (1, 1), (4, 7)]:
            assert sum(N_vector(theorem4_N, CountQuery(gf9, D, k, g))) == 9**k


def test_display_forms(gf9):
    """The corrected display equals the assembled value on the p !| (k+2) branch
    (k = 0, 2 at p = 3); the verbatim one does not."""
    D = build_domain(gf9, "full")
    mismatched_printed = 0
    for k in (0, 2):
        for g in itertools.product(range(9), repeat=2):
            q = CountQuery(gf9, D, k, g)
            want = N_vector(theorem4_N, q)
            assert [theorem4_display(q.with_r(r), "typo_fixed") for r in range(k + 3)] == want
            assert [theorem4_display(q.with_r(r), "repaired") for r in range(k + 3)] == want
            mismatched_printed += [theorem4_display(q.with_r(r), "printed") for r in range(k + 3)] != want
    assert mismatched_printed > 0
    with pytest.raises(ValueError):
        theorem4_display(CountQuery(gf9, D, 0, (0, 0)), "other")
    assert set(DISPLAY_FORMS) == {"printed", "typo_fixed", "repaired"}


def test_repaired_display_on_divisible_branch(gf9):
    D = build_domain(gf9, "full")
    k = 1  # p = 3 divides k + 2
    for g in itertools.product(range(9), repeat=2):
        q = CountQuery(gf9, D, k, g)
        assert [theorem4_display(q.with_r(r), "repaired") for r in range(k + 3)] == N_vector(theorem4_N, q)


def test_corollaries_off_divisible_branch(gf9):
    D = build_domain(gf9, "full")
    for k in (0, 2, 3):
        for g in [(0, 0), (0, 1), (1, 1)]:
            q = CountQuery(gf9, D, k, g)
            assert [corollary_display(q.with_r(r)) for r in range(k + 3)] == N_vector(theorem4_N, q)
    with pytest.raises(PreconditionError):
        corollary_display(CountQuery(gf9, D, 0, (2, 2)))


def test_theorem5_shape(gf9):
    D = build_domain(gf9, "subfield", 3)
    est = theorem5_estimate(CountQuery(gf9, D, 1, (0, 1), 1))
    assert est.main == Fraction(4, 3)
    assert est.bound == QuadExtValue(Fraction(21, 2), Fraction(9, 2), 3)
    assert est.holds() is None
    tail = theorem5_estimate(CountQuery(gf9, D, 1, (0, 1), 4))
    assert tail.main == 0
    with pytest.raises(PreconditionError):
        theorem5_estimate(CountQuery(gf9, build_domain(gf9, "punctured", [1]), 1, (1, 1)))


def test_error_comparison_examples():
    rep = error_comparison(5, 0)
    assert rep["A_k2"] == comb(8, 4) == 70
    assert rep["A_k1"] == comb(7, 3)
    assert rep["E"] == rep["E_sum"] and rep["E_prime"] == rep["E_prime_sum"]
    assert comb(19, 4) == 3876 and rep["E"] < rep["E_prime"]
    with pytest.raises(PreconditionError):
        error_comparison(5, 5)
    with pytest.raises(PreconditionError):
        error_comparison(2, 0)


def test_series_engine(gf9):
    D = build_domain(gf9, "explicit", [0, 3, 5, 8])
    q = CountQuery(gf9, D, 2, (2, 6))
    M = series_M_vector(q)
    assert M == oracle_M_vector(gf9, D, 2, (2, 6))


def test_auto_selection(gf9, gf4):
    full9 = build_domain(gf9, "full")
    assert select_engine(CountQuery(gf9, full9, 1, (0,))) == "theorem2"
    assert select_engine(CountQuery(gf9, build_domain(gf9, "punctured", [1]), 1, (0,))) == "theorem3"
    assert select_engine(CountQuery(gf9, full9, 1, (0, 0))) == "theorem4"
    assert select_engine(CountQuery(gf4, build_domain(gf4, "full"), 1, (0, 0))) == "theorem1"
    assert select_engine(CountQuery(gf9, full9, 6, (0, 0, 0))) == "oracle"
