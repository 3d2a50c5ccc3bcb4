"""Closed and semi-closed forms for N(f, r) and M(f, r).

``N(f, r)`` is the number of monic ``g`` of degree ``k + l`` sharing the
``l`` leading coefficients of ``f`` with exactly ``r`` distinct roots in
``D``; equivalently the number of codewords of RS_{n,k} at distance
``n - r`` from ``f``.  Every engine returns an exact ``int`` and refuses
(``PreconditionError``) queries outside its hypotheses.
"""

from collections import Counter
from dataclasses import dataclass, replace
from fractions import Fraction
import itertools
from math import comb, factorial

from .combinatorics import (
    QuadExtValue,
    A_m,
    as_integer,
    binom,
    exact,
    liwan_sieve,
)
from .errors import PreconditionError, check_budget
from .field import (
    domain_is_punctured_subgroup,
    domain_is_subgroup,
    domain_subfield_order,
)
from .polynomials import (
    EquivClass,
    MonicPoly,
    class_inverse,
    class_multiply,
    leading_coeffs,
    product_class,
)


@dataclass(frozen=True)
class CountQuery:
    spec: object
    D: object
    k: int
    gammas: tuple
    r: int = 0

    @property
    def ell(self):
        return len(self.gammas)

    @property
    def n(self):
        return self.D.n

    @property
    def q(self):
        return self.spec.q

    def with_r(self, r):
        return replace(self, r=r)

    def to_json(self):
        return {"field": self.spec.name, "domain": self.D.kind, "n": self.D.n,
                "k": self.k, "ell": self.ell, "gammas": list(self.gammas), "r": self.r}


@dataclass(frozen=True)
class EstimateResult:
    main: Fraction
    bound: QuadExtValue
    exact_value: int = None

    def holds(self):
        """|exact - main| <= bound, decided exactly."""
        if self.exact_value is None:
            return None
        return abs(QuadExtValue(self.exact_value - self.main)) <= self.bound


def _iv(cond):
    return 1 if cond else 0


def _sign(e):
    return -1 if e % 2 else 1


def baseline_term(q, n, k, r):
    """q^(k-r) C(n,r) sum_{j=0}^{k-r} (-q)^(-j) C(n-r, j); zero when r > k."""
    if r > k:
        return Fraction(0)
    s = sum(Fraction(binom(n - r, j), (-q) ** j) for j in range(k - r + 1))
    return Fraction(q) ** (k - r) * binom(n, r) * s


def _check_query(query):
    if query.k < 0 or query.r < 0:
        raise PreconditionError("k and r must be non-negative")
    for g in query.gammas:
        if not 0 <= g < query.q:
            raise PreconditionError(f"gamma {g} is not a field element")


# -- theorem1 engine: any l, any D --

def _class_counts(spec, ell, d):
    """Counter of <g> over monic g of degree d."""
    out = Counter()
    for low in itertools.product(range(spec.q), repeat=d):
        out[leading_coeffs(MonicPoly(low), ell)] += 1
    return out


def _subset_class_sum(spec, D, m, target, ell, d):
    """#{(g, S): g in M_d, S an m-subset of D, <g> prod_{s in S} <x+s> = target}."""
    counts = _class_counts(spec, ell, d)
    hits = 0
    for S in itertools.combinations(D.elements, m):
        want = class_multiply(spec, target, class_inverse(spec, product_class(spec, S, ell)))
        hits += counts.get(want, 0)
    return hits


def theorem1_M(query, budget=None):
    _check_query(query)
    spec, k, r, ell, n = query.spec, query.k, query.r, query.ell, query.n
    total = Fraction(0)
    if r <= k:
        total += Fraction(spec.q) ** (k - r) * comb(n, r)
    if k < r <= k + ell:
        check_budget(n**r * spec.q ** (k + ell - r), budget, "theorem1 tuple sum")
        target = EquivClass(ell, tuple(query.gammas))
        total += _subset_class_sum(spec, query.D, r, target, ell, k + ell - r)
    return as_integer(total, "M(f, r)")


def theorem1_N(query, budget=None):
    _check_query(query)
    spec, k, r, ell, n = query.spec, query.k, query.r, query.ell, query.n
    total = baseline_term(spec.q, n, k, r)
    target = EquivClass(ell, tuple(query.gammas))
    for i in range(1, ell + 1):
        m = k + i
        c = comb(m, r)
        if c == 0:
            continue
        check_budget(n**m * spec.q ** (ell - i), budget, "theorem1 tuple sum")
        inner = _subset_class_sum(spec, query.D, m, target, ell, ell - i)
        total += _sign(m - r) * c * inner
    return as_integer(total, "N(f, r)")


def monic_root_count(q, k, r):
    """N(x^k, r) over D = F_q with no prescribed coefficients."""
    return as_integer(baseline_term(q, q, k, r), "N(x^k, r)")


# -- l = 1: sums over additive subgroups --

def _subgroup_kind(spec, D):
    if domain_is_subgroup(spec, D):
        return "subgroup"
    if domain_is_punctured_subgroup(spec, D):
        return "punctured"
    raise PreconditionError("D must be an additive subgroup or a subgroup minus zero")


def U_m(m, gamma, spec, D):
    """#{x in D^m : sum x_j = gamma}."""
    kind = _subgroup_kind(spec, D)
    n = D.n
    if m == 0:
        return _iv(gamma == 0)
    if kind == "subgroup":
        return n ** (m - 1) if gamma in D else 0
    if gamma != 0 and gamma not in D:
        return 0
    val = Fraction(n**m, n + 1) + Fraction((n + 1) * _iv(gamma == 0) - 1, n + 1) * _sign(m)
    return as_integer(val, "U_m")


def Ubar_m(m, gamma, spec, D):
    """Distinct-coordinate tuples in D^m summing to gamma, in closed form."""
    kind = _subgroup_kind(spec, D)
    n, p = D.n, spec.p
    if kind == "subgroup":
        if gamma not in D:
            return 0
        val = Fraction(comb(n, m), n)
        if m % p == 0:
            val += _sign(m + m // p) * Fraction(n * _iv(gamma == 0) - 1, n) * binom(Fraction(n, p), m // p)
        return as_integer(val * factorial(m), "Ubar_m")
    if gamma != 0 and gamma not in D:
        return 0
    val = Fraction(comb(n, m), n + 1) + Fraction((n + 1) * _iv(gamma == 0) - 1, n + 1) * _sign(m) * A_m(m, -n, Fraction(-1, n), p)
    return as_integer(val * factorial(m), "Ubar_m")


def Ubar_m_sieve(m, gamma, spec, D):
    """Ubar_m through the cycle-type sieve with the per-type counts U(tau; gamma)."""
    _subgroup_kind(spec, D)
    n, p = D.n, spec.p

    def h(ct):
        lp = ct.num_cycles_coprime(p)
        val = 0
        if lp > 0:
            val += n ** (ct.num_cycles - lp) * U_m(lp, gamma, spec, D)
        elif gamma == 0:
            val += n**ct.num_cycles
        return val

    return as_integer(liwan_sieve(h, m), "Ubar_m")


def eq12_N(query, ubar):
    """N for l = 1 from a value of Ubar_{k+1}(gamma)."""
    k, r = query.k, query.r
    total = baseline_term(query.q, query.n, k, r)
    total += _sign(k + 1 - r) * comb(k + 1, r) * Fraction(ubar, factorial(k + 1))
    return as_integer(total, "N(f, r)")


def theorem2_N(query):
    """l = 1, D an additive subgroup."""
    _check_query(query)
    if query.ell != 1:
        raise PreconditionError("theorem2 requires ell = 1")
    spec, D = query.spec, query.D
    if not domain_is_subgroup(spec, D):
        raise PreconditionError("theorem2 requires D to be an additive subgroup")
    k, r, n, p, q = query.k, query.r, D.n, spec.p, spec.q
    (gamma,) = query.gammas
    total = baseline_term(q, n, k, r)
    if gamma in D:
        total += Fraction(_sign(k + 1 - r) * comb(n, r) * binom(n - r, k + 1 - r), n)
        if (k + 1) % p == 0:
            total += (Fraction(n * _iv(gamma == 0) - 1, n) * _sign(r + (k + 1) // p)
                      * comb(k + 1, r) * binom(Fraction(n, p), (k + 1) // p))
    return as_integer(total, "N(f, r)")


def _alt_binomial_sum(n, p, top):
    """sum_{0 <= j <= top/p} (-1)^j C((n+1)/p, j)."""
    return sum(_sign(j) * binom(Fraction(n + 1, p), j) for j in range(top // p + 1))


def theorem3_N(query):
    """l = 1, 0 not in D and D + {0} an additive subgroup; three cases on gamma."""
    _check_query(query)
    if query.ell != 1:
        raise PreconditionError("theorem3 requires ell = 1")
    spec, D = query.spec, query.D
    if not domain_is_punctured_subgroup(spec, D):
        raise PreconditionError("theorem3 requires D + {0} to be an additive subgroup with 0 not in D")
    k, r, n, p, q = query.k, query.r, D.n, spec.p, spec.q
    (gamma,) = query.gammas
    total = baseline_term(q, n, k, r)
    if gamma != 0 and gamma not in D:
        return as_integer(total, "N(f, r)")
    total += Fraction(_sign(k + 1 - r) * comb(n, r) * binom(n - r, k + 1 - r), n + 1)
    tail = _sign(r) * comb(k + 1, r) * _alt_binomial_sum(n, p, k + 1)
    if gamma == 0:
        total += Fraction(n, n + 1) * tail
    else:
        total -= Fraction(1, n + 1) * tail
    return as_integer(total, "N(f, r)")


# -- l = 2 over a subfield --

def _require_subfield(query, even_power):
    spec, D = query.spec, query.D
    if spec.p == 2:
        raise PreconditionError("requires odd characteristic")
    n = domain_subfield_order(spec, D)
    if n is None:
        raise PreconditionError("D must be a subfield GF(n) of the field")
    if even_power and not _is_even_power(n, spec.p):
        raise PreconditionError("n must be an even power of p")
    for g in query.gammas:
        if g not in D:
            raise PreconditionError("prescribed coefficients must lie in D")
    return n


def _is_even_power(n, p):
    b = 0
    while n % p == 0:
        n //= p
        b += 1
    return n == 1 and b % 2 == 0 and b > 0


def R_m_formula(spec, D, avec, a0, b0):
    """V_m(a; a0, b0) - n^(m-2) in closed form, D = GF(n) with n an even power of p.

    ``avec`` holds the integer weights a_j (nonzero mod p); eta is the
    quadratic character of GF(n).
    """
    if spec.p == 2:
        raise PreconditionError("requires odd characteristic")
    n = domain_subfield_order(spec, D)
    if n is None or not _is_even_power(n, spec.p):
        raise PreconditionError("D must be GF(n) with n an even power of p")
    if a0 not in D or b0 not in D:
        raise PreconditionError("a0 and b0 must lie in D")
    p = spec.p
    if any(a % p == 0 for a in avec):
        raise PreconditionError("weights must be nonzero mod p")
    m = len(avec)
    b = sum(avec) % p
    eta = lambda x: spec.quadratic_character(x, n)
    if m % 2 == 0:
        val = 0
        if b == 0:
            if b0 == 0:
                val = n * _iv(a0 == 0) - 1
        else:
            val = eta(spec.sub(spec.mul(b0, b0), spec.smul(b, a0)))
        return Fraction(n) ** ((m - 2) // 2) * val
    if b == 0:
        val = Fraction(eta(a0)) if b0 == 0 else Fraction(0)
    else:
        val = Fraction(n * _iv(spec.mul(b0, b0) == spec.smul(b, a0)) - 1, n)
    return Fraction(n) ** ((m - 1) // 2) * val


def _sqrt_pair(n, p, m):
    """A_m(-n, 1/sqrt n) and A_m(-n, -1/sqrt n)."""
    w = 1 / QuadExtValue.sqrt(n)
    return A_m(m, -n, w, p), A_m(m, -n, -w, p)


def Vbar_m(m, gamma1, gamma2, spec, D):
    """Distinct tuples in D = GF(n) with e1 = gamma1, e2 = gamma2 (n an even power of p)."""
    n = _require_subfield(CountQuery(spec, D, 0, (gamma1, gamma2)), even_power=True)
    p = spec.p
    sq = QuadExtValue.sqrt(n)
    eta = lambda x: spec.quadratic_character(x, n)
    Ap, Am = _sqrt_pair(n, p, m)
    sgn = _sign(m)
    if m % p == 0:
        z1, z2 = _iv(gamma1 == 0), _iv(gamma2 == 0)
        cp = binom(Fraction(n, p), m // p)
        val = QuadExtValue(Fraction(comb(n, m) - cp, n * n) + Fraction(z1, n) * cp)
        if z1:
            e = eta(gamma2)
            val += (n * z2 - 1 + e * sq) * Fraction(1, 2 * n) * sgn * Ap
            val += (n * z2 - 1 - e * sq) * Fraction(1, 2 * n) * sgn * Am
    else:
        t = spec.sub(spec.smul(m - 1, spec.mul(gamma1, gamma1)), spec.smul(2 * m, gamma2))
        e, z = eta(t), _iv(t == 0)
        val = QuadExtValue(Fraction(comb(n, m), n * n))
        val += (e * sq + n * z - 1) / (2 * n * sq) * sgn * Ap
        val += (e * sq - n * z + 1) / (2 * n * sq) * sgn * Am
    return as_integer(exact(val * factorial(m)), "Vbar_m")


def Wbar_m(m, gamma1, gamma2, spec, D):
    """Vbar with an extra free y in the field, D = GF(n) with n an even power of p."""
    n = _require_subfield(CountQuery(spec, D, 0, (gamma1, gamma2)), even_power=True)
    p = spec.p
    sq = QuadExtValue.sqrt(n)
    eta = lambda x: spec.quadratic_character(x, n)
    Ap, Am = _sqrt_pair(n, p, m)
    sgn = _sign(m)
    val = QuadExtValue(Fraction(comb(n, m), n))
    if (m + 1) % p == 0:
        if gamma1 == 0:
            e, z = eta(gamma2), _iv(gamma2 == 0)
            val += (e * sq + n * z - 1) / (2 * sq) * sgn * Ap
            val += (e * sq - n * z + 1) / (2 * sq) * sgn * Am
    else:
        t = spec.sub(spec.smul(m, spec.mul(gamma1, gamma1)), spec.smul(2 * (m + 1), gamma2))
        e, z = eta(t), _iv(t == 0)
        val += (n * z - 1 + e * sq) * Fraction(1, 2 * n) * sgn * Ap
        val += (n * z - 1 - e * sq) * Fraction(1, 2 * n) * sgn * Am
    return as_integer(exact(val * factorial(m)), "Wbar_m")


def eq27_N(query, vbar, wbar):
    """N for l = 2 from Vbar_{k+2} and Wbar_{k+1}."""
    k, r = query.k, query.r
    total = baseline_term(query.q, query.n, k, r)
    total += _sign(k + 2 - r) * comb(k + 2, r) * Fraction(vbar, factorial(k + 2))
    total += _sign(k + 1 - r) * comb(k + 1, r) * Fraction(wbar, factorial(k + 1))
    return as_integer(total, "N(f, r)")


def theorem4_N(query):
    """l = 2, D = GF(n) with n an even power of p, both gammas in D."""
    _check_query(query)
    if query.ell != 2:
        raise PreconditionError("theorem4 requires ell = 2")
    _require_subfield(query, even_power=True)
    g1, g2 = query.gammas
    vbar = Vbar_m(query.k + 2, g1, g2, query.spec, query.D)
    wbar = Wbar_m(query.k + 1, g1, g2, query.spec, query.D)
    return eq27_N(query, vbar, wbar)


def _display_head(q, n, k, r, p):
    """The two terms shared by every l = 2 display, plus the p | (k+2) correction."""
    head = baseline_term(q, n, k, r)
    head += Fraction(_sign(k - r) * comb(n, r) * (binom(n - r, k + 2 - r) - n * binom(n - r, k + 1 - r)), n * n)
    return head


DISPLAY_FORMS = ("printed", "typo_fixed", "repaired")


def theorem4_display(query, form="typo_fixed"):
    """Two-case closed-form display for N at l = 2.

    ``form`` picks a variant of the display:

    * ``printed``: the original statement, with the repeated A_{k+1}(-n, 1/sqrt n)
      on two consecutive lines of case p !| (k+2).
    * ``typo_fixed``: the second of those lines carries -1/sqrt n.
    * ``repaired``: additionally, case p | (k+2) uses the coefficient
      (n[gamma1=0] - 1)/n^2 on C(n/p, (k+2)/p) and the eta signs on the
      A_{k+2} pair that the two lemmas give.
    """
    if form not in DISPLAY_FORMS:
        raise ValueError(f"form must be one of {DISPLAY_FORMS}")
    _check_query(query)
    n = _require_subfield(query, even_power=True)
    spec, k, r, p, q = query.spec, query.k, query.r, query.spec.p, query.q
    g1, g2 = query.gammas
    sq = QuadExtValue.sqrt(n)
    eta = lambda x: spec.quadratic_character(x, n)
    A1p, A1m = _sqrt_pair(n, p, k + 1)
    A2p, A2m = _sqrt_pair(n, p, k + 2)
    c1, c2, s = comb(k + 1, r), comb(k + 2, r), _sign(r)
    val = QuadExtValue(_display_head(q, n, k, r, p))
    if (k + 2) % p:
        t = spec.sub(spec.smul(k + 1, spec.mul(g1, g1)), spec.smul(2 * (k + 2), g2))
        e, z = eta(t), _iv(t == 0)
        second = A1p if form == "printed" else A1m
        val += s * c1 * (n * z - 1 + e * sq) * Fraction(1, 2 * n) * A1p
        val += s * c1 * (n * z - 1 - e * sq) * Fraction(1, 2 * n) * second
        val += s * c2 * (e * sq + n * z - 1) / (2 * n * sq) * A2p
        val += s * c2 * (e * sq - n * z + 1) / (2 * n * sq) * A2m
        return exact(val)
    cp = binom(Fraction(n, p), (k + 2) // p)
    if form == "repaired":
        val += _sign(k + 2 - r) * Fraction(c2 * (n * _iv(g1 == 0) - 1), n * n) * cp
    else:
        val -= _sign(r + (k + 2) // p) * Fraction(c2, n * n) * cp
    if g1 == 0:
        e, z = eta(g2), _iv(g2 == 0)
        flip = -1 if form == "repaired" else 1
        val += s * c1 * (e * sq + n * z - 1) / (2 * sq) * A1p
        val += s * c1 * (e * sq - n * z + 1) / (2 * sq) * A1m
        val += s * c2 * (n * z - 1 - flip * e * sq) * Fraction(1, 2 * n) * A2p
        val += s * c2 * (n * z - 1 + flip * e * sq) * Fraction(1, 2 * n) * A2m
    return exact(val)


def corollary_display(query):
    """Specialised displays for (gamma1, gamma2) = (0,0), (0,1), (1,1), as originally stated."""
    _check_query(query)
    n = _require_subfield(query, even_power=True)
    k, r, p, q = query.k, query.r, query.spec.p, query.q
    sq = QuadExtValue.sqrt(n)
    A1p, A1m = _sqrt_pair(n, p, k + 1)
    A2p, A2m = _sqrt_pair(n, p, k + 2)
    c1, c2, s = comb(k + 1, r), comb(k + 2, r), _sign(r)
    val = QuadExtValue(_display_head(q, n, k, r, p))
    pk2 = (k + 2) % p == 0
    corr = _sign(r + (k + 2) // p) * Fraction(c2, n * n) * binom(Fraction(n, p), (k + 2) // p) if pk2 else 0

    def generic_terms():
        return (s * Fraction(c1, 2 * n) * ((sq - 1) * A1p - (sq + 1) * A1m)
                + s * Fraction(c2, 2 * n * n) * ((n - sq) * A2p + (n + sq) * A2m))

    def zero_like_terms():
        return (s * Fraction((n - 1) * c1, 2 * n) * (A1p + A1m)
                + s * (n - 1) * sq * Fraction(c2, 2 * n * n) * (A2p - A2m))

    gam = tuple(query.gammas)
    if gam == (0, 0):
        if not pk2:
            val += zero_like_terms()
        else:
            val -= corr
            val += s * (n - 1) * sq * Fraction(c1, 2 * n) * (A1p - A1m)
            val += s * Fraction((n - 1) * c2, 2 * n) * (A2p + A2m)
    elif gam == (0, 1):
        if not pk2:
            val += generic_terms()
        else:
            val -= corr
            val += s * Fraction(c1, 2 * n) * ((n - sq) * A1p + (n + sq) * A1m)
            val -= s * Fraction(c2, 2 * n * n) * ((sq + 1) * A2p - (sq - 1) * A2m)
    elif gam == (1, 1):
        if pk2:
            val -= corr
        elif (k + 3) % p == 0:
            val += zero_like_terms()
        else:
            val += generic_terms()
    else:
        raise PreconditionError("corollary displays cover (0,0), (0,1) and (1,1) only")
    return exact(val)


# -- theorem5 estimate --

def theorem5_main(q, n, k, r):
    main = baseline_term(q, n, k, r)
    main += Fraction(_sign(k + 1 - r) * comb(n, r) * binom(n - r, k + 1 - r), n)
    main += Fraction(_sign(k + 2 - r) * comb(n, r) * binom(n - r, k + 2 - r), n * n)
    return main


def theorem5_bound(n, p, k, r):
    w = 1 / QuadExtValue.sqrt(n)
    bound = comb(k + 2, r) * QuadExtValue.coerce(A_m(k + 2, n, w, p))
    bound += QuadExtValue.sqrt(n) * comb(k + 1, r) * QuadExtValue.coerce(A_m(k + 1, n, w, p))
    return bound


def theorem5_estimate(query, exact_value=None):
    """Main term and error bound for l = 2 over any subfield D = GF(n), p odd."""
    _check_query(query)
    if query.ell != 2:
        raise PreconditionError("theorem5 requires ell = 2")
    n = _require_subfield(query, even_power=False)
    return EstimateResult(theorem5_main(query.q, n, query.k, query.r),
                          theorem5_bound(n, query.spec.p, query.k, query.r),
                          exact_value)


def error_comparison(p, r):
    """The two error terms at n = q = p^2, k = p - 3, and their ratio."""
    from .field import is_prime
    if not is_prime(p) or p == 2:
        raise PreconditionError("p must be an odd prime")
    if not 0 <= r <= p - 1:
        raise PreconditionError("r must lie in 0..p-1")
    k = p - 3
    a2 = A_m(k + 2, p * p, Fraction(1, p), p)
    a1 = A_m(k + 1, p * p, Fraction(1, p), p)
    E_sum = comb(k + 2, r) * a2 + p * comb(k + 1, r) * a1
    E = (1 + Fraction(p * (p - 1 - r), 2 * (p - 1))) * comb(p - 1, r) * comb(2 * p - 2, p - 1)
    E_prime_sum = comb(p - 1, r) * comb(4 * p - 1, p - 1) + p * comb(p - 2, r) * comb(4 * p - 2, p - 2)
    E_prime = (1 + Fraction(p * (p - 1 - r), 4 * p - 1)) * comb(p - 1, r) * comb(4 * p - 1, p - 1)
    return {
        "p": p, "r": r,
        "A_k2": a2, "A_k1": a1,
        "E": E, "E_sum": E_sum,
        "E_prime": E_prime, "E_prime_sum": E_prime_sum,
        "ratio": E / E_prime,
        "asymptotic_ratio": 6**0.5 * (p + 1 - r) / (p + 3 - r) * 0.75 ** (3 * p),
    }


# -- group algebra path --

def series_M_vector(query, budget=None):
    """M(f, r) for r = 0..k+l as [z^(k+l) <f>] sum_{|S|=r} F(z; >=S)."""
    from .algebra import series_F
    _check_query(query)
    spec, D, k, ell = query.spec, query.D, query.k, query.ell
    top = k + ell
    check_budget(sum(comb(D.n, r) for r in range(min(top, D.n) + 1)) * spec.q**ell,
                 budget, "series subset sum")
    F = series_F(spec, ell, max(top, ell))
    target = EquivClass(ell, tuple(query.gammas))
    out = []
    for r in range(top + 1):
        coeff = F.coeffs[top - r]
        total = Fraction(0)
        for S in itertools.combinations(D.elements, r):
            prefix = product_class(spec, S, ell)
            total += coeff.coefficient(class_multiply(spec, target, class_inverse(spec, prefix)))
        out.append(as_integer(total, "M(f, r)"))
    return out


def series_N(query, budget=None):
    from .combinatorics import sieve_N_from_M
    vec = sieve_N_from_M(series_M_vector(query, budget))
    return vec[query.r] if query.r < len(vec) else 0


# -- engine registry --

def engine_applicable(name, query):
    try:
        _precheck(name, query)
    except PreconditionError:
        return False
    return True


def _precheck(name, query):
    spec, D = query.spec, query.D
    if name == "theorem2":
        if query.ell != 1 or not domain_is_subgroup(spec, D):
            raise PreconditionError("theorem2 requires ell = 1 and an additive subgroup D")
    elif name == "theorem3":
        if query.ell != 1 or not domain_is_punctured_subgroup(spec, D):
            raise PreconditionError("theorem3 requires ell = 1 and D + {0} an additive subgroup")
    elif name == "theorem4":
        if query.ell != 2:
            raise PreconditionError("theorem4 requires ell = 2")
        _require_subfield(query, even_power=True)


EXACT_ENGINES = {
    "theorem1": theorem1_N,
    "theorem2": theorem2_N,
    "theorem3": theorem3_N,
    "theorem4": theorem4_N,
}


def select_engine(query, budget=None):
    """Most specific exact engine whose hypotheses hold for the query."""
    for name in ("theorem2", "theorem3", "theorem4"):
        if engine_applicable(name, query):
            return name
    n, k, ell, q = query.n, query.k, query.ell, query.q
    cost = max([n ** (k + i) * q ** (ell - i) for i in range(1, ell + 1)], default=0)
    from .errors import enumeration_budget
    if cost <= enumeration_budget(budget):
        return "theorem1"
    return "oracle"


def N_vector(engine, query):
    """Engine values for r = 0..k+l."""
    return [engine(query.with_r(r)) for r in range(query.k + query.ell + 1)]
