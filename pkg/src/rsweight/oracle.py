"""Brute-force ground truth.

Everything here enumerates; nothing uses the closed forms, the group
algebra or the sieve identities.  Enumeration sizes are checked against
the evaluation budget before any work starts.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
import itertools
from math import comb, factorial

import numpy as np

from . import _backend
from .errors import PreconditionError, check_budget
from .field import ADD_TABLE_LIMIT


@dataclass
class DistanceHistogram:
    counts: dict = field(default_factory=dict)
    total: int = 0

    def to_json(self):
        return {str(d): str(c) for d, c in sorted(self.counts.items())}

    @classmethod
    def from_json(cls, obj):
        counts = {int(d): int(c) for d, c in obj.items()}
        return cls(counts, sum(counts.values()))

    @property
    def min_distance(self):
        return min(d for d, c in self.counts.items() if c)


# -- class-member enumeration --

def _member_setup(spec, D, k, gammas):
    """Values of the fixed part x^(k+l) + sum g_i x^(k+l-i) on D, and the powers a^i, i < k."""
    ell = len(gammas)
    base, powers = [], [[] for _ in range(k)]
    for alpha in D.elements:
        v = spec.pow(alpha, k + ell)
        for i, g in enumerate(gammas, start=1):
            v = spec.add(v, spec.mul(g, spec.pow(alpha, k + ell - i)))
        base.append(v)
        for i in range(k):
            powers[i].append(spec.pow(alpha, i))
    return base, powers


def _generic_histogram(spec, base, powers, k, start, stop):
    n = len(base)
    hist = [0] * (n + 1)
    q = spec.q
    for m in range(start, stop):
        digits = []
        for _ in range(k):
            m, d = divmod(m, q)
            digits.append(d)
        cnt = 0
        for a in range(n):
            v = base[a]
            for i, c in enumerate(digits):
                v = spec.add(v, spec.mul(c, powers[i][a]))
            cnt += v == 0
        hist[cnt] += 1
    return np.array(hist, dtype=np.int64)


def _histogram_chunk(args):
    spec, base, powers, k, start, stop, backend = args
    if spec.q > ADD_TABLE_LIMIT:
        return _generic_histogram(spec, base, powers, k, start, stop)
    kern = _backend.kernels(backend)
    return kern.root_histogram(
        np.asarray(base, dtype=np.int32),
        np.asarray(powers, dtype=np.int32).reshape(k, len(base)),
        spec.add_table, spec.mul_table, spec.q, k, start, stop)


def _partition(total, parts):
    parts = max(1, min(parts, total)) if total else 1
    bounds = [total * i // parts for i in range(parts + 1)]
    return list(zip(bounds[:-1], bounds[1:]))


def root_count_histogram(spec, D, k, gammas, partitions=1, workers=None,
                         backend=None, budget=None):
    """hist[s] = number of class members with exactly s distinct roots in D.

    The class is that of ``x^(k+l) + gammas[0] x^(k+l-1) + ... ``; its
    ``q^k`` members are split into ``partitions`` contiguous index ranges,
    optionally run on ``workers`` processes, and summed in range order.
    """
    total = spec.q**k
    check_budget(total * max(D.n, 1), budget, "class enumeration")
    base, powers = _member_setup(spec, D, k, gammas)
    jobs = [(spec, base, powers, k, lo, hi, backend) for lo, hi in _partition(total, partitions)]
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_histogram_chunk, jobs))
    else:
        parts = [_histogram_chunk(j) for j in jobs]
    hist = np.zeros(D.n + 1, dtype=np.int64)
    for h in parts:
        hist += h
    return [int(c) for c in hist]


def oracle_N_vector(spec, D, k, gammas, **kw):
    """N(f, r) for r = 0..k+l (entries past n are zero)."""
    hist = root_count_histogram(spec, D, k, gammas, **kw)
    top = k + len(gammas)
    return [hist[r] if r < len(hist) else 0 for r in range(top + 1)]


def oracle_M_vector(spec, D, k, gammas, **kw):
    """M(f, r) = sum over members of C(#roots, r)."""
    hist = root_count_histogram(spec, D, k, gammas, **kw)
    top = k + len(gammas)
    return [sum(c * comb(s, r) for s, c in enumerate(hist)) for r in range(top + 1)]


def oracle_N(query, **kw):
    vec = oracle_N_vector(query.spec, query.D, query.k, query.gammas, **kw)
    return vec[query.r] if query.r < len(vec) else 0


def oracle_M(query, **kw):
    vec = oracle_M_vector(query.spec, query.D, query.k, query.gammas, **kw)
    return vec[query.r] if query.r < len(vec) else 0


# -- tuple counts --

def _elementary_12(spec, xs):
    e1 = e2 = 0
    for x in xs:
        e2 = spec.add(e2, spec.mul(e1, x))
        e1 = spec.add(e1, x)
    return e1, e2


def count_U(spec, D, m, gamma, budget=None):
    check_budget(D.n**m, budget, "U tuple enumeration")
    total = 0
    for xs in itertools.product(D.elements, repeat=m):
        s = 0
        for x in xs:
            s = spec.add(s, x)
        total += s == gamma
    return total


def count_Ubar(spec, D, m, gamma, budget=None):
    check_budget(comb(D.n, m), budget, "Ubar subset enumeration")
    hits = 0
    for xs in itertools.combinations(D.elements, m):
        s = 0
        for x in xs:
            s = spec.add(s, x)
        hits += s == gamma
    return hits * factorial(m)


def count_Vbar(spec, D, m, gamma1, gamma2, budget=None):
    """Distinct tuples with sum gamma1 and second elementary symmetric value gamma2."""
    check_budget(comb(D.n, m), budget, "Vbar subset enumeration")
    hits = 0
    for xs in itertools.combinations(D.elements, m):
        hits += _elementary_12(spec, xs) == (gamma1, gamma2)
    return hits * factorial(m)


def count_Wbar(spec, D, m, gamma1, gamma2, budget=None):
    """Like Vbar with an extra free y ranging over the whole field."""
    check_budget(comb(D.n, m) * spec.q, budget, "Wbar enumeration")
    hits = 0
    for xs in itertools.combinations(D.elements, m):
        e1, e2 = _elementary_12(spec, xs)
        for y in range(spec.q):
            if spec.add(y, e1) == gamma1 and spec.add(spec.mul(y, e1), e2) == gamma2:
                hits += 1
    return hits * factorial(m)


def count_Vsystem(spec, D, avec, a0, b0, backend=None, budget=None):
    """#{x in D^m : sum a_j x_j^2 = a0, sum a_j x_j = b0} with integer weights a_j."""
    m = len(avec)
    check_budget(D.n**m, budget, "V-system enumeration")
    weights = [spec.scalar(a) for a in avec]
    if spec.q > ADD_TABLE_LIMIT:
        total = 0
        for xs in itertools.product(D.elements, repeat=m):
            s1 = s2 = 0
            for w, x in zip(weights, xs):
                wx = spec.mul(w, x)
                s1 = spec.add(s1, wx)
                s2 = spec.add(s2, spec.mul(wx, x))
            total += s1 == b0 and s2 == a0
        return total
    kern = _backend.kernels(backend)
    return int(kern.vsystem_count(np.asarray(D.elements, dtype=np.int32),
                                  np.asarray(weights, dtype=np.int32), a0, b0,
                                  spec.add_table, spec.mul_table))


def oracle_tuple_counts(kind, spec, D, *params, **kw):
    """Dispatch by kind: U, Ubar (m, gamma); Vbar, Wbar (m, g1, g2); Vsystem (avec, a0, b0)."""
    funcs = {"U": count_U, "Ubar": count_Ubar, "Vbar": count_Vbar,
             "Wbar": count_Wbar, "Vsystem": count_Vsystem}
    if kind not in funcs:
        raise PreconditionError(f"unknown tuple-count kind {kind!r}")
    return funcs[kind](spec, D, *params, **kw)


# -- distances to the code --

def distance_distribution(spec, f, k, D, budget=None):
    """Histogram of d(f, g) over all q^k codewords g (polynomials of degree < k)."""
    check_budget(spec.q**k * max(D.n, 1), budget, "codeword enumeration")
    fvals = [f(spec, a) for a in D.elements]
    counts = {}
    for g in itertools.product(range(spec.q), repeat=k):
        agree = 0
        for a, fv in zip(D.elements, fvals):
            v = 0
            for c in g:
                v = spec.add(spec.mul(v, a), c)
            agree += v == fv
        dist = D.n - agree
        counts[dist] = counts.get(dist, 0) + 1
    return DistanceHistogram(counts, spec.q**k)


def empirical_moments(hist):
    """Exact mean and variance of the distance under uniform codewords."""
    if not hist.total:
        raise PreconditionError("empty histogram")
    mean = Fraction(sum(d * c for d, c in hist.counts.items()), hist.total)
    second = Fraction(sum(d * d * c for d, c in hist.counts.items()), hist.total)
    return mean, second - mean * mean
