"""The group algebra Q[E] over leading-coefficient classes, and truncated
power series in ``z`` with coefficients in it.

These series are the generating functions for monic polynomials by
degree and class: ``F(z)`` for all of them, ``F(z; >=S)`` for multiples of
``prod (x + a)`` over ``S``, and ``F(z; S)`` for polynomials whose linear
factors are exactly ``S``.
"""

from fractions import Fraction
import itertools

from .combinatorics import fraction_str, parse_fraction
from .errors import PreconditionError
from .polynomials import (
    EquivClass,
    MonicPoly,
    all_classes,
    class_multiply,
    identity_class,
    leading_coeffs,
    linear_class,
)


class AlgebraElement:
    """Sparse rational combination of classes; zero weights are never stored."""

    __slots__ = ("spec", "ell", "terms")

    def __init__(self, spec, ell, terms=None):
        self.spec = spec
        self.ell = ell
        self.terms = {}
        for cls, w in (terms or {}).items():
            if cls.ell != ell:
                raise PreconditionError("class has the wrong ell")
            w = Fraction(w)
            if w:
                self.terms[cls] = w

    @classmethod
    def unit(cls, spec, ell, weight=1):
        return cls(spec, ell, {identity_class(ell): weight})

    @classmethod
    def of_class(cls, spec, e, weight=1):
        return cls(spec, e.ell, {e: weight})

    def _check(self, other):
        if not isinstance(other, AlgebraElement):
            raise TypeError("expected an AlgebraElement")
        if other.ell != self.ell:
            raise PreconditionError("mismatched ell in group algebra operation")

    def coefficient(self, e):
        return self.terms.get(e, Fraction(0))

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for cls, w in other.terms.items():
            out[cls] = out.get(cls, 0) + w
        return AlgebraElement(self.spec, self.ell, out)

    def __neg__(self):
        return AlgebraElement(self.spec, self.ell, {c: -w for c, w in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return AlgebraElement(self.spec, self.ell, {k: w * c for k, w in self.terms.items()})

    def translate(self, e):
        """Multiply by a single class (a permutation of the support)."""
        spec = self.spec
        return AlgebraElement(spec, self.ell,
                              {class_multiply(spec, e, k): w for k, w in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return NotImplemented
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        self._check(other)
        spec = self.spec
        out = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                key = class_multiply(spec, u, v)
                out[key] = out.get(key, 0) + a * b
        return AlgebraElement(spec, self.ell, out)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.ell == other.ell and self.terms == other.terms
        if other == 0:
            return self.is_zero()
        return NotImplemented

    def __repr__(self):
        q = self.spec.q
        body = " + ".join(f"{w}*<{','.join(map(str, c.leading))}>"
                          for c, w in sorted(self.terms.items(), key=lambda t: t[0].index(q)))
        return f"AlgebraElement({body or '0'})"

    def to_json(self):
        q = self.spec.q
        return {"ell": self.ell,
                "terms": [[c.index(q), fraction_str(w)]
                          for c, w in sorted(self.terms.items(), key=lambda t: t[0].index(q))]}

    @classmethod
    def from_json(cls, spec, obj):
        ell = obj["ell"]
        return cls(spec, ell, {EquivClass.from_index(i, spec.q, ell): parse_fraction(w)
                               for i, w in obj["terms"]})


def idempotents(spec, ell):
    """E (uniform average over classes) and J = <1> - E."""
    weight = Fraction(1, spec.q**ell)
    E = AlgebraElement(spec, ell, {e: weight for e in all_classes(spec.q, ell)})
    J = AlgebraElement.unit(spec, ell) - E
    return E, J


def class_sum(spec, ell, d):
    """Sum of <f> over all monic f of degree d, by enumeration."""
    out = {}
    for low in itertools.product(range(spec.q), repeat=d):
        e = leading_coeffs(MonicPoly(low), ell)
        out[e] = out.get(e, 0) + 1
    return AlgebraElement(spec, ell, out)


class TruncatedSeries:
    """``sum_{d <= dmax} coeffs[d] z^d`` with AlgebraElement coefficients."""

    def __init__(self, spec, ell, coeffs):
        self.spec = spec
        self.ell = ell
        self.coeffs = list(coeffs)

    @property
    def dmax(self):
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, spec, ell, dmax):
        return cls(spec, ell, [AlgebraElement(spec, ell) for _ in range(dmax + 1)])

    def __add__(self, other):
        d = min(self.dmax, other.dmax)
        return TruncatedSeries(self.spec, self.ell,
                               [self.coeffs[i] + other.coeffs[i] for i in range(d + 1)])

    def __sub__(self, other):
        d = min(self.dmax, other.dmax)
        return TruncatedSeries(self.spec, self.ell,
                               [self.coeffs[i] - other.coeffs[i] for i in range(d + 1)])

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return TruncatedSeries(self.spec, self.ell, [c * other for c in self.coeffs])
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(self.spec, self.ell, [c.scale(other) for c in self.coeffs])
        d = min(self.dmax, other.dmax)
        out = []
        for t in range(d + 1):
            acc = AlgebraElement(self.spec, self.ell)
            for i in range(t + 1):
                if self.coeffs[i].terms and other.coeffs[t - i].terms:
                    acc = acc + self.coeffs[i] * other.coeffs[t - i]
            out.append(acc)
        return TruncatedSeries(self.spec, self.ell, out)

    def __rmul__(self, other):
        if isinstance(other, AlgebraElement):
            return TruncatedSeries(self.spec, self.ell, [other * c for c in self.coeffs])
        return self * other

    def shift(self, s):
        """Multiply by z^s, keeping dmax."""
        zero = AlgebraElement(self.spec, self.ell)
        return TruncatedSeries(self.spec, self.ell,
                               [zero] * min(s, len(self.coeffs)) + self.coeffs[:max(0, len(self.coeffs) - s)])

    def times_linear_binomial(self, e):
        """Multiply by (<1> - e z)."""
        out = [self.coeffs[0]]
        for d in range(1, len(self.coeffs)):
            out.append(self.coeffs[d] - self.coeffs[d - 1].translate(e))
        return TruncatedSeries(self.spec, self.ell, out)

    def __eq__(self, other):
        return (isinstance(other, TruncatedSeries) and self.ell == other.ell
                and self.coeffs == other.coeffs)

    def __repr__(self):
        return f"TruncatedSeries(ell={self.ell}, dmax={self.dmax})"


def series_F(spec, ell, dmax):
    """F(z): explicit class sums below degree ell, q^d E from degree ell on."""
    if dmax < ell:
        raise PreconditionError("dmax must be at least ell")
    E, _ = idempotents(spec, ell)
    coeffs = [class_sum(spec, ell, d) for d in range(ell)]
    coeffs += [E.scale(spec.q**d) for d in range(ell, dmax + 1)]
    return TruncatedSeries(spec, ell, coeffs)


def _check_distinct(S):
    S = list(S)
    if len(set(S)) != len(S):
        raise PreconditionError("S has duplicate elements")
    return S


def series_F_superset(spec, S, ell, dmax):
    """F(z; >=S) = prod_{a in S} <x+a> z^|S| F(z)."""
    S = _check_distinct(S)
    prefix = AlgebraElement.unit(spec, ell)
    for a in S:
        prefix = prefix.translate(linear_class(a, ell))
    return (series_F(spec, ell, dmax) * prefix).shift(len(S))


def series_F_exact(spec, S, ell, dmax):
    """F(z; S): the superset series times prod_{b not in S} (<1> - <x+b> z).

    Cost grows with q (one binomial factor per field element outside S);
    meant for verification.
    """
    S = _check_distinct(S)
    series = series_F_superset(spec, S, ell, dmax)
    inside = set(S)
    for b in range(spec.q):
        if b not in inside:
            series = series.times_linear_binomial(linear_class(b, ell))
    return series


def extract_count(series, d, e):
    """[z^d e] series."""
    if not 0 <= d <= series.dmax:
        raise PreconditionError(f"degree {d} outside series range 0..{series.dmax}")
    return series.coeffs[d].coefficient(e)
