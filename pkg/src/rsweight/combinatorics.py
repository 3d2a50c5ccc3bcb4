"""Exact combinatorics: Q(sqrt n) values, generalized binomials, A_m, sieves.

Nothing here touches floating point.  Values are ``int``, ``Fraction`` or
:class:`QuadExtValue`.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, isqrt
import numbers


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, numbers.Integral):
        return Fraction(int(x))
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


class QuadExtValue:
    """Exact ``rat + irr * sqrt(radicand)``.

    A perfect-square radicand is folded into the rational part on
    construction, so such values are always pure rationals.  Values with
    ``irr == 0`` combine with any radicand.
    """

    __slots__ = ("rat", "irr", "radicand")

    def __init__(self, rat=0, irr=0, radicand=1):
        rat = _as_fraction(rat)
        irr = _as_fraction(irr)
        if radicand < 1:
            raise ValueError("radicand must be a positive integer")
        root = isqrt(radicand)
        if root * root == radicand:
            rat += irr * root
            irr = Fraction(0)
        if irr == 0:
            radicand = 1
        self.rat = rat
        self.irr = irr
        self.radicand = radicand

    @classmethod
    def sqrt(cls, n):
        return cls(0, 1, n)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, QuadExtValue):
            return x
        return cls(_as_fraction(x))

    def _radicand_with(self, other):
        if self.irr == 0:
            return other.radicand
        if other.irr == 0 or other.radicand == self.radicand:
            return self.radicand
        raise ValueError(f"mixing sqrt({self.radicand}) and sqrt({other.radicand})")

    def is_rational(self):
        return self.irr == 0

    def to_fraction(self):
        if self.irr:
            raise ValueError(f"{self} is irrational")
        return self.rat

    def conjugate(self):
        return QuadExtValue(self.rat, -self.irr, self.radicand)

    def __add__(self, other):
        try:
            other = QuadExtValue.coerce(other)
        except TypeError:
            return NotImplemented
        n = self._radicand_with(other)
        return QuadExtValue(self.rat + other.rat, self.irr + other.irr, n)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtValue(-self.rat, -self.irr, self.radicand)

    def __sub__(self, other):
        return self + (-QuadExtValue.coerce(other))

    def __rsub__(self, other):
        return QuadExtValue.coerce(other) - self

    def __mul__(self, other):
        try:
            other = QuadExtValue.coerce(other)
        except TypeError:
            return NotImplemented
        n = self._radicand_with(other)
        return QuadExtValue(
            self.rat * other.rat + self.irr * other.irr * n,
            self.rat * other.irr + self.irr * other.rat,
            n,
        )

    __rmul__ = __mul__

    def norm(self):
        return self.rat * self.rat - self.irr * self.irr * self.radicand

    def __truediv__(self, other):
        other = QuadExtValue.coerce(other)
        nrm = other.norm()
        if nrm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt n)")
        return self * other.conjugate() * QuadExtValue(1 / nrm)

    def __rtruediv__(self, other):
        return QuadExtValue.coerce(other) / self

    def __pow__(self, e):
        if not isinstance(e, numbers.Integral):
            return NotImplemented
        if e < 0:
            return QuadExtValue(1) / (self ** (-e))
        result, base = QuadExtValue(1, 0, self.radicand), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def sign(self):
        a, b, n = self.rat, self.irr, self.radicand
        if b == 0:
            return (a > 0) - (a < 0)
        sa, sb = (a > 0) - (a < 0), (b > 0) - (b < 0)
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: the larger magnitude wins
        lhs, rhs = a * a, b * b * n
        if lhs > rhs:
            return sa
        if lhs < rhs:
            return sb
        return 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __eq__(self, other):
        try:
            other = QuadExtValue.coerce(other)
        except TypeError:
            return NotImplemented
        return (self - other).sign() == 0

    def __hash__(self):
        if self.irr == 0:
            return hash(self.rat)
        return hash((self.rat, self.irr, self.radicand))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return float(self.rat) + float(self.irr) * self.radicand**0.5

    def __repr__(self):
        if self.irr == 0:
            return f"QuadExtValue({self.rat})"
        return f"QuadExtValue({self.rat} + {self.irr}*sqrt({self.radicand}))"

    def to_json(self):
        return {"rat": fraction_str(self.rat), "irr": fraction_str(self.irr),
                "radicand": self.radicand}

    @classmethod
    def from_json(cls, obj):
        return cls(parse_fraction(obj["rat"]), parse_fraction(obj["irr"]), int(obj["radicand"]))


def fraction_str(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(s):
    return Fraction(s)


def exact(x):
    """Collapse a rational-valued QuadExtValue to Fraction; pass others through."""
    if isinstance(x, QuadExtValue) and x.is_rational():
        return x.rat
    return x


def as_integer(x, what="value"):
    """Return ``x`` as ``int``; raise if it is not an exact integer."""
    x = exact(x)
    if isinstance(x, QuadExtValue):
        raise ArithmeticError(f"{what} is irrational: {x!r}")
    x = Fraction(x)
    if x.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {x}")
    return x.numerator


def gen_binomial(x, j):
    """``x (x-1) ... (x-j+1) / j!`` for any exact ``x``; 0 when j < 0."""
    if j < 0:
        return Fraction(0)
    if isinstance(x, numbers.Integral) and x >= 0:
        return Fraction(comb(int(x), j))
    num = QuadExtValue.coerce(x) if isinstance(x, QuadExtValue) else _as_fraction(x)
    acc = Fraction(1) if not isinstance(num, QuadExtValue) else QuadExtValue(1)
    for i in range(j):
        acc = acc * (num - i)
    return exact(acc * Fraction(1, factorial(j)))


def binom(n, k):
    """C(n, k) with the empty conventions: 0 for k < 0, and 0 for 0 <= n < k."""
    if k < 0:
        return 0
    if isinstance(n, numbers.Integral) and n >= 0:
        return comb(int(n), k)
    return gen_binomial(n, k)


def A_m(m, u, w, p):
    """``[z^m] (1-z)^(-uw) (1-z^p)^(-(u-uw)/p)`` as the finite binomial sum."""
    if isinstance(u, QuadExtValue) or isinstance(w, QuadExtValue):
        u, w = QuadExtValue.coerce(u), QuadExtValue.coerce(w)
    else:
        u, w = _as_fraction(u), _as_fraction(w)
    uw = u * w
    rest = (u - uw) / p
    total = Fraction(0)
    for j in range(m // p + 1):
        total = total + gen_binomial(uw + (m - j * p - 1), m - j * p) * gen_binomial(rest + (j - 1), j)
    return exact(total)


# -- binomial sieve --

def sieve_N_from_M(M):
    """N[r] = sum_{j>=r} (-1)^(j-r) C(j,r) M[j]; vectors are indexed from 0."""
    d = len(M)
    return [sum((-1) ** (j - r) * comb(j, r) * M[j] for j in range(r, d)) for r in range(d)]


def inverse_sieve(N):
    """M[j] = sum_{r>=j} C(r,j) N[r]."""
    d = len(N)
    return [sum(comb(r, j) * N[r] for r in range(j, d)) for j in range(d)]


# -- cycle types --

@dataclass(frozen=True)
class CycleType:
    parts: tuple

    @property
    def size(self):
        return sum(self.parts)

    @property
    def num_cycles(self):
        return len(self.parts)

    def num_cycles_coprime(self, p):
        """Number of cycles whose length is not a multiple of ``p``."""
        return sum(1 for t in self.parts if t % p)

    def lengths_coprime(self, p):
        return tuple(t for t in self.parts if t % p)

    @property
    def multiplicity(self):
        return _cycle_type_count(self.parts)


@lru_cache(maxsize=None)
def _cycle_type_count(parts):
    denom = 1
    for length in set(parts):
        c = parts.count(length)
        denom *= length**c * factorial(c)
    return factorial(sum(parts)) // denom


def partitions(m, largest=None):
    """Integer partitions of ``m`` as non-increasing tuples."""
    if largest is None:
        largest = m
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in partitions(m - first, first):
            yield (first,) + rest


def cycle_types(m):
    return [CycleType(parts) for parts in partitions(m)]


def liwan_sieve(h_type, m):
    """Sum over S_m of (-1)^(m - l(tau)) H(tau), grouped by cycle type.

    ``h_type`` receives a :class:`CycleType` and returns the common value
    of H on permutations of that type.
    """
    total = Fraction(0)
    for ct in cycle_types(m):
        total = total + (-1) ** (m - ct.num_cycles) * ct.multiplicity * h_type(ct)
    return exact(total)


def cycle_index_average(m, u, w, p):
    """(1/m!) sum_{tau in S_m} u^l(tau) w^l'(tau), summed over cycle types."""
    total = Fraction(0)
    for ct in cycle_types(m):
        lp = ct.num_cycles_coprime(p)
        total = total + ct.multiplicity * (QuadExtValue.coerce(u) ** ct.num_cycles) * (QuadExtValue.coerce(w) ** lp)
    return exact(total * Fraction(1, factorial(m)))


def egf_cycle_series(u, w, p, order):
    """Coefficients of exp(u sum_{p|j} z^j/j + uw sum_{p!|j} z^j/j) up to ``order``.

    Computed by power-series exponentiation (f' = g' f), independent of the
    closed binomial form of A_m.
    """
    u = QuadExtValue.coerce(u)
    w = QuadExtValue.coerce(w)
    g = [QuadExtValue(0)] * (order + 1)
    for j in range(1, order + 1):
        g[j] = (u if j % p == 0 else u * w) * Fraction(1, j)
    f = [QuadExtValue(0)] * (order + 1)
    f[0] = QuadExtValue(1)
    for m in range(1, order + 1):
        acc = QuadExtValue(0)
        for j in range(1, m + 1):
            acc = acc + g[j] * j * f[m - j]
        f[m] = acc * Fraction(1, m)
    return [exact(c) for c in f]
