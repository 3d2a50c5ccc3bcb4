"""Monic polynomials over GF(q) and the group of leading-coefficient classes."""

from dataclasses import dataclass
import itertools

from .errors import PreconditionError


@dataclass(frozen=True)
class MonicPoly:
    """``x^d + c[0] x^(d-1) + ... + c[d-1]``; the empty tuple is the constant 1."""

    coeffs: tuple = ()

    @property
    def degree(self):
        return len(self.coeffs)

    def __call__(self, spec, x):
        v = 1
        for c in self.coeffs:
            v = spec.add(spec.mul(v, x), c)
        return v

    def to_json(self):
        return {"degree": self.degree, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj):
        coeffs = tuple(int(c) for c in obj["coeffs"])
        if obj.get("degree", len(coeffs)) != len(coeffs):
            raise ValueError("degree does not match coefficient count")
        return cls(coeffs)


def monomial_with_leading(leading, k):
    """``x^(k+l) + a_1 x^(k+l-1) + ... + a_l x^k``."""
    return MonicPoly(tuple(leading) + (0,) * k)


def linear(beta):
    """``x + beta``."""
    return MonicPoly((beta,))


def poly_mul(spec, f, g):
    a = (1,) + f.coeffs
    b = (1,) + g.coeffs
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u == 0:
            continue
        for j, v in enumerate(b):
            out[i + j] = spec.add(out[i + j], spec.mul(u, v))
    return MonicPoly(tuple(out[1:]))


def poly_sub_low(spec, f, g_coeffs):
    """``f - g`` for a non-monic ``g`` of lower degree given constant-term-first."""
    c = list(f.coeffs)
    d = f.degree
    for i, gi in enumerate(g_coeffs):
        if i >= d:
            raise ValueError("g must have lower degree than f")
        c[d - 1 - i] = spec.sub(c[d - 1 - i], gi)
    return MonicPoly(tuple(c))


@dataclass(frozen=True)
class EquivClass:
    """The class <a_1, ..., a_l> = <x^l + a_1 x^(l-1) + ... + a_l>."""

    ell: int
    leading: tuple

    def index(self, q):
        """Canonical integer: base-q digits with a_1 least significant."""
        out = 0
        for a in reversed(self.leading):
            out = out * q + a
        return out

    @classmethod
    def from_index(cls, idx, q, ell):
        lead = []
        for _ in range(ell):
            idx, d = divmod(idx, q)
            lead.append(d)
        return cls(ell, tuple(lead))

    def to_json(self):
        return {"ell": self.ell, "leading": list(self.leading)}

    @classmethod
    def from_json(cls, obj):
        lead = tuple(int(a) for a in obj["leading"])
        if obj["ell"] != len(lead):
            raise ValueError("ell does not match leading length")
        return cls(obj["ell"], lead)


def identity_class(ell):
    return EquivClass(ell, (0,) * ell)


def all_classes(q, ell):
    for lead in itertools.product(range(q), repeat=ell):
        yield EquivClass(ell, lead[::-1])


def leading_coeffs(f, ell):
    """Class of ``f``; missing coefficients count as zero."""
    lead = tuple(f.coeffs[:ell])
    return EquivClass(ell, lead + (0,) * (ell - len(lead)))


def class_multiply(spec, e1, e2):
    if e1.ell != e2.ell:
        raise PreconditionError("cannot multiply classes with different ell")
    a = (1,) + e1.leading
    b = (1,) + e2.leading
    out = []
    for t in range(1, e1.ell + 1):
        s = 0
        for i in range(t + 1):
            s = spec.add(s, spec.mul(a[i], b[t - i]))
        out.append(s)
    return EquivClass(e1.ell, tuple(out))


def class_inverse(spec, e):
    a = (1,) + e.leading
    b = [1]
    for t in range(1, e.ell + 1):
        s = 0
        for i in range(1, t + 1):
            s = spec.add(s, spec.mul(a[i], b[t - i]))
        b.append(spec.neg(s))
    return EquivClass(e.ell, tuple(b[1:]))


def linear_class(beta, ell):
    """<x + beta> truncated to ell leading coefficients."""
    if ell == 0:
        return EquivClass(0, ())
    return EquivClass(ell, (beta,) + (0,) * (ell - 1))


def product_class(spec, shifts, ell):
    """Class of prod (x + s) over the given shifts."""
    e = identity_class(ell)
    for s in shifts:
        e = class_multiply(spec, e, linear_class(s, ell))
    return e


def count_distinct_roots_in(spec, f, D):
    return sum(1 for alpha in D.elements if f(spec, alpha) == 0)


def class_size(q, ell, d):
    if d < ell:
        raise PreconditionError("degree must be at least ell")
    return q ** (d - ell)


def enumerate_class(spec, e, d, start=0, stop=None):
    """Members of M_d(e) in canonical order.

    Member ``m`` has free coefficients given by the base-q digits of ``m``
    with the constant term least significant.  ``start``/``stop`` select a
    contiguous slice so independent workers can split the stream.
    """
    if d < e.ell:
        raise PreconditionError(f"degree {d} is below ell={e.ell}")
    free = d - e.ell
    total = spec.q**free
    stop = total if stop is None else min(stop, total)
    q = spec.q
    for m in range(start, stop):
        low = []
        for _ in range(free):
            m, digit = divmod(m, q)
            low.append(digit)
        yield MonicPoly(e.leading + tuple(reversed(low)))
