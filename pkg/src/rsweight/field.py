"""Finite fields GF(p^a) with a reproducible modulus, plus evaluation sets.

Elements are plain integers in ``[0, q)``: the base-``p`` little-endian
encoding of the coefficient vector in ``GF(p)[x]/(modulus)``.  Index 0 is
zero, index 1 is one, and index ``c < p`` is the constant ``c``.
"""

from dataclasses import dataclass, field
from functools import cached_property
import itertools

from .errors import PreconditionError

MAX_FIELD_SIZE = 2**20
ADD_TABLE_LIMIT = 1024
LOG_TABLE_LIMIT = 2**16


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over GF(p), coefficient lists with the constant term first --

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _gfp_rem(num, den, p):
    num = _trim(num)
    den = _trim(den)
    inv_lead = pow(den[-1], p - 2, p)
    dd = len(den) - 1
    while len(num) - 1 >= dd and num:
        shift = len(num) - 1 - dd
        factor = num[-1] * inv_lead % p
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - factor * c) % p
        num = _trim(num)
    return num


def _monic_polys(p, degree):
    for low in itertools.product(range(p), repeat=degree):
        yield list(low) + [1]


def is_irreducible_gfp(poly, p):
    """Trial division by every monic polynomial of degree <= deg/2."""
    poly = _trim(poly)
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for div in _monic_polys(p, d):
            if not _gfp_rem(poly, div, p):
                return False
    return True


def smallest_irreducible(p, a):
    """Monic irreducible of degree ``a`` with the smallest base-p code (constant least significant)."""
    for code in range(p**a):
        low = []
        c = code
        for _ in range(a):
            c, digit = divmod(c, p)
            low.append(digit)
        cand = low + [1]
        if is_irreducible_gfp(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable for prime p


class FieldSpec:
    """GF(p^a) realized as GF(p)[x]/(modulus).

    Use :func:`build_field` rather than calling this directly; the
    constructor trusts its arguments apart from the irreducibility check.
    """

    def __init__(self, p, a, modulus):
        self.p = p
        self.a = a
        self.modulus = tuple(modulus)
        self.q = p**a
        if len(self.modulus) != a + 1 or self.modulus[-1] != 1:
            raise PreconditionError("modulus must be monic of degree a")
        if not is_irreducible_gfp(self.modulus, p):
            raise PreconditionError("modulus is reducible over GF(p)")
        self._add = None
        if self.q <= ADD_TABLE_LIMIT:
            self._add = [[self._add_digits(x, y) for y in range(self.q)] for x in range(self.q)]

    def __repr__(self):
        return f"FieldSpec({self.p}^{self.a}, modulus={list(self.modulus)})"

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.a, self.modulus) == (
            other.p, other.a, other.modulus)

    def __hash__(self):
        return hash((self.p, self.a, self.modulus))

    @property
    def name(self):
        return f"{self.p}^{self.a}"

    def elements(self):
        return range(self.q)

    # -- encoding --

    def coeffs(self, x):
        out = []
        for _ in range(self.a):
            x, d = divmod(x, self.p)
            out.append(d)
        return tuple(out)

    def from_coeffs(self, coeffs):
        if len(coeffs) > self.a:
            raise ValueError("too many coefficients")
        x = 0
        for c in reversed(coeffs):
            x = x * self.p + (c % self.p)
        return x

    def element(self, x):
        return FieldElement(self._check(x), self)

    def scalar(self, c):
        """Image of the integer ``c`` in the prime subfield."""
        return c % self.p

    def _check(self, x):
        if not 0 <= x < self.q:
            raise ValueError(f"{x} is not an element index of GF({self.name})")
        return x

    # -- additive structure --

    def _add_digits(self, x, y):
        p = self.p
        if p == 2:
            return x ^ y
        out, scale = 0, 1
        while x or y:
            x, dx = divmod(x, p)
            y, dy = divmod(y, p)
            out += ((dx + dy) % p) * scale
            scale *= p
        return out

    def add(self, x, y):
        if self._add is not None:
            return self._add[x][y]
        return self._add_digits(x, y)

    def neg(self, x):
        p = self.p
        if p == 2:
            return x
        out, scale = 0, 1
        while x:
            x, d = divmod(x, p)
            out += ((-d) % p) * scale
            scale *= p
        return out

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def smul(self, c, x):
        """``c·x`` for an integer ``c`` (repeated addition, done digit-wise)."""
        c %= self.p
        out, scale = 0, 1
        while x:
            x, d = divmod(x, self.p)
            out += (c * d % self.p) * scale
            scale *= self.p
        return out

    # -- multiplicative structure --

    def _mul_poly(self, x, y):
        p, a = self.p, self.a
        cx, cy = self.coeffs(x), self.coeffs(y)
        prod = [0] * (2 * a - 1)
        for i, u in enumerate(cx):
            if u:
                for j, v in enumerate(cy):
                    prod[i + j] = (prod[i + j] + u * v) % p
        m = self.modulus
        for top in range(2 * a - 2, a - 1, -1):
            c = prod[top]
            if c:
                for i in range(a + 1):
                    prod[top - a + i] = (prod[top - a + i] - c * m[i]) % p
        return self.from_coeffs(prod[:a])

    @cached_property
    def _log_tables(self):
        q = self.q
        if q == 2:
            return [1, 1], [None, 0]
        order = q - 1
        factors = _prime_factors(order)
        for g in range(2, q):
            if all(self._pow_slow(g, order // f) != 1 for f in factors):
                break
        exp = [0] * order
        log = [None] * q
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = self._mul_poly(x, g)
        return exp, log

    def _pow_slow(self, x, e):
        result = 1
        while e:
            if e & 1:
                result = self._mul_poly(result, x)
            x = self._mul_poly(x, x)
            e >>= 1
        return result

    def mul(self, x, y):
        if x == 0 or y == 0:
            return 0
        if self.q <= LOG_TABLE_LIMIT:
            exp, log = self._log_tables
            return exp[(log[x] + log[y]) % (self.q - 1)]
        return self._mul_poly(x, y)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero in GF(%s)" % self.name)
        if self.q <= LOG_TABLE_LIMIT:
            exp, log = self._log_tables
            return exp[(-log[x]) % (self.q - 1)]
        return self.pow(x, self.q - 2)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def pow(self, x, e):
        """Square-and-multiply; negative exponents invert first."""
        if e < 0:
            x, e = self.inv(x), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            e >>= 1
        return result

    # -- tables for the compiled kernels --

    @cached_property
    def add_table(self):
        import numpy as np
        if self._add is None:
            raise PreconditionError(f"no addition table for q > {ADD_TABLE_LIMIT}")
        return np.array(self._add, dtype=np.int32)

    @cached_property
    def mul_table(self):
        import numpy as np
        if self.q > ADD_TABLE_LIMIT:
            raise PreconditionError(f"no multiplication table for q > {ADD_TABLE_LIMIT}")
        q = self.q
        return np.array([[self.mul(x, y) for y in range(q)] for x in range(q)], dtype=np.int32)

    # -- characters and subfields --

    def subfield_elements(self, n):
        b = _log_exact(n, self.p)
        if b is None or b == 0 or self.a % b:
            raise PreconditionError(f"GF({n}) is not a subfield of GF({self.name})")
        return tuple(x for x in range(self.q) if self.pow(x, n) == x)

    def quadratic_character(self, x, n=None):
        """eta(x) over the subfield of order ``n`` (default: the whole field).

        Returns 0 for x = 0, 1 for nonzero squares and -1 otherwise.
        """
        if self.p == 2:
            raise PreconditionError("quadratic character requires odd characteristic")
        n = self.q if n is None else n
        if x == 0:
            return 0
        if n != self.q and self.pow(x, n) != x:
            raise PreconditionError(f"element {x} is not in GF({n})")
        t = self.pow(x, (n - 1) // 2)
        if t == 1:
            return 1
        assert t == self.neg(1)
        return -1

    def to_json(self):
        return {"field": self.name, "modulus": list(self.modulus)}


def _log_exact(n, p):
    b = 0
    while n > 1 and n % p == 0:
        n //= p
        b += 1
    return b if n == 1 else None


def build_field(p, a, max_size=MAX_FIELD_SIZE):
    """Deterministic GF(p^a) using the smallest monic irreducible modulus."""
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if a < 1:
        raise PreconditionError("extension degree must be >= 1")
    if p**a > max_size:
        raise PreconditionError(f"field size {p}^{a} exceeds bound {max_size}")
    return FieldSpec(p, a, smallest_irreducible(p, a))


def field_from_json(obj):
    p, a = (int(t) for t in obj["field"].split("^"))
    return FieldSpec(p, a, obj["modulus"])


@dataclass(frozen=True, order=True)
class FieldElement:
    """Operator-friendly wrapper around an element index."""

    index: int
    spec: FieldSpec = field(compare=False, repr=False)

    def _wrap(self, x):
        return FieldElement(x, self.spec)

    def _idx(self, other):
        if isinstance(other, FieldElement):
            return other.index
        return self.spec.scalar(other)

    @property
    def coeffs(self):
        return self.spec.coeffs(self.index)

    def __add__(self, other):
        return self._wrap(self.spec.add(self.index, self._idx(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.spec.sub(self.index, self._idx(other)))

    def __neg__(self):
        return self._wrap(self.spec.neg(self.index))

    def __mul__(self, other):
        return self._wrap(self.spec.mul(self.index, self._idx(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(self.spec.div(self.index, self._idx(other)))

    def __pow__(self, e):
        return self._wrap(self.spec.pow(self.index, e))

    def inverse(self):
        return self._wrap(self.spec.inv(self.index))

    def __int__(self):
        return self.index


# -- evaluation sets --

DOMAIN_KINDS = ("full", "subfield", "subgroup", "punctured", "explicit")


@dataclass(frozen=True)
class DomainSet:
    kind: str
    elements: tuple
    param: object = None

    @property
    def n(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self._members

    @cached_property
    def _members(self):
        return frozenset(self.elements)

    def to_json(self):
        out = {"kind": self.kind, "elements": list(self.elements)}
        if self.param is not None:
            out["param"] = list(self.param) if isinstance(self.param, tuple) else self.param
        return out


def span(spec, basis):
    """GF(p)-span of the basis vectors, sorted."""
    out = {0}
    for v in basis:
        multiples = [spec.smul(c, v) for c in range(spec.p)]
        out = {spec.add(x, m) for x in out for m in multiples}
    return tuple(sorted(out))


def is_additive_subgroup(spec, elements):
    s = set(elements)
    if 0 not in s:
        return False
    return all(spec.sub(x, y) in s for x in s for y in s)


def build_domain(spec, kind, value=None):
    """Build an evaluation set.

    ``value`` is ``n`` for ``subfield``, a basis for ``subgroup`` and
    ``punctured``, and an element list for ``explicit``.
    """
    if kind == "full":
        return DomainSet("full", tuple(range(spec.q)))
    if kind == "subfield":
        return DomainSet("subfield", spec.subfield_elements(int(value)), int(value))
    if kind in ("subgroup", "punctured"):
        basis = tuple(int(v) for v in value)
        for v in basis:
            spec._check(v)
        elems = span(spec, basis)
        if kind == "subgroup":
            return DomainSet("subgroup", elems, basis)
        elems = tuple(x for x in elems if x != 0)
        if not elems or not is_additive_subgroup(spec, (0,) + elems):
            raise PreconditionError("punctured set plus zero is not an additive subgroup")
        return DomainSet("punctured", elems, basis)
    if kind == "explicit":
        items = [spec._check(int(v)) for v in value]
        if len(set(items)) != len(items):
            raise PreconditionError("explicit domain has duplicate elements")
        return DomainSet("explicit", tuple(sorted(items)))
    raise PreconditionError(f"unknown domain kind {kind!r}")


def domain_from_json(spec, obj):
    kind = obj["kind"]
    if kind == "full":
        return build_domain(spec, "full")
    if kind == "explicit":
        return build_domain(spec, "explicit", obj["elements"])
    dom = build_domain(spec, kind, obj["param"])
    if list(dom.elements) != list(obj["elements"]):
        raise ValueError("serialized domain elements do not match their parameters")
    return dom


# -- structural predicates used by engine selection --

def domain_is_subgroup(spec, D):
    return is_additive_subgroup(spec, D.elements)


def domain_is_punctured_subgroup(spec, D):
    return 0 not in D and D.n > 0 and is_additive_subgroup(spec, (0,) + D.elements)


def domain_subfield_order(spec, D):
    """``n`` if D is exactly the subfield GF(n) of the field, else None."""
    n = D.n
    b = _log_exact(n, spec.p)
    if b is None or b == 0 or spec.a % b:
        return None
    if set(D.elements) == set(spec.subfield_elements(n)):
        return n
    return None
