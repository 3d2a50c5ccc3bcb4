"""Mean and variance of the distance from a received word to a random codeword."""

from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraElement, series_F, extract_count
from .combinatorics import fraction_str
from .errors import PreconditionError
from .polynomials import leading_coeffs, linear_class
from .oracle import distance_distribution, empirical_moments


@dataclass(frozen=True)
class MomentReport:
    mean: Fraction
    variance: Fraction
    source: str

    def to_json(self):
        return {"mean": fraction_str(self.mean), "variance": fraction_str(self.variance),
                "source": self.source}


def expected_distance(q, n):
    if not 0 <= n <= q:
        raise PreconditionError("need 0 <= n <= q")
    return Fraction((q - 1) * n, q)


def variance_distance(q, n):
    if not 0 <= n <= q:
        raise PreconditionError("need 0 <= n <= q")
    return Fraction((q - 1) * n, q * q)


def closed_form_moments(q, n):
    return MomentReport(expected_distance(q, n), variance_distance(q, n), "closed_form")


def factorial_moments_via_series(spec, f, k, D):
    """First and second factorial moments of the number of agreements n - Z.

    Both are coefficients of ``<f> z^(k+l)`` in u-derivatives of the marked
    generating function at u = 1:
    ``z F(z) sum <x+a>`` and ``z^2 F(z) ((sum <x+a>)^2 - sum <x+a>^2)``.
    ``f`` has degree ``k + l``; ``l`` is inferred from it.  The second
    moment is ``None`` when k = 1.  Both values are checked against
    ``n q^(k-1)`` and ``(n^2 - n) q^(k-2)``.
    """
    ell = f.degree - k
    if ell < 1 or k < 1:
        raise PreconditionError("need k >= 1 and f of degree k + l with l >= 1")
    dmax = k + ell
    F = series_F(spec, ell, dmax)
    lin = [AlgebraElement.of_class(spec, linear_class(a, ell)) for a in D.elements]
    s1 = AlgebraElement(spec, ell)
    s2 = AlgebraElement(spec, ell)
    for x in lin:
        s1 = s1 + x
        s2 = s2 + x * x
    first_series = (F * s1).shift(1)
    second_series = (F * (s1 * s1 - s2)).shift(2)
    e = leading_coeffs(f, ell)
    n, q = D.n, spec.q
    first = extract_count(first_series, dmax, e)
    if first != n * q ** (k - 1):
        raise ArithmeticError(f"first factorial moment {first} != n q^(k-1)")
    if k < 2:
        return first, None
    second = extract_count(second_series, dmax, e)
    if second != (n * n - n) * q ** (k - 2):
        raise ArithmeticError(f"second factorial moment {second} != (n^2 - n) q^(k-2)")
    return first, second


def series_moments(spec, f, k, D):
    """Mean and variance of Z rebuilt from the factorial moments."""
    first, second = factorial_moments_via_series(spec, f, k, D)
    if second is None:
        raise PreconditionError("variance via the series path needs k >= 2")
    total = spec.q**k
    mu = first / total
    var = second / total + mu - mu * mu
    return MomentReport(D.n - mu, var, "factorial_moment_path")


def enumerated_moments(spec, f, k, D, budget=None):
    mean, var = empirical_moments(distance_distribution(spec, f, k, D, budget=budget))
    return MomentReport(mean, var, "empirical")
