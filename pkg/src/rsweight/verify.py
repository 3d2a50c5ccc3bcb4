"""Cross-engine verification sweeps.

Every applicable engine is compared against the enumeration oracle cell
by cell; each disagreement becomes a :class:`Discrepancy` naming the
engines, the query and both values.
"""

from dataclasses import dataclass, field
import itertools

from . import counting
from .counting import CountQuery, N_vector, engine_applicable
from .errors import PreconditionError
from .field import build_domain, build_field
from .moments import closed_form_moments, enumerated_moments, series_moments
from .oracle import oracle_N_vector
from .polynomials import MonicPoly
from .serialize import encode_value

DEFAULT_FIELDS = ((3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2))


@dataclass
class Discrepancy:
    check: str
    query: dict
    values: dict

    def to_json(self):
        return {"check": self.check, "query": self.query,
                "values": {k: encode_value(v) for k, v in self.values.items()}}


@dataclass
class VerifyReport:
    checks: int = 0
    discrepancies: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.discrepancies

    def to_json(self):
        return {"checks": self.checks, "ok": self.ok,
                "discrepancies": [d.to_json() for d in self.discrepancies]}


def _engines(mutate=None):
    table = {
        "theorem1": counting.theorem1_N,
        "theorem2": counting.theorem2_N,
        "theorem3": counting.theorem3_N,
        "theorem4": counting.theorem4_N,
        "series": counting.series_N,
    }
    if mutate:
        if mutate not in table:
            raise PreconditionError(f"cannot mutate unknown engine {mutate!r}")
        inner = table[mutate]
        table[mutate] = lambda query: inner(query) + 1
    return table


def _domains(spec):
    out = [build_domain(spec, "full")]
    if spec.a > 1:
        out.append(build_domain(spec, "subfield", spec.p))
        out.append(build_domain(spec, "punctured", [1]))
    return out


def _compare(report, query, engines, oracle_vec, names):
    for name in names:
        if name != "theorem1" and name != "series" and not engine_applicable(name, query):
            continue
        got = N_vector(engines[name], query)
        for r, (a, b) in enumerate(zip(got, oracle_vec)):
            report.checks += 1
            if a != b:
                report.discrepancies.append(Discrepancy(
                    f"{name} vs oracle", query.with_r(r).to_json(), {name: a, "oracle": b}))


def _gamma_grid(spec, ell, limit):
    grid = list(itertools.product(range(spec.q), repeat=ell))
    if len(grid) <= limit:
        return grid
    step = len(grid) / limit
    return [grid[int(i * step)] for i in range(limit)]


def sweep_counts(report, spec, engines, workers=None, budget=None, class_limit=81):
    for D in _domains(spec):
        for ell, kmax in ((1, 2), (2, 1)):
            for k in range(kmax + 1):
                for gam in _gamma_grid(spec, ell, class_limit):
                    query = CountQuery(spec, D, k, gam)
                    oracle_vec = oracle_N_vector(spec, D, k, gam, partitions=workers or 1,
                                                 workers=workers, budget=budget)
                    names = ["theorem1", "series", "theorem2", "theorem3"]
                    if ell == 2:
                        names.append("theorem4")
                    _compare(report, query, engines, oracle_vec, names)


def sweep_theorem4_large(report, engines, workers=None, budget=None):
    """q = 81 with D = GF(9), every (gamma1, gamma2) in D^2, k <= 2."""
    spec = build_field(3, 4)
    D = build_domain(spec, "subfield", 9)
    for k in range(3):
        for gam in itertools.product(D.elements, repeat=2):
            query = CountQuery(spec, D, k, gam)
            oracle_vec = oracle_N_vector(spec, D, k, gam, partitions=workers or 1,
                                         workers=workers, budget=budget)
            _compare(report, query, engines, oracle_vec, ["theorem4"])


def sweep_estimates(report, spec, budget=None):
    if spec.p == 2:
        return
    for D in _domains(spec):
        for k in range(3):
            for gam in itertools.product(D.elements, repeat=2):
                query = CountQuery(spec, D, k, gam)
                try:
                    counting.theorem5_estimate(query)
                except counting.PreconditionError:
                    break
                exact_vec = oracle_N_vector(spec, D, k, gam, budget=budget)
                for r, val in enumerate(exact_vec):
                    est = counting.theorem5_estimate(query.with_r(r), val)
                    report.checks += 1
                    if not est.holds():
                        report.discrepancies.append(Discrepancy(
                            "theorem5 bound", query.with_r(r).to_json(),
                            {"oracle": val, "main": est.main, "bound": est.bound}))


def sweep_moments(report, spec, budget=None):
    D = build_domain(spec, "full")
    for ell in (1, 2):
        f = MonicPoly((1,) * ell + (0, 0))
        k = 2
        reports = [closed_form_moments(spec.q, D.n), series_moments(spec, f, k, D),
                   enumerated_moments(spec, f, k, D, budget=budget)]
        report.checks += 1
        if len({(m.mean, m.variance) for m in reports}) != 1:
            report.discrepancies.append(Discrepancy(
                "moments", {"field": spec.name, "n": D.n, "k": k, "ell": ell},
                {f"{m.source}_{part}": getattr(m, part) for m in reports
                 for part in ("mean", "variance")}))


def run_verify(max_q=9, include_large=False, mutate=None, workers=None, budget=None,
               fields=DEFAULT_FIELDS):
    """Run the default sweep over q <= max_q; exit status is ``report.ok``."""
    engines = _engines(mutate)
    report = VerifyReport()
    for p, a in fields:
        if p**a > max_q:
            continue
        spec = build_field(p, a)
        sweep_counts(report, spec, engines, workers, budget)
        sweep_estimates(report, spec, budget)
        sweep_moments(report, spec, budget)
    if include_large:
        sweep_theorem4_large(report, engines, workers, budget)
    return report
