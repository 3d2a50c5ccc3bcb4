"""Command-line interface.

Field elements are given as canonical indices: the element
c0 + c1 t + c2 t^2 + ... of GF(p^a) is the integer c0 + c1 p + c2 p^2 + ...

Exit codes: 0 ok, 1 verification found discrepancies, 2 precondition
refusal, 3 enumeration budget refusal.
"""

import argparse
import csv
import io
import itertools
import logging
import sys

from . import counting
from .combinatorics import sieve_N_from_M
from .counting import CountQuery, select_engine
from .errors import BudgetExceeded, PreconditionError
from .field import DOMAIN_KINDS, build_domain, build_field
from .moments import closed_form_moments, enumerated_moments, series_moments
from .oracle import distance_distribution, oracle_N_vector
from .polynomials import MonicPoly
from .serialize import count_cell, dumps, estimate_cell
from .verify import run_verify

log = logging.getLogger("rsweight")

EXIT_OK, EXIT_MISMATCH, EXIT_PRECONDITION, EXIT_BUDGET = 0, 1, 2, 3
ENGINES = ("auto", "theorem1", "theorem2", "theorem3", "theorem4", "theorem5", "series", "oracle")
CSV_HEADER = ("gamma1", "gamma2", "r", "engine", "value")


def _int_list(text):
    return [int(t) for t in text.split(",") if t.strip()]


def _add_query_args(sp, need_k=True):
    sp.add_argument("--p", type=int, required=True, help="characteristic")
    sp.add_argument("--a", type=int, default=1, help="extension degree (q = p^a)")
    sp.add_argument("--domain", choices=DOMAIN_KINDS, default=None,
                    help="evaluation set D (default: full field)")
    sp.add_argument("--n", type=int, help="subfield order for --domain subfield")
    sp.add_argument("--basis", type=_int_list, help="comma-separated basis for subgroup/punctured")
    sp.add_argument("--elements", type=_int_list, help="comma-separated elements for explicit")
    sp.add_argument("--k", type=int, required=need_k, help="code dimension")
    sp.add_argument("--ell", type=int, help="number of prescribed coefficients")
    sp.add_argument("--gamma", type=_int_list, default=None,
                    help="comma-separated prescribed coefficients gamma1,...,gamma_ell")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--budget", type=int, default=None,
                    help="enumeration budget (default $RSWEIGHT_BUDGET or 10^7)")
    sp.add_argument("--workers", type=int, default=None, help="processes for enumeration")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rsweight",
        description="Exact counts of Reed-Solomon codewords by distance from a received word. "
                    "Field elements are canonical base-p indices.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in (("count", "N(f, r) for one class"),
                           ("table", "N(f, r) over all r, sweeping classes when --gamma is omitted")):
        sp = sub.add_parser(name, help=helptext)
        _add_query_args(sp)
        sp.add_argument("--r", type=int, default=None, help="root count (default: all)")
        sp.add_argument("--engine", choices=ENGINES, default="auto")

    sp = sub.add_parser("distribution", help="distance histogram by codeword enumeration")
    _add_query_args(sp)
    sp.add_argument("--low", type=_int_list, default=None,
                    help="remaining coefficients of f below the prescribed ones (default zero)")

    sp = sub.add_parser("moments", help="mean and variance of the distance")
    _add_query_args(sp, need_k=False)
    sp.add_argument("--low", type=_int_list, default=None)

    sp = sub.add_parser("verify", help="cross-check every engine against enumeration")
    sp.add_argument("--max-q", type=int, default=9)
    sp.add_argument("--include-large", action="store_true",
                    help="add the q = 81, D = GF(9) sweep for l = 2")
    sp.add_argument("--mutate", default=None,
                    help="add 1 to one engine's output (detector self-test)")
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--workers", type=int, default=None)
    return parser


# -- config resolution --

def _domain(args, spec, default_explicit=False):
    kind = args.domain
    if kind is None:
        if default_explicit and args.n is not None:
            return build_domain(spec, "explicit", range(args.n))
        kind = "full"
    if kind == "subfield":
        if args.n is None:
            raise PreconditionError("--domain subfield needs --n")
        return build_domain(spec, kind, args.n)
    if kind in ("subgroup", "punctured"):
        if not args.basis:
            raise PreconditionError(f"--domain {kind} needs --basis")
        return build_domain(spec, kind, args.basis)
    if kind == "explicit":
        if args.elements is None:
            raise PreconditionError("--domain explicit needs --elements")
        return build_domain(spec, kind, args.elements)
    return build_domain(spec, kind)


def _ell(args):
    if args.ell is not None:
        if args.gamma is not None and len(args.gamma) != args.ell:
            raise PreconditionError("--gamma must list exactly ell values")
        return args.ell
    if args.gamma is None:
        raise PreconditionError("give --ell or --gamma")
    return len(args.gamma)


def _gamma_list(args, spec, ell):
    if args.gamma is not None:
        return [tuple(args.gamma)]
    return list(itertools.product(range(spec.q), repeat=ell))


def _received_word(args, k, ell):
    gam = tuple(args.gamma) if args.gamma is not None else (0,) * ell
    low = tuple(args.low) if args.low else (0,) * k
    if len(gam) != ell or len(low) != k:
        raise PreconditionError("need ell prescribed and k remaining coefficients")
    return MonicPoly(gam + low)


# -- evaluation --

def _resolve_engine(name, query, budget):
    if name == "auto":
        chosen = select_engine(query, budget)
        log.info("auto engine for %s: %s", query.to_json(), chosen)
        return chosen
    return name


def _cells(args, spec, D, ell):
    k = args.k
    r_values = [args.r] if args.r is not None else list(range(k + ell + 1))
    workers = args.workers
    for gam in _gamma_list(args, spec, ell):
        query = CountQuery(spec, D, k, gam)
        engine = _resolve_engine(args.engine, query, args.budget)
        if engine == "theorem5":
            for r in r_values:
                yield estimate_cell(gam, r, counting.theorem5_estimate(query.with_r(r)))
            continue
        if engine == "oracle":
            vec = oracle_N_vector(spec, D, k, gam, partitions=workers or 1,
                                  workers=workers, budget=args.budget)
        elif engine == "series":
            vec = sieve_N_from_M(counting.series_M_vector(query, args.budget))
        elif engine == "theorem1":
            vec = [counting.theorem1_N(query.with_r(r), args.budget) for r in range(k + ell + 1)]
        else:
            vec = counting.N_vector(counting.EXACT_ENGINES[engine], query)
        for r in r_values:
            yield count_cell(gam, r, engine, vec[r] if r < len(vec) else 0)


def _csv(rows, header=CSV_HEADER):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _count_csv(cells):
    rows = []
    for c in cells:
        g = c["gamma"] + [""] * (2 - len(c["gamma"]))
        rows.append([g[0], g[1], c["r"], c["engine"], c["N"] if "N" in c else c["main"]])
    return _csv(rows)


def cmd_count(args):
    spec = build_field(args.p, args.a)
    D = _domain(args, spec)
    ell = _ell(args)
    cells = list(_cells(args, spec, D, ell))
    if args.format == "csv":
        return _count_csv(cells)
    return dumps({"field": spec.name, "domain": D.to_json(), "k": args.k, "ell": ell,
                  "results": cells})


cmd_table = cmd_count


def cmd_distribution(args):
    spec = build_field(args.p, args.a)
    D = _domain(args, spec)
    ell = _ell(args)
    f = _received_word(args, args.k, ell)
    hist = distance_distribution(spec, f, args.k, D, budget=args.budget)
    if args.format == "csv":
        gam = list(f.coeffs[:ell]) + [""] * (2 - ell)
        rows = [[gam[0], gam[1], D.n - d, "enumeration", str(c)]
                for d, c in sorted(hist.counts.items())]
        return _csv(rows)
    return dumps({"field": spec.name, "domain": D.to_json(), "k": args.k, "ell": ell,
                  "received": list(f.coeffs), "histogram": hist.to_json(),
                  "total": str(hist.total)})


def cmd_moments(args):
    spec = build_field(args.p, args.a)
    D = _domain(args, spec, default_explicit=True)
    reports = [closed_form_moments(spec.q, D.n)]
    if args.k is not None:
        ell = args.ell if args.ell is not None else (len(args.gamma) if args.gamma else 1)
        f = _received_word(args, args.k, ell)
        if args.k >= 2:
            reports.append(series_moments(spec, f, args.k, D))
        reports.append(enumerated_moments(spec, f, args.k, D, budget=args.budget))
    if args.format == "csv":
        return _csv([[m.source, m.to_json()["mean"], m.to_json()["variance"]] for m in reports],
                    header=("source", "mean", "variance"))
    out = reports[0].to_json()
    out.update({"field": spec.name, "n": D.n, "reports": [m.to_json() for m in reports]})
    return dumps(out)


def cmd_verify(args):
    report = run_verify(max_q=args.max_q, include_large=args.include_large,
                        mutate=args.mutate, workers=args.workers, budget=args.budget)
    return dumps(report.to_json()), (EXIT_OK if report.ok else EXIT_MISMATCH)


COMMANDS = {"count": cmd_count, "table": cmd_table, "distribution": cmd_distribution,
            "moments": cmd_moments, "verify": cmd_verify}


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        result = COMMANDS[args.command](args)
    except PreconditionError as exc:
        sys.stdout.write(dumps({"error": "precondition", "reason": exc.reason}))
        return EXIT_PRECONDITION
    except BudgetExceeded as exc:
        sys.stdout.write(dumps({"error": "budget", "reason": str(exc),
                                "needed": str(exc.needed), "budget": str(exc.budget)}))
        return EXIT_BUDGET
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    sys.stdout.write(result)
    return code
