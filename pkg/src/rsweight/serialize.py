"""JSON encoding for reports: integers as decimal strings, rationals as "num/den".

Counts outgrow 64 bits quickly, so nothing numeric is left to a JSON
number except small structural fields (r, k, ell, field indices).
"""

from fractions import Fraction
import json

from .combinatorics import QuadExtValue, fraction_str


def encode_value(x):
    if isinstance(x, bool):
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return fraction_str(x)
    if isinstance(x, QuadExtValue):
        return x.to_json()
    raise TypeError(f"cannot encode {type(x).__name__}")


def decode_value(obj):
    """Inverse of :func:`encode_value`."""
    if isinstance(obj, dict):
        return QuadExtValue.from_json(obj)
    if "/" in obj:
        num, den = obj.split("/")
        return Fraction(int(num), int(den))
    return int(obj)


def dumps(obj):
    """Canonical text: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def count_cell(gammas, r, engine, value):
    return {"gamma": list(gammas), "r": r, "engine": engine, "N": encode_value(value)}


def estimate_cell(gammas, r, est):
    cell = {"gamma": list(gammas), "r": r, "engine": "theorem5",
            "main": encode_value(est.main), "bound": encode_value(est.bound)}
    if est.exact_value is not None:
        cell["exact"] = encode_value(est.exact_value)
        cell["holds"] = est.holds()
    return cell


def parse_count_cell(cell):
    out = dict(cell)
    for key in ("N", "main", "bound", "exact"):
        if key in out:
            out[key] = decode_value(out[key])
    return out
