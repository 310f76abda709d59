"""Exact solutions of A^4 + h B^4 = C^4 + h D^4.

Rationals are passed as strings such as ``"103/8"``; points as ``(x, y)``
string pairs, ``None`` being the point at infinity. Quadruples come back as
dicts whose A..D entries are Python ints and whose ``h`` is a string.
"""

import json

from . import _core
from ._core import InvalidInput, ResourceRefused, VerificationFailure

__all__ = [
    "InvalidInput",
    "ResourceRefused",
    "VerificationFailure",
    "verify",
    "discriminant",
    "contains",
    "add",
    "mul",
    "build_curve",
    "build_depressed",
    "build_eprime",
    "solve",
    "point_to_mpq",
    "descale_twist",
    "integerize",
    "reduce_to_integer",
    "rescale_to",
    "point_to_h",
    "enumerate_hz",
    "h_to_quadruple",
    "list_families",
    "eval_family",
    "mitm_search",
    "survey",
    "to_record",
]

_INT_FIELDS = ("A", "B", "C", "D", "max")


def _load(line):
    if line is None:
        return None
    rec = json.loads(line)
    for key in _INT_FIELDS:
        if key in rec:
            rec[key] = int(rec[key])
    return rec


def to_record(rec):
    """JSON line for a quadruple dict, as accepted by ``quartic verify --records``."""
    out = dict(rec)
    for key in _INT_FIELDS:
        if key in out:
            out[key] = str(out[key])
    return json.dumps(out, separators=(",", ":"))


def _pt(p):
    return None if p is None else (str(p[0]), str(p[1]))


def _curve(c):
    return tuple(str(a) for a in c)


def verify(h, A, B, C, D):
    return _core.verify(str(h), str(A), str(B), str(C), str(D))


def discriminant(curve):
    return _core.discriminant(_curve(curve))


def contains(curve, p):
    return _core.contains(_curve(curve), _pt(p))


def add(curve, p, q):
    return _core.add(_curve(curve), _pt(p), _pt(q))


def mul(curve, n, p):
    return _core.mul(_curve(curve), str(n), _pt(p))


def build_curve(h):
    return _core.build_curve(str(h))


def build_depressed(h):
    return _core.build_depressed(str(h))


def build_eprime(z):
    return _core.build_eprime(str(z))


def solve(h, gen, n_max):
    return [_load(s) for s in _core.solve(str(h), _pt(gen), n_max)]


def point_to_mpq(h, p):
    return _core.point_to_mpq(str(h), _pt(p))


def descale_twist(rec, t):
    return _load(_core.descale_twist(to_record(rec), str(t)))


def integerize(rec):
    return _load(_core.integerize(to_record(rec)))


def reduce_to_integer(rec):
    return _load(_core.reduce_to_integer(to_record(rec)))


def rescale_to(rec, target):
    return _load(_core.rescale_to(to_record(rec), str(target)))


def point_to_h(z, p, multiple_index=1):
    return _load(_core.point_to_h(str(z), _pt(p), multiple_index))


def enumerate_hz(z, gen, n_max):
    """(hvalue records, count of skipped degenerate multiples)."""
    values, skipped = _core.enumerate_hz(str(z), _pt(gen), n_max)
    return [_load(v) for v in values], skipped


def h_to_quadruple(z, p, multiple_index=1):
    return _load(_core.h_to_quadruple(str(z), _pt(p), multiple_index))


def list_families():
    return _core.list_families()


def eval_family(name, params):
    """(raw terms as strings, normalized quadruple or None when trivial)."""
    terms, quad = _core.eval_family(name, [str(p) for p in params])
    return terms, _load(quad)


def mitm_search(h, bound, threads=1, segments=0):
    return [_load(s) for s in _core.mitm_search(str(h), bound, threads, segments)]


def survey(h_lo, h_hi, bound, threads=1):
    return [
        {"h": h, "hit_count": n, "smallest": _load(s)}
        for h, n, s in _core.survey(h_lo, h_hi, bound, threads)
    ]
