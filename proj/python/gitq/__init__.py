"""Exact GIT stability for weighted point configurations in the projective plane.

Weights and coordinates may be given as ints, ``fractions.Fraction`` or
strings such as ``"3/4"``; indices are 1-based.  Reports come back as plain
dicts decoded from the library's JSON documents.
"""

import json
from fractions import Fraction

from . import _core
from ._core import InputError, InvariantError, SCHEMA

__all__ = [
    "SCHEMA",
    "InputError",
    "InvariantError",
    "gamma_point",
    "gamma_line",
    "generic_stability",
    "classify_points",
    "locate",
    "chambers",
    "classify_quotient",
    "wall_crossing",
    "toric_model",
    "dual_cone_rays",
    "hilbert_table",
    "relation_residuals",
    "run",
]


def _exact(value):
    if isinstance(value, bool):
        raise TypeError("booleans are not weights or coordinates")
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, str):
        return value.strip()
    raise TypeError(f"expected int, Fraction or str, got {type(value).__name__}")


def _weights(m):
    return [_exact(x) for x in m]


def _points(points):
    return [[_exact(c) for c in p] for p in points]


def gamma_point(m, K):
    return _core.gamma_point(_weights(m), list(K))


def gamma_line(m, J):
    return _core.gamma_line(_weights(m), list(J))


def generic_stability(m):
    return json.loads(_core.generic_stability(_weights(m)))


def classify_points(m, points):
    return json.loads(_core.classify_points(_weights(m), _points(points)))


def locate(m):
    return json.loads(_core.locate(_weights(m)))


def chambers(n, bound=40, threads=0):
    return json.loads(_core.chambers(n, bound, threads))


def classify_quotient(m):
    return json.loads(_core.classify_quotient(_weights(m)))


def wall_crossing(m_hat, m):
    return json.loads(_core.wall_crossing(_weights(m_hat), _weights(m)))


def toric_model(weights, inverted=(), bound=6):
    return json.loads(_core.toric_model([list(r) for r in weights], list(inverted), bound))


def dual_cone_rays(generators):
    return [tuple(r) for r in _core.dual_cone_rays([list(g) for g in generators])]


def hilbert_table(kmax):
    return json.loads(_core.hilbert_table(kmax))


def relation_residuals(points):
    u, f3 = _core.relation_residuals(_points(points))
    return Fraction(u), Fraction(f3)


def run(*args):
    """Runs a CLI subcommand in-process; returns (exit_code, stdout, diagnostics)."""
    code, output, diagnostics = _core.run([str(a) for a in args])
    return code, output, list(diagnostics)
