"""Exact nonnegativity of sine and cosine polynomials on [0, pi].

``sum a_k sin(kx) = sin(x) P(cos x)`` with sin(x) > 0 inside (0, pi), so the
sine polynomial is NN on [0, pi] iff P >= 0 on [-1, 1].  For a cosine
polynomial the reduction is direct.
"""

from __future__ import annotations

import math

from .polys import CosinePoly, SinePoly, cosine_to_algebraic, sine_to_algebraic
from .sturm import Verdict, is_nonneg_on


def _attach_angle(v: Verdict) -> Verdict:
    if v.witness_X is not None:
        v.witness_x = math.acos(max(-1.0, min(1.0, float(v.witness_X))))
    return v


def certify_sine(p: SinePoly) -> Verdict:
    return _attach_angle(is_nonneg_on(sine_to_algebraic(p), -1, 1))


def certify_cosine(p: CosinePoly) -> Verdict:
    return _attach_angle(is_nonneg_on(cosine_to_algebraic(p), -1, 1))


def certify(p: SinePoly | CosinePoly) -> Verdict:
    if isinstance(p, SinePoly):
        return certify_sine(p)
    return certify_cosine(p)
