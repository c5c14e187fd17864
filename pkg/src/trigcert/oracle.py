"""Floating point cross-checks for the test suite.

Nothing here feeds a certified verdict.  The oracles are deliberately naive
(dense sampling, sign changes on a grid) so they stay independent of the
exact machinery they are used to check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from .polys import AlgPoly, CosinePoly, SinePoly


@dataclass
class SampleReport:
    min_value: float
    argmin_x: float
    samples: int


def _values(p: Union[SinePoly, CosinePoly], xs: np.ndarray) -> np.ndarray:
    coeffs = np.array([float(a) for a in p.coeffs])
    if isinstance(p, SinePoly):
        k = np.arange(1, len(coeffs) + 1)
        return np.sin(np.outer(xs, k)) @ coeffs
    k = np.arange(len(coeffs))
    return np.cos(np.outer(xs, k)) @ coeffs


def dense_min(p: Union[SinePoly, CosinePoly], m: int = 10_000) -> SampleReport:
    """Minimum of p over m evenly spaced points of [0, pi] (ends included)."""
    if m < 2:
        raise ValueError("need at least two samples")
    xs = np.linspace(0.0, np.pi, m)
    # chunk to bound the size of the (m, n) matrix
    best, arg = np.inf, 0.0
    for start in range(0, m, 20_000):
        chunk = xs[start : start + 20_000]
        v = _values(p, chunk)
        i = int(np.argmin(v))
        if v[i] < best:
            best, arg = float(v[i]), float(chunk[i])
    return SampleReport(best, arg, m)


def random_sine_poly(degree: int, magnitude: int = 9, seed: int = 0) -> SinePoly:
    """Reproducible random sine polynomial.

    Numerators are drawn from [-magnitude, magnitude] and denominators from
    [1, magnitude].
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    rng = random.Random(seed)
    return SinePoly(
        Fraction(rng.randint(-magnitude, magnitude), rng.randint(1, max(1, magnitude))) for _ in range(degree)
    )


def random_int_poly(degree: int, magnitude: int = 9, seed: int = 0) -> AlgPoly:
    """Random integer polynomial of degree <= ``degree``, not identically zero."""
    rng = random.Random(seed)
    while True:
        c = [rng.randint(-magnitude, magnitude) for _ in range(degree + 1)]
        if any(c):
            return AlgPoly(c)


def grid_root_count(p: AlgPoly, lo: float = -1.0, hi: float = 1.0, points: int = 100_000) -> int | None:
    """Distinct roots in (lo, hi) counted from sign changes on a uniform grid.

    Every sign change is confirmed by exact rational evaluation at the two
    grid points bracketing it.  Returns None when the grid cannot be trusted
    for this polynomial: roots closer together (or to an endpoint, or to the
    real axis from the complex plane) than twice the grid step, or a root
    sitting on a grid point.  Root locations for that filter come from
    ``numpy.roots``, independent of any Sturm computation.
    """
    coeffs = [float(c) for c in p.coeffs]
    step = (hi - lo) / (points - 1)
    sep = 2 * step
    if len(coeffs) > 1:
        roots = np.roots(coeffs[::-1])
        near = roots[(roots.real > lo - sep) & (roots.real < hi + sep)]
        for r in near:
            if abs(r.imag) < sep and (abs(r.real - lo) < sep or abs(r.real - hi) < sep):
                return None
            if 0 < abs(r.imag) < sep:
                return None
        reals = np.sort(near[np.abs(near.imag) == 0].real)
        if len(reals) > 1 and np.min(np.diff(reals)) < sep:
            return None
    xs = np.linspace(lo, hi, points)
    vals = np.polynomial.polynomial.polyval(xs, coeffs)
    if np.any(vals == 0):
        return None
    signs = np.sign(vals)
    idx = np.nonzero(signs[:-1] != signs[1:])[0]
    n = points - 1
    count = 0
    for i in idx:
        # grid points lo + (hi - lo) * i / n as exact rationals
        a = Fraction(lo) + (Fraction(hi) - Fraction(lo)) * i / n
        b = Fraction(lo) + (Fraction(hi) - Fraction(lo)) * (i + 1) / n
        if (p(a) > 0) != (p(b) > 0) and p(a) != 0 and p(b) != 0:
            count += 1
        else:
            return None
    return count
