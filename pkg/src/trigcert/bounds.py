"""Taylor enclosures of sin/cos and an interval branch-and-bound prover.

For t >= 0 the truncated Taylor series of sin and cos alternate around the
true value: a partial sum ending in a positive term is an upper bound, one
ending in a negative term a lower bound.  The default truncations are

    t - t^3/6 <= sin t <= t - t^3/6 + t^5/120
    1 - t^2/2 + t^4/24 - t^6/720 <= cos t <= 1 - t^2/2 + t^4/24

and every enclosure below is evaluated in exact rational arithmetic.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .polys import RationalLike, SinePoly, reflect
from .sturm import INCONCLUSIVE, NEGATIVE, NONNEGATIVE, Verdict

PI_LO = Fraction(314159265358979, 10**14)
PI_HI = Fraction(314159265358980, 10**14)

SIN_ORDER = 5
COS_ORDER = 6

@dataclass(frozen=True)
class RatInterval:
    lo: Fraction
    hi: Fraction

    def __init__(self, lo: RationalLike, hi: Optional[RationalLike] = None):
        lo = Fraction(lo)
        hi = lo if hi is None else Fraction(hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def contains_interval(self, other: RatInterval) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __repr__(self) -> str:
        return f"RatInterval({self.lo}, {self.hi})"


def _series(first: int, last: int) -> list[tuple[int, Fraction]]:
    """(power, coefficient) of the sin (first=1) or cos (first=0) series."""
    out = []
    sign = 1
    for p in range(first, last + 1, 2):
        out.append((p, Fraction(sign, math.factorial(p))))
        sign = -sign
    return out


def _poly_range(terms, a: Fraction, b: Fraction) -> tuple[Fraction, Fraction]:
    """Range enclosure of sum c t^p over [a, b] with a >= 0 (t^p is increasing)."""
    lo = hi = Fraction(0)
    for p, c in terms:
        pa, pb = a**p, b**p
        if c > 0:
            lo += c * pa
            hi += c * pb
        else:
            lo += c * pb
            hi += c * pa
    return lo, hi


def _check_order(order: int, base: int) -> None:
    if order < base or (order - base) % 4:
        raise ValueError(f"order must be {base} + 4j, got {order}")


def sin_enclosure(t: RatInterval, order: int = SIN_ORDER) -> RatInterval:
    """Rational interval containing sin(t) for every t in ``t`` (t.lo >= 0).

    ``order`` is the degree of the upper truncation (5, 9, 13, ...); the lower
    truncation has degree ``order - 2``.
    """
    if t.lo < 0:
        raise ValueError("sin_enclosure needs t >= 0")
    _check_order(order, SIN_ORDER)
    lo = _poly_range(_series(1, order - 2), t.lo, t.hi)[0]
    hi = _poly_range(_series(1, order), t.lo, t.hi)[1]
    lo, hi = max(lo, Fraction(-1)), min(hi, Fraction(1))
    if t.hi <= PI_LO:
        lo = max(lo, Fraction(0))
    return RatInterval(lo, hi)


def cos_enclosure(t: RatInterval, order: int = COS_ORDER) -> RatInterval:
    """Rational interval containing cos(t) for every t in ``t`` (t.lo >= 0).

    ``order`` is the degree of the lower truncation (6, 10, 14, ...).
    """
    if t.lo < 0:
        raise ValueError("cos_enclosure needs t >= 0")
    _check_order(order, COS_ORDER)
    lo = _poly_range(_series(0, order), t.lo, t.hi)[0]
    hi = _poly_range(_series(0, order - 2), t.lo, t.hi)[1]
    return RatInterval(max(lo, Fraction(-1)), min(hi, Fraction(1)))


def sinc_enclosure(t: RatInterval, order: int = SIN_ORDER) -> RatInterval:
    """Enclosure of sin(t)/t (value 1 at t = 0) from the same truncations divided by t."""
    if t.lo < 0:
        raise ValueError("sinc_enclosure needs t >= 0")
    _check_order(order, SIN_ORDER)
    lower = [(p - 1, c) for p, c in _series(1, order - 2)]
    upper = [(p - 1, c) for p, c in _series(1, order)]
    return RatInterval(_poly_range(lower, t.lo, t.hi)[0], min(_poly_range(upper, t.lo, t.hi)[1], Fraction(1)))


# ---------------------------------------------------------------------------
# adaptive evaluation used by the prover
#
# The prover works in fixed point: a number v is held as an integer N with
# v ~ N / 2^_BITS, and every operation rounds towards the side that keeps the
# enclosure valid (floor for lower bounds, ceiling for upper bounds).

_BITS = 96
_ONE = 1 << _BITS
_EPS = 2.0**-40


def _fx_down(q: Fraction) -> int:
    return (q.numerator << _BITS) // q.denominator


def _fx_up(q: Fraction) -> int:
    return -((-q.numerator << _BITS) // q.denominator)


def _mul_down(a: int, b: int) -> int:
    return (a * b) >> _BITS


def _mul_up(a: int, b: int) -> int:
    return -((-(a * b)) >> _BITS)


_PI_LO_FX = _fx_down(PI_LO)
_PI_HI_FX = _fx_up(PI_HI)
_HALF_PI_HI_FX = _fx_up(PI_HI / 2)
# 1/p! rounded both ways
_INV_FACT = [(_fx_down(Fraction(1, math.factorial(p))), _fx_up(Fraction(1, math.factorial(p)))) for p in range(120)]


def taylor_order(t_hi, base: int = SIN_ORDER) -> int:
    """Smallest order base + 4j whose truncation gap t^order/order! is <= 2^-40.

    The printed truncations (base order) are kept while they already meet the
    gap; larger arguments raise the order by 4 at a time.
    """
    order = base
    t = float(t_hi)
    while order < 101 and t**order / math.factorial(order) > _EPS:
        order += 4
    return order


def _fx_series_range(first: int, last: int, shift: int, a: int, b: int) -> tuple[int, int]:
    """Fixed-point enclosure of sum_{p=first,first+2..last} (+-1/p!) t^(p-shift), t in [a, b], a >= 0."""
    lo = hi = 0
    # powers t^(p - shift), rounded down at a and up at b
    e0 = first - shift
    pa, pb = _ONE, _ONE
    for _ in range(e0):
        pa, pb = _mul_down(pa, a), _mul_up(pb, b)
    a2, b2 = _mul_down(a, a), _mul_up(b, b)
    positive = True
    for p in range(first, last + 1, 2):
        f_lo, f_hi = _INV_FACT[p]
        if positive:
            lo += _mul_down(f_lo, pa)
            hi += _mul_up(f_hi, pb)
        else:
            lo -= _mul_up(f_hi, pb)
            hi -= _mul_down(f_lo, pa)
        positive = not positive
        pa, pb = _mul_down(pa, a2), _mul_up(pb, b2)
    return lo, hi


def _fx_sin(a: int, b: int) -> tuple[int, int]:
    """Fixed-point enclosure of sin over [a, b], a >= 0, with reduction modulo pi."""
    if b - a >= _PI_LO_FX:
        return -_ONE, _ONE
    j = a // _PI_HI_FX
    r_lo = a - j * _PI_HI_FX
    r_hi = b - j * _PI_LO_FX
    if r_hi <= _PI_LO_FX and r_lo >= _HALF_PI_HI_FX:
        # sin(t) = sin(pi - t) brings the argument back under pi/2
        r_lo, r_hi = _PI_LO_FX - r_hi, _PI_HI_FX - r_lo
    r_lo = max(r_lo, 0)
    order = taylor_order(r_hi / _ONE)
    lo = _fx_series_range(1, order - 2, 0, r_lo, r_hi)[0]
    hi = _fx_series_range(1, order, 0, r_lo, r_hi)[1]
    lo, hi = max(lo, -_ONE), min(hi, _ONE)
    if r_hi <= _PI_LO_FX:
        lo = max(lo, 0)
    if j % 2:
        return -hi, -lo
    return lo, hi


def _fx_sinc(a: int, b: int) -> tuple[int, int]:
    """Fixed-point enclosure of sin(t)/t over [a, b], 0 <= a."""
    order = taylor_order(b / _ONE)
    lo = _fx_series_range(1, order - 2, 1, a, b)[0]
    hi = _fx_series_range(1, order, 1, a, b)[1]
    return lo, min(hi, _ONE)


def _fx_coeffs(p: SinePoly) -> list[tuple[int, int, int]]:
    """(k, a_k rounded down, a_k rounded up) for the nonzero coefficients."""
    return [(k, _fx_down(a), _fx_up(a)) for k, a in enumerate(p.coeffs, start=1) if a]


def _fx_sine_poly_range(coeffs, a: int, b: int) -> tuple[int, int]:
    lo = hi = 0
    for k, c_lo, c_hi in coeffs:
        s_lo, s_hi = _fx_sin(k * a, k * b)
        lo += min(_mul_down(c_lo, s_lo), _mul_down(c_lo, s_hi), _mul_down(c_hi, s_lo), _mul_down(c_hi, s_hi))
        hi += max(_mul_up(c_lo, s_lo), _mul_up(c_lo, s_hi), _mul_up(c_hi, s_lo), _mul_up(c_hi, s_hi))
    return lo, hi


def _fx_sinc_lower(coeffs, a: int, b: int) -> int:
    """Lower bound of sum k a_k sinc(k x) = f(x)/x over [a, b]."""
    total = 0
    for k, c_lo, c_hi in coeffs:
        s_lo, s_hi = _fx_sinc(k * a, k * b)
        total += k * min(_mul_down(c_lo, s_lo), _mul_down(c_lo, s_hi), _mul_down(c_hi, s_lo), _mul_down(c_hi, s_hi))
    return total


def sine_poly_range(p: SinePoly, x: RatInterval) -> tuple[Fraction, Fraction]:
    """Rigorous enclosure of sum a_k sin(k x) over x (x.lo >= 0)."""
    if x.lo < 0:
        raise ValueError("sine_poly_range needs x >= 0")
    lo, hi = _fx_sine_poly_range(_fx_coeffs(p), _fx_down(x.lo), _fx_up(x.hi))
    return Fraction(lo, _ONE), Fraction(hi, _ONE)


# split point between the direct half and the reflected half of [0, pi]
_PI_SPLIT = Fraction(3, 2)


def branch_and_bound_nn(
    p: SinePoly,
    lo: RationalLike = 0,
    hi: Optional[RationalLike] = None,
    max_depth: int = 12,
    max_nodes: int = 200_000,
) -> Verdict:
    """Interval proof that ``sum a_k sin(kx) >= 0`` on ``[lo, hi]``.

    ``hi=None`` means pi itself.  The stretch [3/2, pi] is then handled by the
    reflected polynomial on [0, pi - 3/2], enclosed by [0, PI_HI - 3/2], so
    pi never has to be a rational endpoint.  Near x = 0 the polynomial is
    bounded through f(x)/x, which removes the forced zero at the origin.

    Returns nonnegative when every leaf has a lower bound >= 0, negative when
    a midpoint has an upper bound < 0, and inconclusive when the depth or
    node budget runs out first.
    """
    lo = Fraction(lo)
    if lo < 0:
        raise ValueError("branch_and_bound_nn needs lo >= 0")
    if hi is not None:
        hi = Fraction(hi)
        if hi < lo:
            raise ValueError("hi < lo")
        if hi > PI_LO:
            raise ValueError("hi must not exceed pi; pass hi=None for pi itself")
    if p.is_zero():
        return Verdict(NONNEGATIVE, method="interval")

    # (poly, interval, reflected?)
    roots: list[tuple[SinePoly, RatInterval, bool]] = []
    if hi is None:
        if lo < _PI_SPLIT:
            roots.append((p, RatInterval(lo, _PI_SPLIT), False))
            roots.append((reflect(p), RatInterval(0, PI_HI - _PI_SPLIT), True))
        else:
            roots.append((reflect(p), RatInterval(0, PI_HI - lo), True))
    else:
        roots.append((p, RatInterval(lo, hi), False))

    four = 4 * _ONE
    prepared = {id(poly): (_fx_coeffs(poly), poly.degree) for poly, _, _ in roots}
    queue = deque((poly, x, refl, 0) for poly, x, refl in roots)
    nodes = 0
    exhausted = False
    while queue:
        poly, x, refl, depth = queue.popleft()
        coeffs, n = prepared[id(poly)]
        nodes += 1
        a, b = _fx_down(x.lo), _fx_up(x.hi)
        if _fx_sine_poly_range(coeffs, a, b)[0] >= 0:
            continue
        # f(x) = x * sum k a_k sinc(kx) removes the forced zero at the origin
        if n * b <= four and _fx_sinc_lower(coeffs, a, b) >= 0:
            continue
        m = (x.lo + x.hi) / 2
        up = _fx_sine_poly_range(coeffs, _fx_down(m), _fx_up(m))[1]
        # in reflected coordinates only y <= PI_LO - lo is certainly inside [lo, pi]
        if up < 0 and (not refl or m <= PI_LO - lo):
            v = Verdict(NEGATIVE, witness_value=Fraction(up, _ONE), method="interval", nodes=nodes)
            v.witness_x = math.pi - float(m) if refl else m
            return v
        if depth >= max_depth or nodes >= max_nodes:
            exhausted = True
            continue
        queue.append((poly, RatInterval(x.lo, m), refl, depth + 1))
        queue.append((poly, RatInterval(m, x.hi), refl, depth + 1))
    return Verdict(INCONCLUSIVE if exhausted else NONNEGATIVE, method="interval", nodes=nodes)
