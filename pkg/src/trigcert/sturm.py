"""Sturm chains over the integers and certified nonnegativity on an interval.

Every polynomial entering a chain is first scaled to a primitive integer
polynomial (a positive multiple, so signs are untouched).  Remainders are
pseudo-remainders with the sign corrected and the content stripped, which
keeps coefficient growth in check without changing any sign pattern.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .polys import AlgPoly, RationalLike, eval_rational, to_integer_coeffs

NONNEGATIVE = "nonnegative"
NEGATIVE = "negative"
INCONCLUSIVE = "inconclusive"

DEFAULT_WIDTH = Fraction(1, 2**16)
DEFAULT_TOL = Fraction(1, 10**9)

IntPoly = list  # integer coefficients, constant term first


# ---------------------------------------------------------------------------
# integer polynomial helpers


def _trim(p: IntPoly) -> IntPoly:
    while p and p[-1] == 0:
        p.pop()
    return p


def _primitive(p: IntPoly) -> IntPoly:
    """Divide by the positive content."""
    g = 0
    for c in p:
        g = math.gcd(g, c)
    if g > 1:
        return [c // g for c in p]
    return list(p)


def _derivative(p: IntPoly) -> IntPoly:
    return [k * c for k, c in enumerate(p)][1:]


def _prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b."""
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    e = len(a) - len(b) + 1
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        top = r[-1]
        r = [lc * c for c in r]
        for i, c in enumerate(b):
            r[i + shift] -= top * c
        r.pop()
        _trim(r)
        e -= 1
    if e > 0:
        m = lc**e
        r = [m * c for c in r]
    return r


def _neg_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """A positive multiple of -rem(a, b), made primitive."""
    r = _prem(a, b)
    if not r:
        return r
    # prem = lc^(d+1) * rem; flip when that multiplier is negative
    d = len(a) - len(b)
    flip = b[-1] < 0 and d % 2 == 0
    r = r if flip else [-c for c in r]
    return _primitive(r)


def _gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient."""
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _primitive(_prem(a, b))
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def _exact_quotient(a: IntPoly, b: IntPoly) -> list[Fraction]:
    """a / b over Q, assuming b divides a."""
    rem = [Fraction(c) for c in a]
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lc = Fraction(b[-1])
    for shift in range(len(q) - 1, -1, -1):
        c = rem[shift + len(b) - 1] / lc
        q[shift] = c
        if c:
            for i, bc in enumerate(b):
                rem[shift + i] -= c * bc
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return q


def _sign_at(p: IntPoly, x: Fraction) -> int:
    """Sign of p(x) computed on the integer homogenization."""
    if not p:
        return 0
    num, den = x.numerator, x.denominator
    acc = p[-1]
    scale = 1
    for c in reversed(p[:-1]):
        scale *= den
        acc = acc * num + c * scale
    return (acc > 0) - (acc < 0)


# ---------------------------------------------------------------------------
# public types


@dataclass(frozen=True)
class SturmChain:
    """Sturm sequence of a squarefree polynomial, as primitive integer polynomials."""

    polys: tuple[tuple[int, ...], ...]

    def variations(self, x: RationalLike) -> int:
        """Sign changes at x, zeros skipped."""
        x = Fraction(x)
        last = 0
        changes = 0
        for p in self.polys:
            s = _sign_at(list(p), x)
            if s:
                if last and s != last:
                    changes += 1
                last = s
        return changes

    def as_algpolys(self) -> list[AlgPoly]:
        return [AlgPoly(p) for p in self.polys]

    def __len__(self) -> int:
        return len(self.polys)


@dataclass
class Certificate:
    """Evidence for a nonnegative verdict: root isolation plus checked samples."""

    roots: list[tuple[Fraction, Fraction]] = field(default_factory=list)
    samples: list[tuple[Fraction, Fraction]] = field(default_factory=list)


@dataclass
class Verdict:
    """Outcome of a nonnegativity decision.

    For the algebraic certifier ``witness_X`` is a point of the X-axis with
    ``p(witness_X) == witness_value < 0``.  For trigonometric decisions
    ``witness_x`` is the matching angle (a float for display, or an exact
    rational when the interval prover found it directly).
    """

    status: str
    witness_X: Optional[Fraction] = None
    witness_value: Optional[Fraction] = None
    witness_x: Optional[float | Fraction] = None
    certificate: Optional[Certificate] = None
    method: str = "sturm"
    nodes: int = 0

    @property
    def nonnegative(self) -> bool:
        return self.status == NONNEGATIVE

    @property
    def negative(self) -> bool:
        return self.status == NEGATIVE


# ---------------------------------------------------------------------------
# operations


def _integer_poly(p: AlgPoly) -> IntPoly:
    if p.is_zero():
        raise ValueError("zero polynomial")
    return to_integer_coeffs(p.coeffs)


def _squarefree_ints(p: IntPoly) -> IntPoly:
    if len(p) <= 2:
        return _primitive(p)
    g = _gcd(p, _derivative(p))
    if len(g) == 1:
        return _primitive(p)
    return to_integer_coeffs(_exact_quotient(p, g))


def squarefree_part(p: AlgPoly) -> AlgPoly:
    """``p / gcd(p, p')`` scaled to a primitive integer polynomial."""
    return AlgPoly(_squarefree_ints(_integer_poly(p)))


def _chain_ints(q: IntPoly) -> SturmChain:
    chain = [q]
    if len(q) > 1:
        chain.append(_primitive(_derivative(q)))
        while len(chain[-1]) > 1:
            r = _neg_rem(chain[-2], chain[-1])
            if not r:
                break
            chain.append(r)
    return SturmChain(tuple(tuple(c) for c in chain))


def sturm_chain(p: AlgPoly) -> SturmChain:
    """Sturm chain of the squarefree part of p."""
    return _chain_ints(_squarefree_ints(_integer_poly(p)))


def count_roots(p: AlgPoly, lo: RationalLike, hi: RationalLike) -> int:
    """Number of distinct real roots of p in ``(lo, hi]``.

    Zeros in the chain are skipped when counting variations; for a squarefree
    target this gives the half-open count even when lo or hi is itself a root.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise ValueError("count_roots needs lo < hi")
    chain = sturm_chain(p)
    return chain.variations(lo) - chain.variations(hi)


@dataclass
class RootIsolation:
    """Disjoint intervals each holding exactly one distinct root.

    A degenerate interval ``(r, r)`` marks an exact rational root.  Proper
    intervals are open with non-root endpoints.
    """

    intervals: list[tuple[Fraction, Fraction]]

    def __len__(self) -> int:
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)


def _isolate(q: IntPoly, chain: SturmChain, lo: Fraction, hi: Fraction, width: Fraction):
    out: list[tuple[Fraction, Fraction]] = []
    if _sign_at(q, lo) == 0:
        out.append((lo, lo))
    if lo == hi:
        return out
    hi_root = _sign_at(q, hi) == 0
    cache: dict[Fraction, int] = {}

    def var(x: Fraction) -> int:
        if x not in cache:
            cache[x] = chain.variations(x)
        return cache[x]

    # stack entries: open interval (a, b) with non-root ends... except that
    # lo/hi may be roots, which the counts below already exclude
    first = var(lo) - var(hi) - (1 if hi_root else 0)
    stack = [(lo, hi, first)]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1 and b - a <= width and _sign_at(q, a) != 0 and _sign_at(q, b) != 0:
            out.append((a, b))
            continue
        m = (a + b) / 2
        m_root = _sign_at(q, m) == 0
        left = var(a) - var(m) - (1 if m_root else 0)
        if m_root:
            out.append((m, m))
        stack.append((m, b, n - left - (1 if m_root else 0)))
        stack.append((a, m, left))
    if hi_root:
        out.append((hi, hi))
    out.sort()
    return out


def isolate_roots(
    p: AlgPoly, lo: RationalLike, hi: RationalLike, width: RationalLike = DEFAULT_WIDTH
) -> RootIsolation:
    """Isolate the distinct real roots of p in ``[lo, hi]`` by Sturm bisection."""
    lo, hi, width = Fraction(lo), Fraction(hi), Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    if lo > hi:
        raise ValueError("lo > hi")
    q = _squarefree_ints(_integer_poly(p))
    return RootIsolation(_isolate(q, _chain_ints(q), lo, hi, width))


def _gap_samples(lo: Fraction, hi: Fraction, roots: Sequence[tuple[Fraction, Fraction]]) -> list[Fraction]:
    # gaps may have zero length (adjacent isolating intervals); the shared
    # endpoint is then a non-root and still must be sampled
    points = [lo]
    left = lo
    for a, b in roots:
        points.append((left + a) / 2)
        left = b
    points.append((left + hi) / 2)
    points.append(hi)
    out = []
    for x in points:
        if not out or out[-1] != x:
            out.append(x)
    return out


def is_nonneg_on(p: AlgPoly, lo: RationalLike, hi: RationalLike) -> Verdict:
    """Decide whether ``p(X) >= 0`` for every X in ``[lo, hi]``.

    Between consecutive distinct roots p keeps a constant sign, so one exact
    sample per gap (plus both ends) settles the question.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise ValueError("is_nonneg_on needs lo <= hi")
    if p.is_zero():
        return Verdict(NONNEGATIVE, certificate=Certificate())
    q = _squarefree_ints(_integer_poly(p))
    roots = _isolate(q, _chain_ints(q), lo, hi, max(hi - lo, Fraction(1)))
    cert = Certificate(roots=roots)
    for x in _gap_samples(lo, hi, roots):
        v = eval_rational(p, x)
        if v < 0:
            return Verdict(NEGATIVE, witness_X=x, witness_value=v)
        cert.samples.append((x, v))
    return Verdict(NONNEGATIVE, certificate=cert)


# ---------------------------------------------------------------------------
# minimum enclosure


def _interval_horner(coeffs: Sequence[Fraction], a: Fraction, b: Fraction) -> tuple[Fraction, Fraction]:
    lo = hi = Fraction(0)
    for c in reversed(coeffs):
        prods = (lo * a, lo * b, hi * a, hi * b)
        lo, hi = min(prods) + c, max(prods) + c
    return lo, hi


def _range_lower(p: AlgPoly, dp: AlgPoly, a: Fraction, b: Fraction) -> Fraction:
    """Lower bound of p over [a, b]: best of natural and mean-value forms."""
    natural = _interval_horner(p.coeffs, a, b)[0]
    m = (a + b) / 2
    dlo, dhi = _interval_horner(dp.coeffs, a, b)
    h = (b - a) / 2
    slope = max(abs(dlo), abs(dhi))
    return max(natural, eval_rational(p, m) - slope * h)


def min_enclosure(
    p: AlgPoly, lo: RationalLike, hi: RationalLike, tol: RationalLike = DEFAULT_TOL
) -> tuple[Fraction, Fraction]:
    """Rational interval of width <= tol containing ``min_{[lo, hi]} p``."""
    lo, hi, tol = Fraction(lo), Fraction(hi), Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if lo > hi:
        raise ValueError("lo > hi")
    ends = [eval_rational(p, lo), eval_rational(p, hi)]
    if lo == hi or p.degree <= 1:
        m = min(ends)
        return m, m
    dp = p.derivative()
    q = _squarefree_ints(_integer_poly(dp))
    chain = _chain_ints(q)
    crit = _isolate(q, chain, lo, hi, hi - lo)
    lowers = list(ends)
    uppers = list(ends)
    for a, b in crit:
        if a == b:
            v = eval_rational(p, a)
            lowers.append(v)
            uppers.append(v)
            continue
        sa = _sign_at(q, a)
        while True:
            m = (a + b) / 2
            up = min(eval_rational(p, a), eval_rational(p, b), eval_rational(p, m))
            low = _range_lower(p, dp, a, b)
            if up - low <= tol:
                break
            sm = _sign_at(q, m)
            if sm == 0:
                low = up = eval_rational(p, m)
                break
            if sm == sa:
                a = m
            else:
                b = m
        lowers.append(low)
        uppers.append(up)
    return min(lowers), min(uppers)
