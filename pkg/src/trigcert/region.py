"""The nonnegativity region P_n = {(kappa, lambda) : [kappa, 1, ..., 1, lambda]_s >= 0}.

Membership is decided exactly.  The boundary kappa0(lambda; n) uses the
known closed forms where they hold and otherwise a certified bisection,
which is valid because adding ``d * sin(x)`` with d > 0 keeps a polynomial
nonnegative on [0, pi]: each slice of P_n is a ray ``kappa >= kappa0``.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .certify import certify_sine
from .families import kappa_lambda
from .polys import RationalLike, SinePoly
from .sturm import Verdict

CLOSED_FORM_LINE = "closed_form_line"
CLOSED_FORM_CURVE = "closed_form_curve"
BISECTION = "bisection"


@dataclass(frozen=True)
class RegionQuery:
    n: int
    kappa: Fraction
    lam: Fraction

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("region queries need n >= 3")
        object.__setattr__(self, "kappa", Fraction(self.kappa))
        object.__setattr__(self, "lam", Fraction(self.lam))


@dataclass(frozen=True)
class BoundaryPoint:
    lam: Fraction
    kappa0_lo: Fraction
    kappa0_hi: Fraction
    method: str

    @property
    def width(self) -> Fraction:
        return self.kappa0_hi - self.kappa0_lo

    @property
    def mid(self) -> Fraction:
        return (self.kappa0_lo + self.kappa0_hi) / 2


def membership(q: RegionQuery | int, kappa: RationalLike = None, lam: RationalLike = None) -> Verdict:
    """Exact decision of ``(kappa, lambda) in P_n``.

    Accepts either a :class:`RegionQuery` or ``membership(n, kappa, lam)``.
    """
    if not isinstance(q, RegionQuery):
        q = RegionQuery(q, kappa, lam)
    return certify_sine(kappa_lambda(q.n, q.kappa, q.lam))


def is_member(n: int, kappa: RationalLike, lam: RationalLike) -> bool:
    return membership(n, kappa, lam).nonnegative


# ---------------------------------------------------------------------------
# closed forms


def odd_line(n: int, lam: RationalLike) -> Fraction:
    """(n+1)/2 - n*lambda: boundary for odd n, lambda <= (2n-3)/(4n)."""
    return Fraction(n + 1, 2) - n * Fraction(lam)


def even_line(n: int, lam: RationalLike) -> Fraction:
    """n*lambda - (n-2)/2: boundary for even n, lambda >= 1/2."""
    return n * Fraction(lam) - Fraction(n - 2, 2)


def printed_even_line(n: int, lam: RationalLike) -> Fraction:
    """n*lambda - (n-1)/2, as it appears in print; kept for comparison only."""
    return n * Fraction(lam) - Fraction(n - 1, 2)


def cubic_curve(lam: RationalLike) -> Fraction:
    """lambda + 1/(4 lambda): boundary of P_3 for lambda >= 1/4."""
    lam = Fraction(lam)
    return lam + 1 / (4 * lam)


def _sqrt_enclosure(x: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Rational [lo, hi] around sqrt(x) with hi - lo <= 2^-bits."""
    scale = 1 << bits
    # isqrt(floor(x * scale^2)) / scale <= sqrt(x) < (that + 1) / scale
    r = math.isqrt((x.numerator * scale * scale) // x.denominator)
    return Fraction(r, scale), Fraction(r + 1, scale)


def quartic_curve(lam: RationalLike, tol: RationalLike) -> tuple[Fraction, Fraction]:
    """Enclosure of (9l^2 + 9l + 2 sqrt((6l^2 - 3l + 1)^3) - 2) / (27 l^2).

    This is the curved part of the boundary of P_4 (0 < lambda <= 1/2).
    """
    lam, tol = Fraction(lam), Fraction(tol)
    if lam == 0:
        raise ValueError("the P_4 curve is undefined at lambda = 0")
    s = 6 * lam * lam - 3 * lam + 1
    den = 27 * lam * lam
    base = (9 * lam * lam + 9 * lam - 2) / den
    gain = 2 * s / den  # > 0, so the value is increasing in sqrt(s)
    bits = 16
    while True:
        lo, hi = _sqrt_enclosure(s, bits)
        if lo * lo == s:
            v = base + gain * lo
            return v, v
        klo, khi = base + gain * lo, base + gain * hi
        if khi - klo <= tol:
            return klo, khi
        bits += 16


# ---------------------------------------------------------------------------
# boundary


def necessary_kappa_bound(n: int, lam: RationalLike) -> Fraction:
    """Smallest kappa allowed by the first-order endpoint conditions."""
    lam = Fraction(lam)
    # at x = 0: kappa + sum_{k=2}^{n-1} k + n*lambda >= 0
    at0 = -Fraction((n - 1) * n // 2 - 1) - n * lam
    atpi = odd_line(n, lam) if n % 2 else even_line(n, lam)
    return max(at0, atpi)


def bisect_kappa0(n: int, lam: RationalLike, tol: RationalLike) -> BoundaryPoint:
    """Certified bracket [lo, hi] with lo outside P_n and hi inside."""
    lam, tol = Fraction(lam), Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    bound = necessary_kappa_bound(n, lam)
    lo = bound - 1
    step = Fraction(1)
    while is_member(n, lo, lam):
        # cannot happen when the endpoint conditions hold; kept as a guard
        step *= 2
        lo = bound - step
    hi = bound + 2
    step = Fraction(2)
    while not is_member(n, hi, lam):
        lo = hi
        step *= 2
        hi = bound + step
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if is_member(n, mid, lam):
            hi = mid
        else:
            lo = mid
    return BoundaryPoint(lam, lo, hi, BISECTION)


def kappa0(n: int, lam: RationalLike, tol: RationalLike = Fraction(1, 10**6), force_bisection: bool = False) -> BoundaryPoint:
    """kappa0(lambda; n), the least kappa with (kappa, lambda) in P_n."""
    lam, tol = Fraction(lam), Fraction(tol)
    if n < 3:
        raise ValueError("kappa0 needs n >= 3")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not force_bisection:
        if n % 2 == 1 and lam <= Fraction(2 * n - 3, 4 * n):
            v = odd_line(n, lam)
            return BoundaryPoint(lam, v, v, CLOSED_FORM_LINE)
        if n % 2 == 0 and lam >= Fraction(1, 2):
            v = even_line(n, lam)
            return BoundaryPoint(lam, v, v, CLOSED_FORM_LINE)
        if n == 3 and lam > Fraction(1, 4):
            v = cubic_curve(lam)
            return BoundaryPoint(lam, v, v, CLOSED_FORM_CURVE)
        if n == 4 and 0 < lam < Fraction(1, 2):
            lo, hi = quartic_curve(lam, tol)
            return BoundaryPoint(lam, lo, hi, CLOSED_FORM_CURVE)
    return bisect_kappa0(n, lam, tol)


def lambda_grid(lam_lo: RationalLike, lam_hi: RationalLike, steps: int) -> list[Fraction]:
    lam_lo, lam_hi = Fraction(lam_lo), Fraction(lam_hi)
    if steps < 2:
        raise ValueError("steps must be >= 2")
    if lam_hi <= lam_lo:
        raise ValueError("need lam_lo < lam_hi")
    h = (lam_hi - lam_lo) / (steps - 1)
    return [lam_lo + i * h for i in range(steps)]


def boundary_sweep(
    n: int,
    lam_lo: RationalLike,
    lam_hi: RationalLike,
    steps: int,
    tol: RationalLike = Fraction(1, 10**6),
    force_bisection: bool = False,
) -> list[BoundaryPoint]:
    """kappa0 on ``steps`` evenly spaced lambda values, ascending."""
    return [kappa0(n, lam, tol, force_bisection) for lam in lambda_grid(lam_lo, lam_hi, steps)]


# ---------------------------------------------------------------------------
# degree 3 sine / degree 2 cosine


def degree3_case(a: RationalLike, b: RationalLike, c: RationalLike) -> tuple[bool, str, dict]:
    """Verdict for [a, b, c]_s with the case that fired and the compared values."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if abs(b) >= 4 * c:
        lhs = a - 2 * abs(b) + 3 * c
        return lhs >= 0, "i", {"abs_b": abs(b), "four_c": 4 * c, "a-2|b|+3c": lhs}
    rhs = c + b * b / (4 * c)
    return a >= rhs, "ii", {"abs_b": abs(b), "four_c": 4 * c, "a": a, "c+b^2/(4c)": rhs}


def degree3_characterize(a: RationalLike, b: RationalLike, c: RationalLike) -> bool:
    return degree3_case(a, b, c)[0]


def cosine2_reduction(a: RationalLike, b: RationalLike, c: RationalLike) -> SinePoly:
    """[2a - c, b, c]_s, equal to 2 sin(x) times the cosine polynomial."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    return SinePoly([2 * a - c, b, c])


def cosine2_case(a: RationalLike, b: RationalLike, c: RationalLike) -> tuple[bool, str, dict]:
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if abs(b) >= 4 * c:
        lhs = a - abs(b) + c
        return lhs >= 0, "i", {"abs_b": abs(b), "four_c": 4 * c, "a-|b|+c": lhs}
    rhs = c + b * b / (8 * c)
    return a >= rhs, "ii", {"abs_b": abs(b), "four_c": 4 * c, "a": a, "c+b^2/(8c)": rhs}


def cosine2_characterize(a: RationalLike, b: RationalLike, c: RationalLike) -> bool:
    return cosine2_case(a, b, c)[0]


# ---------------------------------------------------------------------------
# output


def _decimal(q: Fraction, digits: int, rounding: str) -> str:
    scale = 10**digits
    v = q * scale
    i = math.floor(v) if rounding == "down" else math.ceil(v)
    sign = "-" if i < 0 else ""
    i = abs(i)
    whole, frac = divmod(i, scale)
    return f"{sign}{whole}.{frac:0{digits}d}" if digits else f"{sign}{whole}"


def _digits_for(tol: Fraction) -> int:
    return max(1, math.ceil(-math.log10(float(tol)))) + 1 if tol < 1 else 1


def boundary_csv(points: Sequence[BoundaryPoint], tol: RationalLike) -> str:
    """CSV with header ``lambda,kappa0_lo,kappa0_hi,method``.

    Lower ends are rounded down and upper ends up, so the printed decimals
    still enclose kappa0.
    """
    d = _digits_for(Fraction(tol))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["lambda", "kappa0_lo", "kappa0_hi", "method"])
    for p in sorted(points, key=lambda p: p.lam):
        w.writerow([_decimal(p.lam, d, "down"), _decimal(p.kappa0_lo, d, "down"), _decimal(p.kappa0_hi, d, "up"), p.method])
    return buf.getvalue()


def boundary_svg(points: Sequence[BoundaryPoint], width: int = 480, height: int = 360) -> str:
    """Polyline of (lambda, kappa0 midpoint); a picture, not a certificate."""
    pts = sorted(points, key=lambda p: p.lam)
    xs = [float(p.lam) for p in pts]
    ys = [float(p.mid) for p in pts]
    pad = 30
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    sx = (width - 2 * pad) / ((x1 - x0) or 1.0)
    sy = (height - 2 * pad) / ((y1 - y0) or 1.0)
    coords = " ".join(f"{pad + (x - x0) * sx:.2f},{height - pad - (y - y0) * sy:.2f}" for x, y in zip(xs, ys))
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">\n'
        f'  <rect x="{pad}" y="{pad}" width="{width - 2 * pad}" height="{height - 2 * pad}" '
        'fill="none" stroke="#999"/>\n'
        f'  <polyline fill="none" stroke="#c00" stroke-width="1.5" points="{coords}"/>\n'
        f'  <text x="{pad}" y="{height - 8}" font-size="10">lambda [{x0:g}, {x1:g}]</text>\n'
        f'  <text x="4" y="{pad - 8}" font-size="10">kappa0 [{y0:g}, {y1:g}]</text>\n'
        "</svg>\n"
    )


def write_boundary(points: Sequence[BoundaryPoint], path: str | Path, fmt: str, tol: RationalLike) -> Path:
    path = Path(path)
    text = boundary_csv(points, tol) if fmt == "csv" else boundary_svg(points)
    path.write_text(text)
    return path
