"""Exact sine, cosine and algebraic polynomials.

Coefficients are :class:`fractions.Fraction` throughout.  A sine polynomial
``[a1, ..., an]_s`` stands for ``sum a_k sin(kx)`` and a cosine polynomial
``[a0, ..., an]_c`` for ``sum a_k cos(kx)``.  Both reduce to an algebraic
polynomial in ``X = cos(x)`` through the Chebyshev recurrences.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer into an exact rational.

    Decimal notation is rejected on purpose so that no binary float can leak
    into a certified computation.
    """
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not an exact rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def parse_coefficients(text: str) -> list[Fraction]:
    """Parse a comma separated list such as ``"5/4,1,1,1/4"``."""
    parts = text.split(",")
    if not text.strip() or any(not p.strip() for p in parts):
        raise ValueError(f"malformed coefficient list: {text!r}")
    return [parse_rational(p) for p in parts]


def format_rational(q: Fraction) -> str:
    """Render as ``"p/q"`` (or ``"p"`` for integers)."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _as_fractions(coeffs: Iterable[RationalLike]) -> tuple[Fraction, ...]:
    out = []
    for c in coeffs:
        if isinstance(c, float):
            raise TypeError("float coefficients are not allowed; use Fraction or 'p/q' text")
        out.append(parse_rational(c) if isinstance(c, str) else Fraction(c))
    return tuple(out)


@dataclass(frozen=True)
class SinePoly:
    """``sum_{k=1}^n coeffs[k-1] * sin(k x)``."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike]):
        c = _as_fractions(coeffs)
        if not c:
            raise ValueError("a sine polynomial needs at least one coefficient")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    @property
    def effective_degree(self) -> int:
        """Largest k with a_k != 0 (0 for the zero polynomial)."""
        for k in range(len(self.coeffs), 0, -1):
            if self.coeffs[k - 1] != 0:
                return k
        return 0

    def is_zero(self) -> bool:
        return self.effective_degree == 0

    def __add__(self, other: SinePoly) -> SinePoly:
        n = max(self.degree, other.degree)
        a = list(self.coeffs) + [Fraction(0)] * (n - self.degree)
        b = list(other.coeffs) + [Fraction(0)] * (n - other.degree)
        return SinePoly(x + y for x, y in zip(a, b))

    def scale(self, c: RationalLike) -> SinePoly:
        c = Fraction(c)
        return SinePoly(c * a for a in self.coeffs)

    def __str__(self) -> str:
        return "[" + ", ".join(format_rational(a) for a in self.coeffs) + "]_s"


@dataclass(frozen=True)
class CosinePoly:
    """``sum_{k=0}^n coeffs[k] * cos(k x)``."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike]):
        c = _as_fractions(coeffs)
        if not c:
            raise ValueError("a cosine polynomial needs at least one coefficient")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def effective_degree(self) -> int:
        for k in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[k] != 0:
                return k
        return 0

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def __str__(self) -> str:
        return "[" + ", ".join(format_rational(a) for a in self.coeffs) + "]_c"


@dataclass(frozen=True)
class AlgPoly:
    """Dense polynomial in X, constant term first; trailing zeros stripped."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        c = list(_as_fractions(coeffs))
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: RationalLike) -> Fraction:
        return eval_rational(self, x)

    def __add__(self, other: AlgPoly) -> AlgPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return AlgPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> AlgPoly:
        return AlgPoly(-a for a in self.coeffs)

    def __sub__(self, other: AlgPoly) -> AlgPoly:
        return self + (-other)

    def __mul__(self, other: Union[AlgPoly, RationalLike]) -> AlgPoly:
        if not isinstance(other, AlgPoly):
            c = Fraction(other)
            return AlgPoly(c * a for a in self.coeffs)
        if self.is_zero() or other.is_zero():
            return AlgPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return AlgPoly(out)

    __rmul__ = __mul__

    def derivative(self) -> AlgPoly:
        return AlgPoly(k * a for k, a in enumerate(self.coeffs) if k)

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for a in reversed(self.coeffs):
            acc = acc * x + float(a)
        return acc

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k, a in enumerate(self.coeffs):
            if a:
                terms.append(format_rational(a) + ("" if k == 0 else "*X" if k == 1 else f"*X^{k}"))
        return " + ".join(terms)


_X = AlgPoly([0, 1])


def _chebyshev(first: AlgPoly, second: AlgPoly, count: int) -> list[AlgPoly]:
    """First ``count`` terms of P_{j+1} = 2X P_j - P_{j-1}."""
    seq = [first, second][:count]
    two_x = _X * 2
    while len(seq) < count:
        seq.append(two_x * seq[-1] - seq[-2])
    return seq


def chebyshev_t(count: int) -> list[AlgPoly]:
    """T_0, ..., T_{count-1}."""
    return _chebyshev(AlgPoly([1]), AlgPoly([0, 1]), count)


def chebyshev_u(count: int) -> list[AlgPoly]:
    """U_0, ..., U_{count-1}."""
    return _chebyshev(AlgPoly([1]), AlgPoly([0, 2]), count)


def sine_to_algebraic(p: SinePoly) -> AlgPoly:
    """P with ``sum a_k sin(kx) = sin(x) * P(cos x)``.

    Uses ``sin(kx) = sin(x) U_{k-1}(cos x)``; only the effective degree is
    expanded so a zero leading coefficient never enters a Sturm chain.
    """
    n = p.effective_degree
    out = AlgPoly()
    for a, u in zip(p.coeffs[:n], chebyshev_u(n)):
        if a:
            out = out + u * a
    return out


def cosine_to_algebraic(p: CosinePoly) -> AlgPoly:
    """Q with ``sum a_k cos(kx) = Q(cos x)``."""
    n = p.effective_degree
    out = AlgPoly()
    for a, t in zip(p.coeffs[: n + 1], chebyshev_t(n + 1)):
        if a:
            out = out + t * a
    return out


def reflect(p: SinePoly) -> SinePoly:
    """The sine polynomial q with q(x) = p(pi - x)."""
    return SinePoly(a if k % 2 else -a for k, a in enumerate(p.coeffs, start=1))


def eval_float(p: Union[SinePoly, CosinePoly], x: float) -> float:
    """Floating point value; never used inside a certified decision."""
    if isinstance(p, SinePoly):
        return math.fsum(float(a) * math.sin(k * x) for k, a in enumerate(p.coeffs, start=1))
    if isinstance(p, CosinePoly):
        return math.fsum(float(a) * math.cos(k * x) for k, a in enumerate(p.coeffs))
    raise TypeError(f"expected SinePoly or CosinePoly, got {type(p).__name__}")


def eval_rational(p: AlgPoly, x: RationalLike) -> Fraction:
    """Exact Horner evaluation."""
    x = Fraction(x)
    acc = Fraction(0)
    for a in reversed(p.coeffs):
        acc = acc * x + a
    return acc


def to_integer_coeffs(coeffs: Sequence[Fraction]) -> list[int]:
    """Primitive integer polynomial equal to ``coeffs`` times a positive constant."""
    if not coeffs:
        return []
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return [v // g for v in ints] if g > 1 else ints
