"""Named sine polynomial families."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .criteria import vietoris_coefficients
from .polys import RationalLike, SinePoly, format_rational, parse_rational


def phi(n: int) -> SinePoly:
    """[5/4, 1, ..., 1, (2n-3)/(4n)]_s for odd n >= 3."""
    if n < 3 or n % 2 == 0:
        raise ValueError("phi(n) needs odd n >= 3")
    return SinePoly([Fraction(5, 4)] + [1] * (n - 2) + [Fraction(2 * n - 3, 4 * n)])


def sigma(n: int) -> SinePoly:
    """[1, ..., 1, 1/2]_s."""
    if n < 2:
        raise ValueError("sigma(n) needs n >= 2")
    return SinePoly([1] * (n - 1) + [Fraction(1, 2)])


def theta(n: int, sign: int = -1) -> SinePoly:
    """n sin(x) + sign * sin(nx)."""
    if n < 2:
        raise ValueError("theta(n) needs n >= 2")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return SinePoly([n] + [0] * (n - 2) + [sign])


def lukacs(n: int) -> SinePoly:
    """[n, n-1, ..., 1]_s."""
    if n < 1:
        raise ValueError("lukacs(n) needs n >= 1")
    return SinePoly(range(n, 0, -1))


def vietoris(n: int) -> SinePoly:
    return SinePoly(vietoris_coefficients(n))


def kappa_lambda(n: int, kappa: RationalLike, lam: RationalLike) -> SinePoly:
    """[kappa, 1, ..., 1, lambda]_s of degree n >= 3."""
    if n < 3:
        raise ValueError("kappa_lambda needs n >= 3")
    return SinePoly([Fraction(kappa)] + [1] * (n - 2) + [Fraction(lam)])


_TAGS = {
    "phi": "phi",
    "sigma": "sigma",
    "theta-": "theta_minus",
    "theta_minus": "theta_minus",
    "theta+": "theta_plus",
    "theta_plus": "theta_plus",
    "lukacs": "lukacs",
    "vietoris": "vietoris",
    "kappa-lambda": "kappa_lambda",
    "kappa_lambda": "kappa_lambda",
}


@dataclass(frozen=True)
class FamilyId:
    tag: str
    n: int
    kappa: Optional[Fraction] = None
    lam: Optional[Fraction] = None

    @classmethod
    def parse(cls, text: str) -> FamilyId:
        """Parse ``"phi:5"``, ``"theta-:3"`` or ``"kappa-lambda:4:1:1/2"``."""
        parts = text.strip().split(":")
        tag = _TAGS.get(parts[0].strip().lower())
        if tag is None:
            raise ValueError(f"unknown family {parts[0]!r}")
        want = 4 if tag == "kappa_lambda" else 2
        if len(parts) != want:
            raise ValueError(f"family {parts[0]!r} expects {want - 1} parameter(s)")
        try:
            n = int(parts[1])
        except ValueError:
            raise ValueError(f"bad degree {parts[1]!r}") from None
        if tag == "kappa_lambda":
            return cls(tag, n, parse_rational(parts[2]), parse_rational(parts[3]))
        return cls(tag, n)

    def build(self) -> SinePoly:
        if self.tag == "phi":
            return phi(self.n)
        if self.tag == "sigma":
            return sigma(self.n)
        if self.tag == "theta_minus":
            return theta(self.n, -1)
        if self.tag == "theta_plus":
            return theta(self.n, 1)
        if self.tag == "lukacs":
            return lukacs(self.n)
        if self.tag == "vietoris":
            return vietoris(self.n)
        return kappa_lambda(self.n, self.kappa, self.lam)

    def __str__(self) -> str:
        if self.tag == "kappa_lambda":
            return f"kappa-lambda:{self.n}:{format_rational(self.kappa)}:{format_rational(self.lam)}"
        short = {"theta_minus": "theta-", "theta_plus": "theta+"}.get(self.tag, self.tag)
        return f"{short}:{self.n}"
