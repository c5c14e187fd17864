"""Coefficient tests: Vietoris-Belov, Fejer, and the endpoint necessary conditions."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .polys import RationalLike, SinePoly


@dataclass
class EndpointCheck:
    """Necessary condition at x = 0 or x = pi.

    ``first_sum`` must be >= 0.  When it is exactly zero the third-order sum
    is computed as well and must be <= 0 (the x^3 Taylor coefficient of the
    sine polynomial at the endpoint is ``-third_sum / 6``).
    """

    first_sum: Fraction
    pass_: bool
    third_sum: Optional[Fraction] = None
    third_pass: Optional[bool] = None
    # direction printed alongside the third-order condition in the source text
    printed_third_direction: str = ">= 0"
    third_direction: str = "<= 0"

    @property
    def ok(self) -> bool:
        return self.pass_ and self.third_pass is not False


@dataclass
class CriteriaReport:
    belov_ok: bool
    belov_partial_sums: list[Fraction]
    fejer_ok: bool
    nec_at_0: EndpointCheck
    nec_at_pi: EndpointCheck
    notes: list[str] = field(default_factory=list)

    @property
    def necessary_ok(self) -> bool:
        return self.nec_at_0.ok and self.nec_at_pi.ok


def _fractions(a: Sequence[RationalLike]) -> list[Fraction]:
    return [Fraction(x) for x in a]


def _non_increasing(a: Sequence[Fraction]) -> bool:
    return all(a[i] >= a[i + 1] for i in range(len(a) - 1))


def belov_partial_sums(a: Sequence[RationalLike]) -> list[Fraction]:
    """``sum_{k<=m} (-1)^(k-1) k a_k`` for m = 1..n."""
    out = []
    s = Fraction(0)
    for k, ak in enumerate(_fractions(a), start=1):
        s += ak * k if k % 2 else -ak * k
        out.append(s)
    return out


def belov_condition(a: Sequence[RationalLike]) -> tuple[bool, list[Fraction]]:
    """Condition (B) together with the positivity and monotonicity hypotheses.

    Returns ``(ok, partial_sums)``; a sequence that is not positive and
    non-increasing is reported as failing rather than rejected.
    """
    a = _fractions(a)
    if not a:
        raise ValueError("empty coefficient list")
    sums = belov_partial_sums(a)
    ok = all(x > 0 for x in a) and _non_increasing(a) and all(s >= 0 for s in sums)
    return ok, sums


def fejer_condition(a: Sequence[RationalLike]) -> bool:
    """Fejer's convexity criterion for ``sum_{k<n} b_k s_k + (b_n / 2) s_n``.

    ``a`` is the coefficient vector as displayed, so its last entry is the
    already halved ``b_n / 2``.
    """
    a = _fractions(a)
    if len(a) < 2:
        raise ValueError("fejer_condition needs at least two coefficients")
    b = a[:-1] + [2 * a[-1]]
    if not all(x > 0 for x in b) or not _non_increasing(b):
        return False
    return all(b[k] + b[k + 2] >= 2 * b[k + 1] for k in range(len(b) - 2))


def _endpoint(first: Fraction, third: Fraction) -> EndpointCheck:
    if first != 0:
        return EndpointCheck(first, first > 0)
    return EndpointCheck(first, True, third, third <= 0)


def necessary_conditions(p: SinePoly) -> tuple[EndpointCheck, EndpointCheck]:
    """Endpoint conditions at 0 and pi; a failure proves p is not NN."""
    s1 = s3 = t1 = t3 = Fraction(0)
    for k, ak in enumerate(p.coeffs, start=1):
        s1 += k * ak
        s3 += k**3 * ak
        sign = 1 if k % 2 else -1
        t1 += sign * k * ak
        t3 += sign * k**3 * ak
    return _endpoint(s1, s3), _endpoint(t1, t3)


def criteria_report(p: SinePoly) -> CriteriaReport:
    belov_ok, sums = belov_condition(p.coeffs)
    fejer_ok = fejer_condition(p.coeffs) if p.degree >= 2 else False
    at0, atpi = necessary_conditions(p)
    notes = []
    if p.degree < 2:
        notes.append("fejer condition needs two coefficients; reported false")
    return CriteriaReport(belov_ok, sums, fejer_ok, at0, atpi, notes)


def vietoris_coefficients(n: int) -> list[Fraction]:
    """a_1..a_n of the Vietoris sequence: 1, 1/2, 1/2, 3/8, 3/8, 5/16, ..."""
    if n < 1:
        raise ValueError("n must be >= 1")
    # a_{2k} = a_{2k+1} = (1*3*...*(2k-1)) / (2*4*...*(2k)), a_1 = 1
    out = [Fraction(1)]
    c = Fraction(1)
    k = 1
    while len(out) < n:
        c *= Fraction(2 * k - 1, 2 * k)
        out.extend([c, c])
        k += 1
    return out[:n]


def identity_k3_check(n: int) -> bool:
    """True iff the alternating cubic sum of phi(n) vanishes exactly.

    This is the equality case of the third-order condition at pi for phi.
    """
    from .families import phi

    if n % 2 == 0:
        raise ValueError("the cubic identity concerns odd n")
    coeffs = phi(n).coeffs
    total = sum((k**3 * a if k % 2 else -(k**3) * a) for k, a in enumerate(coeffs, start=1))
    return total == 0
