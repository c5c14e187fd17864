"""
Interval branch and bound
=========================

A second, independent prover: bound sum a_k sin(kx) on subintervals with
Taylor enclosures of sin and bisect until every piece has a nonnegative
lower bound.  It cannot settle tangential zeros (those stay inconclusive),
but it never contradicts the exact certifier.
"""

from fractions import Fraction

from trigcert import RatInterval, SinePoly, branch_and_bound_nn, certify_sine, cos_enclosure, phi, sigma, sin_enclosure

print("sin(1) in", sin_enclosure(RatInterval(1)))
print("cos(1) in", cos_enclosure(RatInterval(1)))

cases = {
    "2 sin x + sin 2x / 2": SinePoly([2, Fraction(1, 2)]),
    "sigma(4) on [0, 1/2]": (sigma(4), Fraction(1, 2)),
    "sin x + sin 2x": SinePoly([1, 1]),
    "phi(3) (double zero at pi)": phi(3),
}
for name, case in cases.items():
    p, hi = case if isinstance(case, tuple) else (case, None)
    v = branch_and_bound_nn(p, 0, hi, max_depth=12)
    exact = certify_sine(p).status
    print(f"{name:28s} interval: {v.status:12s} nodes {v.nodes:5d}   sturm on [0, pi]: {exact}")
