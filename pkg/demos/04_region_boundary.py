"""
The region of nonnegative [kappa, 1, ..., 1, lambda]_s
======================================================

For fixed n and lambda the polynomial is nonnegative exactly when kappa is
at least kappa0(lambda).  Straight pieces and the n = 3, 4 curves are known
in closed form; elsewhere kappa0 is bracketed by certified bisection.
"""

from fractions import Fraction
from pathlib import Path

from trigcert.region import boundary_sweep, even_line, kappa0, printed_even_line, is_member, write_boundary

out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)

for n in (3, 4, 5):
    pts = boundary_sweep(n, Fraction(-1), Fraction(2), 61, Fraction(1, 10**6))
    low = min(pts, key=lambda b: b.kappa0_hi)
    print(f"n={n}: lowest kappa0 = {float(low.mid):.6f} at lambda = {low.lam}")
    write_boundary(pts, out / f"boundary_n{n}.csv", "csv", Fraction(1, 10**6))
    write_boundary(pts, out / f"boundary_n{n}.svg", "svg", Fraction(1, 10**6))

# Closed form versus bisection at one point of each kind.
for n, lam in ((3, Fraction(1, 8)), (3, Fraction(2)), (4, Fraction(1, 5)), (5, Fraction(2, 5))):
    closed = kappa0(n, lam)
    forced = kappa0(n, lam, force_bisection=True)
    print(f"n={n} lambda={lam}: {closed.method:17s} {float(closed.mid):.7f}   bisection {float(forced.mid):.7f}")

# The even-n line through (1/2, 1) has slope n; the variant with (n-1)/2
# lies below the region.
n, lam = 4, Fraction(1)
print("\ncorrected line value", even_line(n, lam), "member:", is_member(n, even_line(n, lam), lam))
print("printed line value  ", printed_even_line(n, lam), "member:", is_member(n, printed_even_line(n, lam), lam))
print("\nwrote", ", ".join(sorted(p.name for p in out.iterdir())))
