"""
Coefficient tests
=================

Some sufficient conditions only look at the coefficients: the alternating
partial sums of Vietoris-Belov type and Fejer's convexity test.  The
endpoint conditions at 0 and pi are necessary.  This demo compares them with
the exact certifier.
"""

from trigcert import SinePoly, certify_sine, criteria_report, lukacs, sigma, theta, vietoris

examples = {
    "vietoris(6)": vietoris(6),
    "sigma(5)": sigma(5),
    "lukacs(5)": lukacs(5),
    "theta-(5)": theta(5, -1),
    "[4,3,2,2,1]": SinePoly([4, 3, 2, 2, 1]),
    "[1,1,1]": SinePoly([1, 1, 1]),
}

print(f"{'polynomial':14s} {'belov':6s} {'fejer':6s} {'endpoints':10s} certified")
for name, p in examples.items():
    r = criteria_report(p)
    print(f"{name:14s} {str(r.belov_ok):6s} {str(r.fejer_ok):6s} {str(r.necessary_ok):10s} {certify_sine(p).status}")

# [1,1,1]_s passes every endpoint test yet is negative inside (0, pi):
# the necessary conditions are far from sufficient.
r = criteria_report(SinePoly([1, 1, 1]))
print("\n[1,1,1]_s endpoint sums:", r.nec_at_0.first_sum, r.nec_at_pi.first_sum)

# When the first-order sum vanishes the cubic sum decides; it must be <= 0.
at0 = criteria_report(theta(4, -1)).nec_at_0
print("theta-(4) at 0: first", at0.first_sum, "third", at0.third_sum, "->", at0.third_direction)
