"""
Degree-3 sine and degree-2 cosine polynomials
=============================================

For [a, b, c]_s the region is described by two explicit cases, and the
cosine polynomial a + b cos x + c cos 2x reduces to the sine polynomial
[2a - c, b, c]_s after multiplying by 2 sin x.
"""

from fractions import Fraction

import numpy as np

from trigcert import CosinePoly, SinePoly, certify_cosine, certify_sine, cosine2_characterize, degree3_characterize
from trigcert.region import cosine2_reduction

grid = [Fraction(k, 4) for k in range(-8, 9)]
agree = sum(
    degree3_characterize(a, b, c) == certify_sine(SinePoly([a, b, c])).nonnegative
    for a in grid for b in grid for c in grid
)
print(f"[a,b,c]_s: closed form agrees with the certifier on {agree}/{len(grid) ** 3} grid points")

agree = sum(
    cosine2_characterize(a, b, c) == certify_cosine(CosinePoly([a, b, c])).nonnegative
    for a in grid for b in grid for c in grid
)
print(f"a + b cos x + c cos 2x: agreement on {agree}/{len(grid) ** 3} grid points")

# The same formulas do not describe a + b cos 2x + c cos 3x.
a, b, c = Fraction(1, 2), Fraction(-1, 2), Fraction(1, 4)
x = np.pi
print("\n(a, b, c) = (1/2, -1/2, 1/4): formula says", cosine2_characterize(a, b, c))
print("  a + b cos x  + c cos 2x at pi:", float(a - b + c))
print("  a + b cos 2x + c cos 3x at pi:", float(a + b * np.cos(2 * x) + c * np.cos(3 * x)))
print("  reduced sine polynomial:", cosine2_reduction(a, b, c))
