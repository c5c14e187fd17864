"""
From sine sums to ordinary polynomials
======================================

A sine polynomial sum a_k sin(kx) factors as sin(x) * P(cos x), where P is
built from Chebyshev polynomials of the second kind.  On [0, pi] the factor
sin(x) is nonnegative, so the trigonometric question becomes: is P >= 0 on
[-1, 1]?
"""

from fractions import Fraction

import numpy as np

from trigcert import SinePoly, eval_float, phi, reflect, sine_to_algebraic

# The three-term family [kappa, 1, lambda]_s reduces to a quadratic in X.
kappa, lam = Fraction(5, 4), Fraction(1, 4)
p = SinePoly([kappa, 1, lam])
P = sine_to_algebraic(p)
print("sine polynomial :", p)
print("algebraic form  :", P)  # 4 lam X^2 + 2 X + (kappa - lam) = (X + 1)^2

# Check the factorisation numerically on a grid.
x = np.linspace(0, np.pi, 7)
lhs = np.array([eval_float(p, t) for t in x])
rhs = np.sin(x) * np.array([P.eval_float(np.cos(t)) for t in x])
print("max |p(x) - sin(x) P(cos x)| =", np.abs(lhs - rhs).max())

# Reflection x -> pi - x flips the sign of the even-index coefficients.
q = reflect(phi(5))
print("phi(5)          :", phi(5))
print("reflected       :", q)
print("p(pi - 1) =", eval_float(phi(5), np.pi - 1), " q(1) =", eval_float(q, 1.0))
