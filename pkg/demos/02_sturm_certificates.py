"""
Exact certificates with Sturm chains
====================================

The certifier isolates the distinct real roots of P on [-1, 1] and samples
one rational point between each pair.  A negative sample is an exact
witness; otherwise the samples together with the root intervals form the
certificate of nonnegativity.
"""

from fractions import Fraction

from trigcert import certify_sine, kappa_lambda, phi, sine_to_algebraic
from trigcert.oracle import dense_min

for n in (3, 5, 7, 9, 11):
    v = certify_sine(phi(n))
    print(f"phi({n:2d}) -> {v.status:11s} roots {len(v.certificate.roots)}, samples {len(v.certificate.samples)}")

# Lowering kappa below 5/4 breaks nonnegativity near x = pi.
p = kappa_lambda(7, Fraction(5, 4) - Fraction(1, 1000), Fraction(11, 28))
v = certify_sine(p)
print("\nkappa = 5/4 - 1/1000, n = 7")
print("  status        :", v.status)
print("  witness X     :", v.witness_X, " (x = %.6f)" % v.witness_x)
print("  P(witness)    :", v.witness_value)
print("  exact recheck :", sine_to_algebraic(p)(v.witness_X) < 0)

# The float oracle agrees, but only the exact verdict is a proof.
print("  dense sampling min:", dense_min(p, 100_000).min_value)
