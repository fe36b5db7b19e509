"""
The GL_r x GL_{r-2} unramified identity, coefficient by coefficient
==================================================================

Both sides are truncated power series in T = q^{-s} with exact rational
coefficients, so "equal" means equal.
"""
import random
from fractions import Fraction

from trizeta.symfunc import SatakePoint
from trizeta.zeta import rankin_lhs, rankin_rhs, verify_rankin
from trizeta.zeta.params import random_exact_point

# a hand-picked Satake point for GL_3 and one for GL_1
alpha = SatakePoint.exact([Fraction(2), Fraction(-1, 3), Fraction(5, 7)])
alpha_p = SatakePoint.exact([Fraction(3, 2)])

lhs = rankin_lhs(3, 1, alpha, alpha_p, 6)   # partition sum, l = 1
rhs = rankin_rhs(3, 1, alpha, alpha_p, 6)   # finite part times L-factors
print("lhs:", lhs.coeffs)
print("rhs:", rhs.coeffs)
print("equal through T^6:", lhs == rhs)

# random points, bigger rank
rng = random.Random(0)
for r in (4, 5):
    a, ap = random_exact_point(rng, r), random_exact_point(rng, r - 2)
    print(verify_rankin(r, 2, a, ap, 8).line())

# a perturbed right-hand side is caught, and the witness says where
print(verify_rankin(3, 0, alpha, alpha_p, 4, perturb=True).line())
