"""
The eight-dimensional piece of the wedge cube
=============================================

V_3 sits inside the 14-dimensional kernel of contraction on wedge^3 of a
6-dimensional symplectic space.  SL_2^3 acts on it; v0 is the image of the
base point.
"""
from fractions import Fraction

from trizeta.exactalg import MatrixQ

from trizeta.geometry import (V0, LineTriple, borel_element, fiber_basis, gram_P, gram_sym, lagrangian_gram,
                              orbit_point, pairing_sym, v3_project, vp_basis)
from trizeta.geometry.v3 import v_coordinates


def show(m):
    for row in m.to_rows():
        print("  " + " ".join(f"{str(x):>3}" for x in row))


print("dim V_P =", len(vp_basis()))
print("Gram of the symplectic pairing on V_3:")
show(gram_P())
print("<v0, v0>_sym =", pairing_sym(V0, V0, 1), "  gram_sym(1) is the identity:", gram_sym(1) == MatrixQ.identity(8))

# push the base point through a Borel element and read off (c1, c2, c3, t)
h = borel_element((Fraction(2), Fraction(3), Fraction(1, 5)), (Fraction(1), Fraction(-1), Fraction(4)))
print("V coordinates of the Borel image:", v_coordinates(v3_project(orbit_point(h))))

# a fiber over a line triple is Lagrangian for the symplectic pairing ...
lines = LineTriple(((1, 2), (3, -1), (0, 1)))
b = fiber_basis(lines)
print("Lagrangian:", lagrangian_gram(b, "P").is_zero())
# ... and nondegenerate for the symmetric one
show(lagrangian_gram(b, "sym", 1))
