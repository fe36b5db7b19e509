"""Exact multilinear algebra of the wedge cube of Q^6 and its 2 (x) 2 (x) 2 piece."""
from .wedge import (NotInVPError, WedgeVector, contraction, pairing_P, vp_basis, vp_coordinates, wedge3,
                    wedge_act)
from .groups import GAMMA0, TripleSL2, borel_element, embed, j_xi_inverse, n0_element, torus_TH
from .v3 import (V0, LineTriple, V3Vector, fiber_basis, gram_P, gram_sym, j_image, lagrangian_gram,
                 orbit_point, pairing_sym, stabilizer_membership, v3_act, v3_act_wedge, v3_project)
from .checks import SUITES, run_geometry
