"""Unramified computations for the triple-product zeta integral."""
from .params import (ConeError, CompatibilityError, ExponentsCA, InternalIdentityError, LinearForm,
                     ZetaParams, cone_check, eta_torus_value, exponents_CA, random_exact_params,
                     random_tempered_params, sample_cone_point, symbolic_s)
from .rankin import (cauchy_check, cofactor_check, cofactor_check_symbolic, rankin_lhs, rankin_rhs,
                     verify_rankin)
from .report import VerificationReport, encode_value
from .theorem import (FORMAL_VARS, InsufficientTruncationError, TruncatedValue, compare_direct_closed,
                      default_scan_point, full_l_numeric, full_l_series, tempered_scan, znaive_closed,
                      znaive_closed_series, znaive_direct, znaive_direct_series)
from .rationality import (PolynomialityError, formal_quotient, gcd_quotient, literal_sigma_sum,
                          verify_rationality, y_lattice)
