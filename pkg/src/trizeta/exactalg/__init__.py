"""Exact arithmetic kernels: rationals, Q(sqrt q), Laurent polynomials,
truncated series, rational functions and dense matrices."""
from .guard import BitSizeExceeded, set_max_bits
from .quadext import QuadExt, half_power, is_exact, sqrt_exact
from .linalg import MatrixQ, det_exact, kernel_basis, rank_exact, rref, solve_exact, vandermonde
from .laurent import SparseLaurent, poly_divmod, truncated_product
from .series import TruncatedSeries, series_inverse, series_mul, series_product
from .ratfunc import RationalFunction, rf_normalize

__all__ = [
    "BitSizeExceeded", "set_max_bits", "QuadExt", "half_power", "is_exact", "sqrt_exact",
    "MatrixQ", "det_exact", "kernel_basis", "rank_exact", "rref", "solve_exact", "vandermonde",
    "SparseLaurent", "poly_divmod", "truncated_product",
    "TruncatedSeries", "series_inverse", "series_mul", "series_product",
    "RationalFunction", "rf_normalize",
]
