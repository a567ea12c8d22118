"""
Open/closed theory: branes over a semisimple closed algebra.
"""
from .branes import (
    BraneConfig, ClosedStringAlgebra, K0Description, OpenAlgebra, build_open_algebra, cardy_check,
    classify_branes, closed_string_algebra, i_lower_star, i_lower_star_vector, i_upper_star,
    open_algebra_frobenius, random_brane_config, verify_boundary_maps,
)
