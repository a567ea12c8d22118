"""
Two-dimensional Yang-Mills with heat-kernel weights.
"""
from .heat_kernel import (
    KINDS, LAYOUTS, ZETA_EVEN, Spectrum, YMResult, approximate_unit_defect, assemble_closed_surface,
    elementary_operators, finite_group_spectrum, gluing_consistency_check, nmax_for_tail,
    partition_function, random_split, semigroup_check, su2_spectrum, tail_bound, zeta_limit,
)
