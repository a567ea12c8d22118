"""
Finite gauge group model in two dimensions.
"""
from .counting import (
    METHODS, SurfaceSignature, commutator_distribution, commutator_table, count_homs_surface_group,
    dw_invariant, exact_handle_element, labels_from_representatives, mednykh_exact, mednykh_formula,
    npoint_algebraic, npoint_count, npoint_function,
)
