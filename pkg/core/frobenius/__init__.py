"""
Frobenius algebras and their handle elements.
"""
from .algebra import (
    FrobeniusAlgebra, HandleElement, build_algebra, change_basis, comultiplication, copairing, cylinder_map,
    genus_invariant, handle_element, is_semisimple, regular_trace, rescale_trace,
    verify_frobenius_structure,
)
from .examples import (
    class_function_algebra, dual_numbers, group_algebra, matrix_algebra, semisimple_algebra,
)
