"""
Triangulation state sums in exact arithmetic.
"""
from .exact import exact_inverse, exact_rank, fraction_array, integerize
from .moves import flippable_slots, pachner_13, pachner_22, random_moves
from .state_sum import (
    LatticeTensorData, contract, cylinder_projector, group_algebra_tensors, lattice_unit,
    partition_function, projector_report, tensors_from_structure_constants, verify_tensor_data,
)
from .triangulation import (
    Triangulation, cylinder, disk, library_surface, single_triangle, sphere, standard_surface,
    triangulation_from_dict, triangulation_to_dict, verify_face_maps,
)
from .bridge import cylinder_bridge_check, lattice_bridge_check, pachner_invariance_check, surface_from_name
