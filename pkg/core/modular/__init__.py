"""
Modular data: Drinfeld doubles, SU(2) at level k and the Verlinde formulas.
"""
from .modular_data import (
    ModularData, assemble, dual_labels, fusion_checks, fusion_genus_dim, modular_relations_check,
    perturb_s, validate, verlinde_dim, verlinde_fusion,
)
from .drinfeld_double import DoubleLabel, burnside_orbit_oracle, drinfeld_double, label_names, qdim_multiset
from .su2_level_k import (
    TWIST_SIGNS, central_charge, clebsch_gordan, conformal_weights, quantum_dimensions, su2_level_k,
    su2_s_matrix, summary,
)
