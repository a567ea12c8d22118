"""
Cross-checks tying the lattice state sum to the counting model and to the
Frobenius-algebra cylinder.
"""
import logging
from fractions import Fraction

import numpy as np

from core.characters import character_table
from core.dijkgraaf_witten import dw_invariant
from core.errors import ValidationError
from core.frobenius import cylinder_map, group_algebra
from core.group import FiniteGroup
from core.reports import CheckReport
from .moves import random_moves
from .state_sum import cylinder_projector, group_algebra_tensors, partition_function, projector_report
from .triangulation import Triangulation, cylinder, disk, single_triangle, sphere, standard_surface

logger = logging.getLogger('lattice')

NAMED_SURFACES = {
    'sphere': sphere,
    'torus': lambda: standard_surface(1),
    'cylinder': cylinder,
    'disk': disk,
    'triangle': single_triangle,
}


def surface_from_name(text: str) -> Triangulation:
    """'genus:g' or one of the named surfaces."""
    text = text.strip().lower()
    if text.startswith('genus:'):
        try:
            return standard_surface(int(text.split(':', 1)[1]))
        except ValueError:
            raise ValidationError(f"malformed genus in surface name '{text}'")
    if text in NAMED_SURFACES:
        return NAMED_SURFACES[text]()
    raise ValidationError(f"unknown surface '{text}' (use genus:g or one of {', '.join(NAMED_SURFACES)})")


def pachner_invariance_check(G: FiniteGroup, g: int, moves: int = 50, seed: int = 0,
                             surface: Triangulation = None) -> CheckReport:
    """
    Exact state sum before and after a seeded random sequence of moves, on the
    standard genus g surface unless another surface is given.
    """
    d = group_algebra_tensors(G)
    surface = standard_surface(g) if surface is None else surface
    if surface.boundary:
        raise ValidationError("the Pachner check compares closed surfaces")
    before = partition_function(surface, d)
    shuffled = random_moves(surface, moves, seed)
    after = partition_function(shuffled, d)
    return CheckReport(
        name="pachner_invariance",
        defects={
            "partition_function": float(abs(after - before)),
            "euler_characteristic": float(abs(shuffled.euler_characteristic() - surface.euler_characteristic())),
        },
        tol=0.0,
        details={"group": G.name, "genus": g, "before": before, "after": after,
                 "triangles": shuffled.num_triangles},
    )


def lattice_bridge_check(G: FiniteGroup, g: int) -> CheckReport:
    """
    dw_invariant(G, g) = |G|^(2g-2) Z_g exactly, and Z_g = sum_rho dim^(2-2g).
    """
    z_lattice = partition_function(standard_surface(g), group_algebra_tensors(G))
    dw = dw_invariant(G, g)
    scaled = Fraction(G.order) ** (2 * g - 2) * z_lattice
    dims = character_table(G).dims
    peter_weyl = sum(Fraction(dim) ** (2 - 2 * g) for dim in dims)
    return CheckReport(
        name="lattice_bridge",
        defects={
            "dw_scaling": float(abs(scaled - dw)),
            "character_sum": float(abs(z_lattice - peter_weyl)),
        },
        tol=0.0,
        details={"group": G.name, "genus": g, "lattice": z_lattice, "dw": dw},
    )


def cylinder_bridge_check(G: FiniteGroup, tol: float = 1e-9) -> CheckReport:
    """
    Triangulated cylinder versus mu sigma Delta on C[G] with the regular trace,
    plus the projector properties of the exact matrix.
    """
    pi = cylinder_projector(G)
    props = projector_report(G, pi)
    algebraic = cylinder_map(group_algebra(G, 'lattice'))
    numeric = np.array(pi, dtype=float)
    return CheckReport(
        name="cylinder_projector",
        defects={
            "frobenius_agreement": float(np.max(np.abs(numeric - algebraic))),
            "idempotent": 0.0 if props["idempotent"] else 1.0,
            "rank": float(abs(props["rank"] - len(G.classes))),
            "fixes_class_sums": 0.0 if props["fixes_class_sums"] else 1.0,
        },
        tol=tol,
        details={"group": G.name, "rank": props["rank"]},
    )
