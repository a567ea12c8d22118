"""
Finite groups as Cayley tables.
"""
from .finite_group import (
    ConjugacyClass, FiniteGroup, Subgroup, centralizer, class_structure_constants,
    conjugacy_classes, direct_product, load_cayley_table, subgroup,
)
from .presets import build_preset, group_from_alias


def class_of(G: FiniteGroup, x: int) -> int:
    return G.class_of(x)


def element_order(G: FiniteGroup, x: int) -> int:
    return int(G.element_orders[x])


def exponent(G: FiniteGroup) -> int:
    return G.exponent
