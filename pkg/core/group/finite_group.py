"""
Finite groups as explicit multiplication tables, with conjugacy, centralizer
and class-algebra structure.

Elements are dense indices 0..n-1 and the identity is always index 0, so every
derived matrix (class constants, character tables, modular data) has a
reproducible ordering.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Sequence, Tuple

import numpy as np

from core.errors import GuardExceeded, ValidationError
from core.settings import get_settings

logger = logging.getLogger('core')


@dataclass(frozen=True)
class ConjugacyClass:
    """A conjugacy class, represented by its minimal member."""
    representative: int
    members: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(eq=False)
class FiniteGroup:
    """
    A finite group given by its Cayley table.

    The table is validated on construction (identity at 0, Latin square,
    inverses, associativity) and frozen afterwards.
    """
    name: str
    cayley: np.ndarray
    inverse: np.ndarray = field(init=False)
    identity: int = field(init=False, default=0)

    def __post_init__(self):
        table = np.array(self.cayley, dtype=np.int64)
        _validate_table(table)
        self.inverse = np.argmin(table, axis=1).astype(np.int64)
        if np.any(table[self.inverse, np.arange(len(table))] != 0):
            raise ValidationError("non-invertible element: left and right inverses differ")
        _check_associativity(table)
        table.setflags(write=False)
        self.inverse.setflags(write=False)
        self.cayley = table
        logger.debug(f"Built group {self.name} of order {self.order}")

    @property
    def order(self) -> int:
        return int(self.cayley.shape[0])

    def mul(self, x: int, y: int) -> int:
        return int(self.cayley[x, y])

    def inv(self, x: int) -> int:
        return int(self.inverse[x])

    def commutator(self, a: int, b: int) -> int:
        """[a, b] = a b a^-1 b^-1."""
        t = self.cayley
        return int(t[t[t[a, b], self.inverse[a]], self.inverse[b]])

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.cayley, self.cayley.T))

    # ------------------------------------------------------------------
    # Derived structure, computed once
    # ------------------------------------------------------------------
    @cached_property
    def conjugation_table(self) -> np.ndarray:
        """conjugation_table[g, x] = g x g^-1."""
        t = self.cayley
        return t[t, self.inverse[:, None]]

    @cached_property
    def classes(self) -> List[ConjugacyClass]:
        conj = self.conjugation_table
        assigned = np.full(self.order, -1, dtype=np.int64)
        result: List[ConjugacyClass] = []
        for x in range(self.order):
            if assigned[x] >= 0:
                continue
            members = np.unique(conj[:, x])
            assigned[members] = len(result)
            result.append(ConjugacyClass(representative=int(members[0]),
                                         members=tuple(int(m) for m in members)))
        return result

    @cached_property
    def class_index(self) -> np.ndarray:
        """class_index[x] = position of x's class in `classes`."""
        index = np.empty(self.order, dtype=np.int64)
        for a, cls in enumerate(self.classes):
            index[list(cls.members)] = a
        index.setflags(write=False)
        return index

    @cached_property
    def element_orders(self) -> np.ndarray:
        orders = np.zeros(self.order, dtype=np.int64)
        for x in range(self.order):
            power, k = x, 1
            while power != 0:
                power = int(self.cayley[power, x])
                k += 1
            orders[x] = k
        return orders

    @property
    def exponent(self) -> int:
        return int(np.lcm.reduce(self.element_orders))

    def class_of(self, x: int) -> int:
        return int(self.class_index[x])

    def inverse_class(self, a: int) -> int:
        """Index of the class containing the inverses of class a."""
        return int(self.class_index[self.inverse[self.classes[a].representative]])


@dataclass(eq=False)
class Subgroup:
    """
    A subgroup together with its own re-indexed Cayley table.

    `elements[i]` is the parent index of the embedded group's element i.
    """
    parent: FiniteGroup
    elements: Tuple[int, ...]
    embedded_cayley: FiniteGroup

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def position(self) -> dict:
        """Parent index -> embedded index."""
        return {x: i for i, x in enumerate(self.elements)}

    def contains(self, x: int) -> bool:
        return x in self.position


def _validate_table(table: np.ndarray) -> None:
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise ValidationError(f"Cayley table must be a non-empty square table, got shape {table.shape}")
    n = table.shape[0]
    settings = get_settings()
    if n > settings.max_group_order:
        raise GuardExceeded(f"group order {n} exceeds cap {settings.max_group_order}")
    if table.min() < 0 or table.max() >= n:
        raise ValidationError("Cayley table entries out of range")
    expected = np.arange(n)
    if not (np.array_equal(table[0], expected) and np.array_equal(table[:, 0], expected)):
        raise ValidationError("missing identity at index 0")
    sorted_rows = np.sort(table, axis=1)
    for x in range(n):
        if not np.array_equal(sorted_rows[x], expected):
            raise ValidationError(f"row {x} is not a permutation")
    sorted_cols = np.sort(table, axis=0)
    for y in range(n):
        if not np.array_equal(sorted_cols[:, y], expected):
            raise ValidationError(f"column {y} is not a permutation")


def _generating_set(table: np.ndarray) -> List[int]:
    """Greedy generating set: add the least element outside the span so far."""
    n = table.shape[0]
    span = np.zeros(n, dtype=bool)
    span[0] = True
    gens: List[int] = []
    for x in range(n):
        if span[x]:
            continue
        gens.append(x)
        frontier = list(np.flatnonzero(span))
        while frontier:
            new = []
            for y in frontier:
                for g in gens:
                    z = table[y, g]
                    if not span[z]:
                        span[z] = True
                        new.append(z)
            frontier = new
    return gens


def _check_associativity(table: np.ndarray) -> None:
    """
    Exhaustive check up to the configured order, Light's test over a
    generating set above it.
    """
    n = table.shape[0]
    if n <= get_settings().exhaustive_assoc_cap:
        middles = range(n)
    else:
        middles = _generating_set(table)
    for a in middles:
        left = table[table[:, a], :]
        right = table[:, table[a, :]]
        if not np.array_equal(left, right):
            raise ValidationError(f"non-associative table (fails at middle element {a})")


def load_cayley_table(data: Sequence[Sequence[int]], name: str = "table") -> FiniteGroup:
    """Build a group from a raw table, verifying every group axiom."""
    try:
        table = np.array(data, dtype=np.int64)
    except (TypeError, ValueError) as e:
        raise ValidationError(f"Cayley table is not a rectangular integer table: {e}")
    return FiniteGroup(name=name, cayley=table)


def conjugacy_classes(G: FiniteGroup) -> List[ConjugacyClass]:
    """Classes ordered by minimal member; class 0 is {identity}."""
    return list(G.classes)


def subgroup(G: FiniteGroup, elements: Sequence[int], name: str = None) -> Subgroup:
    elements = tuple(sorted(set(int(x) for x in elements)))
    if not elements or elements[0] != 0:
        raise ValidationError("subgroup must contain the identity")
    position = {x: i for i, x in enumerate(elements)}
    table = np.empty((len(elements), len(elements)), dtype=np.int64)
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            z = int(G.cayley[x, y])
            if z not in position:
                raise ValidationError("subset is not closed under the product")
            table[i, j] = position[z]
    if G.order % len(elements) != 0:
        raise ValidationError(f"subgroup order {len(elements)} does not divide {G.order}")
    embedded = FiniteGroup(name=name or f"{G.name}<{len(elements)}>", cayley=table)
    return Subgroup(parent=G, elements=elements, embedded_cayley=embedded)


def centralizer(G: FiniteGroup, g: int) -> Subgroup:
    """Z(g) = {h : hg = gh}."""
    if not 0 <= g < G.order:
        raise ValidationError(f"element {g} out of range for group of order {G.order}")
    members = np.flatnonzero(G.cayley[:, g] == G.cayley[g, :])
    return subgroup(G, members.tolist(), name=f"Z_{G.name}({g})")


def class_structure_constants(G: FiniteGroup) -> np.ndarray:
    """
    Integer tensor N[a, b, c] with e_a e_b = sum_c N[a, b, c] e_c for class sums.

    N[a, b, c] counts h in class b with z h^-1 in class a, for a fixed z in class c.
    """
    r = len(G.classes)
    N = np.zeros((r, r, r), dtype=np.int64)
    cls = G.class_index
    hs = np.arange(G.order)
    for c, klass in enumerate(G.classes):
        z = klass.representative
        np.add.at(N, (cls[G.cayley[z, G.inverse[hs]]], cls[hs], c), 1)
    return N


def direct_product(G: FiniteGroup, H: FiniteGroup, name: str = None) -> FiniteGroup:
    """G x H with (g, h) at index g * |H| + h."""
    m = H.order
    table = (G.cayley[:, None, :, None] * m + H.cayley[None, :, None, :])
    table = table.reshape(G.order * m, G.order * m)
    return FiniteGroup(name=name or f"{G.name}x{H.name}", cayley=table)
