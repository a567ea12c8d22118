"""
The triangulation state sum: one three-point tensor per triangle, one inverse
metric per glued edge, contracted exactly.

Tensors are carried as (Fraction scale, integer object array) so that the
contraction itself only multiplies and adds Python integers.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from core.errors import GuardExceeded, InvariantViolation, ValidationError
from core.group import FiniteGroup
from core.settings import get_settings
from .exact import exact_inverse, exact_rank, fraction_array, integerize
from .triangulation import Triangulation, cylinder

logger = logging.getLogger('lattice')


@dataclass(eq=False)
class LatticeTensorData:
    """
    Exact tensors of a semisimple algebra with its regular trace.

    m[i, j, k] = eps(e_i e_j e_k), metric[i, j] = eps(e_i e_j),
    inverse_metric its inverse; all object arrays of Fractions.
    """
    m: np.ndarray
    metric: np.ndarray
    inverse_metric: np.ndarray
    name: str = "tensors"

    @property
    def dim(self) -> int:
        return int(self.metric.shape[0])

    @cached_property
    def raised(self) -> np.ndarray:
        """m_ij^k = sum_l m_ijl g^lk."""
        return np.tensordot(self.m, self.inverse_metric, axes=(2, 0))


def group_algebra_tensors(G: FiniteGroup) -> LatticeTensorData:
    """C[G]: m_ijk = |G| [ijk = e], g_ij = |G| [i = j^-1]."""
    n = G.order
    t = G.cayley
    idx = np.arange(n)
    triple = t[t[idx[:, None, None], idx[None, :, None]], idx[None, None, :]]
    m = np.where(triple == 0, Fraction(n), Fraction(0)).astype(object)
    is_inverse = idx[:, None] == G.inverse[None, :]
    metric = np.where(is_inverse, Fraction(n), Fraction(0)).astype(object)
    inverse_metric = np.where(is_inverse, Fraction(1, n), Fraction(0)).astype(object)
    return LatticeTensorData(m=m, metric=metric, inverse_metric=inverse_metric, name=f"C[{G.name}]")


def tensors_from_structure_constants(mu, name: str = "algebra") -> LatticeTensorData:
    """
    Lattice tensors of any semisimple algebra from rational structure constants:
    g_ij = m_ik^l m_jl^k and m_ijk = m_ij^l g_lk.
    """
    mu = fraction_array(mu)
    if mu.ndim != 3 or len(set(mu.shape)) != 1:
        raise ValidationError(f"structure constants must have shape (d, d, d), got {mu.shape}")
    metric = np.tensordot(mu, mu.transpose(0, 2, 1), axes=([1, 2], [1, 2]))
    try:
        inverse = exact_inverse(metric)
    except ValidationError:
        raise ValidationError("degenerate lattice metric: the algebra is not semisimple")
    m = np.tensordot(mu, metric, axes=(2, 0))
    return LatticeTensorData(m=m, metric=metric, inverse_metric=inverse, name=name)


def lattice_unit(d: LatticeTensorData) -> np.ndarray:
    """1_A = g^ij m_ij^k e_k."""
    return np.tensordot(d.inverse_metric, d.raised, axes=([0, 1], [0, 1]))


def verify_tensor_data(d: LatticeTensorData) -> None:
    """Raise unless g_ij = m_ik^l m_jl^k."""
    recomputed = np.tensordot(d.raised, d.raised.transpose(0, 2, 1), axes=([1, 2], [1, 2]))
    if not np.array_equal(recomputed, d.metric):
        raise InvariantViolation("lattice_metric", f"metric of {d.name} is not m_ik^l m_jl^k")


@dataclass
class _Node:
    scale: Fraction
    array: np.ndarray
    legs: List[object] = field(default_factory=list)


def _trace_repeated(node: _Node) -> _Node:
    """Contract every leg label that occurs twice on the same node."""
    while True:
        seen = {}
        pair = None
        for axis, leg in enumerate(node.legs):
            if leg in seen:
                pair = (seen[leg], axis)
                break
            seen[leg] = axis
        if pair is None:
            return node
        i, j = pair
        array = np.asarray(np.diagonal(node.array, axis1=i, axis2=j).sum(axis=-1), dtype=object)
        legs = [leg for axis, leg in enumerate(node.legs) if axis not in pair]
        node = _Node(node.scale, array, legs)


def _merge(a: _Node, b: _Node, cap: int) -> _Node:
    shared = [leg for leg in a.legs if leg in b.legs]
    legs = [leg for leg in a.legs if leg not in shared] + [leg for leg in b.legs if leg not in shared]
    size = a.array.size * b.array.size
    for leg in shared:
        size //= a.array.shape[a.legs.index(leg)] ** 2
    if size > cap:
        raise GuardExceeded(f"contraction intermediate of {size} entries exceeds cap {cap}")
    axes_a = [a.legs.index(leg) for leg in shared]
    axes_b = [b.legs.index(leg) for leg in shared]
    array = np.tensordot(a.array, b.array, axes=(axes_a, axes_b))
    return _trace_repeated(_Node(a.scale * b.scale, array, legs))


def _pick_pair(nodes: List[_Node]) -> Tuple[int, int]:
    """Greedy choice: the connected pair whose result has the fewest legs."""
    best = None
    for i in range(len(nodes)):
        legs_i = set(nodes[i].legs)
        for j in range(i + 1, len(nodes)):
            shared = len(legs_i.intersection(nodes[j].legs))
            rank = len(nodes[i].legs) + len(nodes[j].legs) - 2 * shared
            key = (shared == 0, rank, i, j)
            if best is None or key < best[0]:
                best = (key, i, j)
    return best[1], best[2]


def contract(t: Triangulation, d: LatticeTensorData) -> Tuple[Fraction, np.ndarray, List[int]]:
    """
    Contract the state sum of t.

    Returns:
        (scale, integer array, open slots): the value is scale * array, with
        one axis per boundary slot in the order of `open slots`
    """
    cap = get_settings().max_tensor_entries
    m_scale, m_int = integerize(d.m)
    g_scale, g_int = integerize(d.inverse_metric)
    nodes: List[_Node] = []
    for tri in range(t.num_triangles):
        array = m_int
        legs: List[object] = []
        for k in range(3):
            s = 3 * tri + k
            partner = t.pairing.get(s)
            legs.append(('open', s) if partner is None else ('edge', min(s, partner)))
        nodes.append(_Node(m_scale, array, legs))
    # absorb g^ij into the lower-numbered slot of each glued pair
    for s, partner in t.pairing.items():
        if s < partner:
            node = nodes[s // 3]
            axis = s % 3
            array = np.tensordot(node.array, g_int, axes=([axis], [0]))
            node.array = np.moveaxis(array, -1, axis)
            node.scale *= g_scale
    nodes = [_trace_repeated(n) for n in nodes]

    while len(nodes) > 1:
        i, j = _pick_pair(nodes)
        merged = _merge(nodes[i], nodes[j], cap)
        nodes = [n for k, n in enumerate(nodes) if k not in (i, j)] + [merged]
    final = nodes[0]
    open_slots = t.boundary_slots
    order = [final.legs.index(('open', s)) for s in open_slots]
    array = np.transpose(final.array, order) if order else final.array
    return final.scale, array, open_slots


def partition_function(t: Triangulation, d: LatticeTensorData,
                       boundary_coloring: Optional[Sequence[int]] = None) -> Union[Fraction, np.ndarray]:
    """
    Exact state sum.

    Args:
        t: The triangulation
        d: Lattice tensors
        boundary_coloring: One basis index per boundary slot (circles in order)

    Returns:
        A Fraction for closed surfaces or colored boundaries, otherwise an
        object array of Fractions with one axis per boundary slot
    """
    scale, array, open_slots = contract(t, d)
    if not open_slots:
        return scale * int(array.reshape(-1)[0]) if array.ndim else scale * int(array)
    if boundary_coloring is not None:
        if len(boundary_coloring) != len(open_slots):
            raise ValidationError(f"coloring has {len(boundary_coloring)} entries, surface has "
                                  f"{len(open_slots)} boundary edges")
        for c in boundary_coloring:
            if not 0 <= c < d.dim:
                raise ValidationError(f"boundary color {c} out of range")
        return scale * int(array[tuple(boundary_coloring)])
    result = np.empty(array.shape, dtype=object)
    for index in np.ndindex(array.shape):
        result[index] = scale * int(array[index])
    return result


def cylinder_projector(G: FiniteGroup) -> np.ndarray:
    """
    pi[b, x]: the cylinder contraction with the output leg raised,
    pi(e_x) = sum_b pi[b, x] e_b.
    """
    d = group_algebra_tensors(G)
    values = partition_function(cylinder(), d)
    pi = np.dot(values, d.inverse_metric).T
    logger.debug(f"Cylinder projector of {G.name} has rank {exact_rank(pi)}")
    return pi


def projector_report(G: FiniteGroup, pi: np.ndarray) -> Dict[str, object]:
    """Idempotency, rank and class-sum fixed points of a cylinder projector."""
    n = G.order
    class_sums = []
    for cls in G.classes:
        v = np.array([Fraction(0)] * n, dtype=object)
        for x in cls.members:
            v[x] = Fraction(1)
        class_sums.append(v)
    return {
        "idempotent": bool(np.array_equal(np.dot(pi, pi), pi)),
        "rank": exact_rank(pi),
        "fixes_class_sums": all(np.array_equal(np.dot(pi, v), v) for v in class_sums),
    }
