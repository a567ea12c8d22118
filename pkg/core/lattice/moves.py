"""
Pachner moves in two dimensions: the 2-2 flip and the 1-3 subdivision.
"""
import logging
from typing import Dict

import numpy as np

from core.errors import ValidationError
from .triangulation import Triangulation, slot

logger = logging.getLogger('lattice')

# Random move sequences stop subdividing once the surface has grown by this many triangles
MAX_GROWTH = 6


def _remap(t: Triangulation, mapping: Dict[int, int], num_triangles: int, extra_pairs: Dict[int, int],
           name: str) -> Triangulation:
    pairing = {}
    for a, b in t.pairing.items():
        if a in mapping and b in mapping:
            pairing[mapping[a]] = mapping[b]
    pairing.update(extra_pairs)
    boundary = [[mapping[s] for s in circle] for circle in t.boundary]
    return Triangulation(num_triangles, pairing, boundary, name=name)


def pachner_22(t: Triangulation, edge_slot: int) -> Triangulation:
    """
    Flip the diagonal of the quadrilateral formed by the two triangles that
    share the interior edge carried by `edge_slot`.

    Triangle (e, a, b) and its neighbour (e', c, d) become (b, c, f) and
    (d, a, f'), with f and f' the new diagonal.
    """
    if edge_slot not in t.pairing:
        raise ValidationError(f"slot {edge_slot} is a boundary edge or out of range")
    partner = t.pairing[edge_slot]
    ta, ka = divmod(edge_slot, 3)
    tb, kb = divmod(partner, 3)
    if ta == tb:
        raise ValidationError(f"edge at slot {edge_slot} has both sides on triangle {ta}")
    a, b = slot(ta, ka + 1), slot(ta, ka + 2)
    c, d = slot(tb, kb + 1), slot(tb, kb + 2)
    mapping = {s: s for s in t.slots if s // 3 not in (ta, tb)}
    mapping.update({b: slot(ta, 0), c: slot(ta, 1), d: slot(tb, 0), a: slot(tb, 1)})
    f, f_prime = slot(ta, 2), slot(tb, 2)
    return _remap(t, mapping, t.num_triangles, {f: f_prime, f_prime: f}, t.name)


def pachner_13(t: Triangulation, triangle: int) -> Triangulation:
    """
    Subdivide a triangle (x, y, z) around a new interior vertex into
    (x, ., .), (y, ., .), (z, ., .) with the new spokes glued cyclically.
    """
    if not 0 <= triangle < t.num_triangles:
        raise ValidationError(f"triangle {triangle} does not exist")
    n = t.num_triangles
    t1, t2, t3 = triangle, n, n + 1
    mapping = {s: s for s in t.slots if s // 3 != triangle}
    mapping.update({slot(triangle, 0): slot(t1, 0), slot(triangle, 1): slot(t2, 0), slot(triangle, 2): slot(t3, 0)})
    spokes = {
        slot(t1, 1): slot(t2, 2),
        slot(t2, 1): slot(t3, 2),
        slot(t3, 1): slot(t1, 2),
    }
    extra = dict(spokes)
    extra.update({v: k for k, v in spokes.items()})
    return _remap(t, mapping, n + 2, extra, t.name)


def flippable_slots(t: Triangulation):
    return [s for s, p in sorted(t.pairing.items()) if s // 3 != p // 3]


def random_moves(t: Triangulation, count: int, seed: int) -> Triangulation:
    """
    Apply `count` seeded random moves, mixing 2-2 flips and 1-3 subdivisions.

    Subdivisions are only drawn while the surface is less than MAX_GROWTH
    triangles larger than the input.
    """
    rng = np.random.default_rng(seed)
    base = t.num_triangles
    current = t
    flips = subdivisions = 0
    for _ in range(count):
        candidates = flippable_slots(current)
        subdivide = rng.random() < 0.5 and current.num_triangles < base + MAX_GROWTH
        if subdivide or not candidates:
            current = pachner_13(current, int(rng.integers(0, current.num_triangles)))
            subdivisions += 1
        else:
            current = pachner_22(current, candidates[int(rng.integers(0, len(candidates)))])
            flips += 1
    logger.debug(f"Applied {flips} flips and {subdivisions} subdivisions to {t.name}")
    return current
