"""
Simplicial 2-graphs (Delta-complexes) as glued triangles.

Triangle t owns the edge slots 3t, 3t+1, 3t+2 in its cyclic order; slot k runs
from corner k to corner k+1. Two paired slots are glued with opposite
orientations, so corner(t, k) ~ corner(t', k'+1) and corner(t, k+1) ~ corner(t', k').
Unpaired slots form the boundary circles.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from core.errors import ValidationError
from core.reports import CheckReport

logger = logging.getLogger('lattice')


def slot(t: int, k: int) -> int:
    return 3 * t + (k % 3)


def corner(t: int, k: int) -> int:
    return 3 * t + (k % 3)


@dataclass(eq=False)
class Triangulation:
    """
    A triangulated surface, possibly with boundary.

    Args:
        num_triangles: Number of triangles
        pairing: Involution on glued slots (both directions present)
        boundary: Boundary circles, each an ordered list of unpaired slots
        name: Display name
    """
    num_triangles: int
    pairing: Dict[int, int]
    boundary: List[List[int]] = field(default_factory=list)
    name: str = "triangulation"

    def __post_init__(self):
        self.pairing = {int(a): int(b) for a, b in self.pairing.items()}
        self.boundary = [[int(s) for s in circle] for circle in self.boundary]
        self._validate()

    def _validate(self) -> None:
        if self.num_triangles < 1:
            raise ValidationError("a triangulation needs at least one triangle")
        n_slots = 3 * self.num_triangles
        for a, b in self.pairing.items():
            if not (0 <= a < n_slots and 0 <= b < n_slots):
                raise ValidationError(f"paired slot out of range: ({a}, {b})")
            if a == b:
                raise ValidationError(f"slot {a} is paired with itself")
            if self.pairing.get(b) != a:
                raise ValidationError(f"pairing is not an involution at slot {a}")
        seen = set()
        for circle in self.boundary:
            if not circle:
                raise ValidationError("empty boundary circle")
            for s in circle:
                if s in self.pairing:
                    raise ValidationError(f"boundary slot {s} is also paired")
                if s in seen or not 0 <= s < n_slots:
                    raise ValidationError(f"boundary slot {s} repeated or out of range")
                seen.add(s)
        unpaired = set(range(n_slots)) - set(self.pairing)
        if unpaired != seen:
            missing = sorted(unpaired - seen)
            raise ValidationError(f"unpaired slots missing from boundary circles: {missing}")
        for i, circle in enumerate(self.boundary):
            for j, s in enumerate(circle):
                nxt = circle[(j + 1) % len(circle)]
                if self.end_vertex(s) != self.start_vertex(nxt):
                    raise ValidationError(f"boundary circle {i} is not a closed edge cycle at slot {s}")

    @property
    def slots(self) -> range:
        return range(3 * self.num_triangles)

    @cached_property
    def _vertex_of_corner(self) -> List[int]:
        parent = list(range(3 * self.num_triangles))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)

        for a, b in self.pairing.items():
            ta, ka = divmod(a, 3)
            tb, kb = divmod(b, 3)
            union(corner(ta, ka), corner(tb, kb + 1))
            union(corner(ta, ka + 1), corner(tb, kb))
        roots = [find(c) for c in range(3 * self.num_triangles)]
        relabel = {}
        for r in roots:
            relabel.setdefault(r, len(relabel))
        return [relabel[r] for r in roots]

    def start_vertex(self, s: int) -> int:
        t, k = divmod(s, 3)
        return self._vertex_of_corner[corner(t, k)]

    def end_vertex(self, s: int) -> int:
        t, k = divmod(s, 3)
        return self._vertex_of_corner[corner(t, k + 1)]

    @property
    def num_vertices(self) -> int:
        return len(set(self._vertex_of_corner))

    @property
    def num_edges(self) -> int:
        return len(self.pairing) // 2 + sum(len(c) for c in self.boundary)

    @property
    def boundary_slots(self) -> List[int]:
        return [s for circle in self.boundary for s in circle]

    def euler_characteristic(self) -> int:
        return self.num_vertices - self.num_edges + self.num_triangles

    @cached_property
    def edges(self) -> List[Tuple[int, ...]]:
        """One entry per edge: (slot, partner) for interior edges, (slot,) for boundary edges."""
        result = []
        for s in self.slots:
            partner = self.pairing.get(s)
            if partner is None:
                result.append((s,))
            elif s < partner:
                result.append((s, partner))
        return result

    def face_maps(self, t: int) -> Dict[str, Tuple[int, int]]:
        """
        Faces of triangle t = [v0, v1, v2] as (start, end) vertex pairs:
        d0 = [v1, v2], d1 = [v0, v2], d2 = [v0, v1].
        """
        v = [self._vertex_of_corner[corner(t, k)] for k in range(3)]
        return {'d0': (v[1], v[2]), 'd1': (v[0], v[2]), 'd2': (v[0], v[1])}

    def copy(self, name: Optional[str] = None) -> 'Triangulation':
        return Triangulation(self.num_triangles, dict(self.pairing),
                             [list(c) for c in self.boundary], name or self.name)


def verify_face_maps(t: Triangulation) -> CheckReport:
    """
    Count violations of d1 d1 = d1 d2, d0 d2 = d1 d0, d0 d0 = d0 d1, where on
    an edge [a, b] d0 = b and d1 = a; also check that d0, d1, d2 agree with
    the slots that carry them.
    """
    violations = {"d1d1=d1d2": 0, "d0d2=d1d0": 0, "d0d0=d0d1": 0, "slot_faces": 0}
    for tri in range(t.num_triangles):
        f = t.face_maps(tri)
        if f['d1'][0] != f['d2'][0]:
            violations["d1d1=d1d2"] += 1
        if f['d2'][1] != f['d0'][0]:
            violations["d0d2=d1d0"] += 1
        if f['d0'][1] != f['d1'][1]:
            violations["d0d0=d0d1"] += 1
        d0 = (t.start_vertex(slot(tri, 1)), t.end_vertex(slot(tri, 1)))
        d1 = (t.end_vertex(slot(tri, 2)), t.start_vertex(slot(tri, 2)))
        d2 = (t.start_vertex(slot(tri, 0)), t.end_vertex(slot(tri, 0)))
        if (d0, d1, d2) != (f['d0'], f['d1'], f['d2']):
            violations["slot_faces"] += 1
    return CheckReport(name="face_maps", defects={k: float(v) for k, v in violations.items()}, tol=0.0)


def sphere() -> Triangulation:
    """Two triangles glued along all three edges."""
    return Triangulation(2, _symmetric({0: 5, 1: 4, 2: 3}), [], name="sphere")


def standard_surface(g: int) -> Triangulation:
    """
    Closed orientable surface of genus g.

    g = 0 is the two-triangle sphere; g >= 1 is the fan triangulation of the
    4g-gon a1 b1 a1^-1 b1^-1 ... from polygon vertex P0.
    """
    if g < 0:
        raise ValidationError(f"genus must be nonnegative, got {g}")
    if g == 0:
        return sphere()
    sides = 4 * g
    n_tri = sides - 2
    pairs = {}
    # triangle i (0-based) is (P0, P_{i+1}, P_{i+2})
    for i in range(n_tri - 1):
        pairs[slot(i, 2)] = slot(i + 1, 0)

    def polygon_slot(j: int) -> int:
        if j == 0:
            return slot(0, 0)
        if j == sides - 1:
            return slot(n_tri - 1, 2)
        return slot(j - 1, 1)

    for h in range(g):
        pairs[polygon_slot(4 * h)] = polygon_slot(4 * h + 2)
        pairs[polygon_slot(4 * h + 1)] = polygon_slot(4 * h + 3)
    t = Triangulation(n_tri, _symmetric(pairs), [], name=f"genus{g}")
    logger.debug(f"Standard surface of genus {g}: V={t.num_vertices} E={t.num_edges} F={t.num_triangles}")
    return t


def single_triangle() -> Triangulation:
    return Triangulation(1, {}, [[0, 1, 2]], name="triangle")


def library_surface(name: str) -> Triangulation:
    """A bundled triangulation from the library folder."""
    from library.loader import get_library_loader
    surface = get_library_loader().get_triangulation(name)
    if surface is None:
        raise ValidationError(f"no bundled triangulation named '{name}'")
    return surface


def cylinder() -> Triangulation:
    """
    Square with a diagonal and its left and right sides identified.

    Boundary circle 0 is the bottom edge (slot 0), circle 1 the top edge (slot 4).
    """
    return library_surface("cylinder")


def disk() -> Triangulation:
    """Three triangles around an interior vertex, one boundary circle of three edges."""
    return library_surface("disk")


def _symmetric(pairs: Dict[int, int]) -> Dict[int, int]:
    full = {}
    for a, b in pairs.items():
        full[a] = b
        full[b] = a
    return full


def triangulation_from_dict(data: dict, name: str = None) -> Triangulation:
    """
    Build from {"triangles": [[e1, e2, e3], ...], "pairings": [[s, s'], ...],
    "boundary": [[slots...], ...]}.

    Without "pairings", slots whose edge labels repeat are paired.
    """
    if "triangles" not in data:
        raise ValidationError("triangulation data needs a 'triangles' list")
    triangles = data["triangles"]
    for tri in triangles:
        if len(tri) != 3:
            raise ValidationError(f"triangle entry {tri} does not have three edges")
    if "pairings" in data:
        pairs = {}
        for entry in data["pairings"]:
            if len(entry) != 2:
                raise ValidationError(f"pairing entry {entry} is not a slot pair")
            a, b = int(entry[0]), int(entry[1])
            if a in pairs or b in pairs:
                raise ValidationError(f"slot paired more than once in {entry}")
            pairs[a] = b
            pairs[b] = a
    else:
        by_label: Dict[str, List[int]] = {}
        for t, tri in enumerate(triangles):
            for k, label in enumerate(tri):
                by_label.setdefault(str(label), []).append(slot(t, k))
        pairs = {}
        for label, slots in by_label.items():
            if len(slots) > 2:
                raise ValidationError(f"edge label {label} is used by more than two slots")
            if len(slots) == 2:
                pairs[slots[0]] = slots[1]
                pairs[slots[1]] = slots[0]
    boundary = data.get("boundary", [])
    return Triangulation(len(triangles), pairs, boundary, name=name or data.get("name", "triangulation"))


def triangulation_to_dict(t: Triangulation) -> dict:
    return {
        "name": t.name,
        "triangles": [[f"s{slot(i, k)}" for k in range(3)] for i in range(t.num_triangles)],
        "pairings": [list(e) for e in t.edges if len(e) == 2],
        "boundary": [list(c) for c in t.boundary],
    }
