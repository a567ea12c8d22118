"""
The 2d finite-gauge-group model: counts of surface-group homomorphisms and
n-point functions, all in exact integers and rationals.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np

from core.characters import CharacterTable, character_table
from core.errors import GuardExceeded, InvariantViolation, ValidationError
from core.group import FiniteGroup, class_structure_constants
from core.settings import get_settings

logger = logging.getLogger('core')

METHODS = ('brute', 'convolution', 'character')

# Largest partial-product vector materialized at once during brute force
BRUTE_CHUNK = 1 << 20


@dataclass(frozen=True)
class SurfaceSignature:
    """Genus plus one conjugacy-class index per boundary circle."""
    genus: int
    boundary_labels: Tuple[int, ...] = ()


def commutator_table(G: FiniteGroup) -> np.ndarray:
    """K[a, b] = a b a^-1 b^-1."""
    t, inv = G.cayley, G.inverse
    return t[t[t, inv[:, None]], inv[None, :]]


def commutator_distribution(G: FiniteGroup) -> np.ndarray:
    """c[x] = #{(a, b) : [a, b] = x} for every element x (a class function)."""
    return np.bincount(commutator_table(G).ravel(), minlength=G.order)


def _count_from(table: np.ndarray, kflat: np.ndarray, start: np.ndarray, handles_left: int) -> int:
    """Count extensions of the partial products in `start` by the remaining handles that reach e."""
    if handles_left == 0:
        return int(np.count_nonzero(start == 0))
    block = kflat.size ** handles_left
    if start.size * block <= BRUTE_CHUNK:
        arr = start
        for _ in range(handles_left):
            arr = table[arr[:, None], kflat[None, :]].ravel()
        return int(np.count_nonzero(arr == 0))
    expanded = table[start[:, None], kflat[None, :]].ravel()
    step = max(1, BRUTE_CHUNK // (kflat.size ** (handles_left - 1)))
    return sum(_count_from(table, kflat, expanded[i:i + step], handles_left - 1)
               for i in range(0, expanded.size, step))


def _count_brute(G: FiniteGroup, g: int) -> int:
    settings = get_settings()
    work = G.order ** (2 * g)
    if work > settings.brute_force_cap:
        raise GuardExceeded(f"brute force needs |G|^(2g) = {work} tuples (cap {settings.brute_force_cap}); "
                            f"use the convolution method")
    K = commutator_table(G)
    kflat = K.ravel()

    def task(a1: int) -> int:
        return _count_from(G.cayley, kflat, K[a1, :].copy(), g - 1)

    with ThreadPoolExecutor(max_workers=settings.threads) as pool:
        return sum(pool.map(task, range(G.order)))


def _class_multiply(N: np.ndarray, f: np.ndarray, h: np.ndarray) -> np.ndarray:
    """Product of two class-sum combinations (object arrays for exactness)."""
    return np.tensordot(np.tensordot(f, N, axes=(0, 0)), h, axes=(0, 0))


def _count_convolution(G: FiniteGroup, g: int) -> int:
    N = class_structure_constants(G).astype(object)
    dist = commutator_distribution(G)
    reps = [c.representative for c in G.classes]
    f = np.array([int(dist[x]) for x in reps], dtype=object)
    acc = f
    for _ in range(g - 1):
        acc = _class_multiply(N, acc, f)
    return int(acc[0])


def count_homs_surface_group(G: FiniteGroup, g: int, method: str = 'convolution') -> int:
    """
    |{(a_1, b_1, ..., a_g, b_g) : prod [a_i, b_i] = e}|.

    Args:
        G: The gauge group
        g: Genus; 0 gives the single trivial homomorphism
        method: 'brute' enumerates all tuples, 'convolution' multiplies the
            commutator class function g times in the class algebra,
            'character' evaluates |G| times the character formula

    Returns:
        The exact count
    """
    if g < 0:
        raise ValidationError(f"genus must be nonnegative, got {g}")
    if method not in METHODS:
        raise ValidationError(f"unknown counting method '{method}' (known: {', '.join(METHODS)})")
    if g == 0:
        return 1
    if method == 'brute':
        count = _count_brute(G, g)
    elif method == 'convolution':
        count = _count_convolution(G, g)
    else:
        count = _count_character(G, g)
    logger.debug(f"|Hom(pi_1 S_{g}, {G.name})| = {count} ({method})")
    return count


def dw_invariant(G: FiniteGroup, g: int, method: str = 'convolution') -> Fraction:
    """Z(S_g) = |Hom(pi_1 S_g, G)| / |G|."""
    return Fraction(count_homs_surface_group(G, g, method), G.order)


def mednykh_exact(G: FiniteGroup, g: int, table: Optional[CharacterTable] = None) -> Fraction:
    table = table or character_table(G)
    n = Fraction(G.order)
    return n ** (2 * g - 2) * sum(Fraction(d) ** (2 - 2 * g) for d in table.dims)


def mednykh_formula(G: FiniteGroup, g: int, table: Optional[CharacterTable] = None) -> float:
    """|G|^(2g-2) sum_rho dim(rho)^(2-2g)."""
    if g < 0:
        raise ValidationError(f"genus must be nonnegative, got {g}")
    return float(mednykh_exact(G, g, table))


def _count_character(G: FiniteGroup, g: int) -> int:
    value = mednykh_exact(G, g) * G.order
    if value.denominator != 1:
        raise InvariantViolation("character_count_integrality", f"{G.name}, genus {g}: {value} is not an integer")
    return int(value)


def _validate_signature(G: FiniteGroup, sig: SurfaceSignature) -> None:
    if sig.genus < 0:
        raise ValidationError(f"genus must be nonnegative, got {sig.genus}")
    for label in sig.boundary_labels:
        if not 0 <= label < len(G.classes):
            raise ValidationError(f"boundary label {label} is not a class index of {G.name}")


def npoint_count(G: FiniteGroup, sig: SurfaceSignature) -> Fraction:
    """(1/|G|) #{g_i in a_i, (a_j, b_j) : prod g_i prod [a_j, b_j] = e}, by dynamic programming over partial products."""
    _validate_signature(G, sig)
    settings = get_settings()
    work = G.order * (sum(G.classes[a].size for a in sig.boundary_labels) + sig.genus * G.order)
    if work > settings.brute_force_cap:
        raise GuardExceeded(f"direct n-point count needs {work} steps (cap {settings.brute_force_cap})")
    t = G.cayley
    dist = np.zeros(G.order, dtype=object)
    dist[0] = 1
    for label in sig.boundary_labels:
        new = np.zeros(G.order, dtype=object)
        for y in G.classes[label].members:
            new[t[:, y]] += dist
        dist = new
    comm = commutator_distribution(G)
    for _ in range(sig.genus):
        new = np.zeros(G.order, dtype=object)
        for k in np.flatnonzero(comm):
            new[t[:, k]] += dist * int(comm[k])
        dist = new
    return Fraction(int(dist[0]), G.order)


def exact_handle_element(G: FiniteGroup, N: np.ndarray = None) -> np.ndarray:
    """omega = sum_a (|G| / |a|) e_a e_{a^-1} in the class basis, as Fractions."""
    N = class_structure_constants(G).astype(object) if N is None else N
    r = len(G.classes)
    omega = np.array([Fraction(0)] * r, dtype=object)
    for a, cls in enumerate(G.classes):
        ea = np.array([Fraction(0)] * r, dtype=object)
        eb = np.array([Fraction(0)] * r, dtype=object)
        ea[a] = Fraction(1)
        eb[G.inverse_class(a)] = Fraction(1)
        omega = omega + Fraction(G.order, cls.size) * _class_multiply(N, ea, eb)
    return omega


def npoint_algebraic(G: FiniteGroup, sig: SurfaceSignature) -> Fraction:
    """eps(omega^g e_{a_1} ... e_{a_k}) on the class-function algebra, exactly."""
    _validate_signature(G, sig)
    N = class_structure_constants(G).astype(object)
    r = len(G.classes)
    acc = np.array([Fraction(0)] * r, dtype=object)
    acc[0] = Fraction(1)
    for label in sig.boundary_labels:
        e = np.array([Fraction(0)] * r, dtype=object)
        e[label] = Fraction(1)
        acc = _class_multiply(N, acc, e)
    if sig.genus:
        omega = exact_handle_element(G, N)
        for _ in range(sig.genus):
            acc = _class_multiply(N, acc, omega)
    return Fraction(acc[0]) / G.order


def npoint_function(G: FiniteGroup, sig: SurfaceSignature, method: str = 'both') -> Fraction:
    """
    Correlator of class insertions on a genus-g surface.

    Args:
        G: The gauge group
        sig: Genus and boundary labels
        method: 'count', 'algebra', or 'both' (compute both and require agreement)
    """
    if method == 'count':
        return npoint_count(G, sig)
    if method == 'algebra':
        return npoint_algebraic(G, sig)
    if method != 'both':
        raise ValidationError(f"unknown n-point method '{method}'")
    direct = npoint_count(G, sig)
    algebraic = npoint_algebraic(G, sig)
    if direct != algebraic:
        raise InvariantViolation("npoint_agreement", f"direct count {direct} != algebraic value {algebraic}")
    return direct


def labels_from_representatives(G: FiniteGroup, elements: Sequence[int]) -> Tuple[int, ...]:
    """Boundary labels given by any element of each class."""
    for x in elements:
        if not 0 <= x < G.order:
            raise ValidationError(f"element {x} out of range for {G.name}")
    return tuple(G.class_of(x) for x in elements)
