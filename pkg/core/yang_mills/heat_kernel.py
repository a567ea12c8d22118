"""
Area-dependent two-dimensional Yang-Mills in the character basis.

Every elementary piece is diagonal in the orthonormal character basis e_R:
the cylinder of area t is exp(-t C(R)), the pants carry 1/dim R and the cap
carries dim R, each times the heat-kernel weight of its own area. The
coupling is absorbed into the area.
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import numpy as np

from core.characters import CharacterTable
from core.errors import GuardExceeded, ValidationError
from core.reports import CheckReport
from core.settings import get_settings

logger = logging.getLogger('core')

KINDS = ('finite-group', 'su2')
LAYOUTS = ('caps', 'ring')

# zeta(2m) in closed form
ZETA_EVEN = {
    2: math.pi ** 2 / 6,
    4: math.pi ** 4 / 90,
    6: math.pi ** 6 / 945,
    8: math.pi ** 8 / 9450,
}


@dataclass(eq=False)
class Spectrum:
    """
    Irreps with their dimensions and Casimir eigenvalues.

    Args:
        labels: One label per irrep
        dims: Positive integer dimensions
        casimirs: Nonnegative Casimir eigenvalues
        kind: 'finite-group' or 'su2'
        casimir_scale: Normalization constant c of the su2 Casimir c (n^2 - 1)
    """
    labels: List[str]
    dims: np.ndarray
    casimirs: np.ndarray
    kind: str
    casimir_scale: float = 0.0

    def __post_init__(self):
        self.dims = np.asarray(self.dims, dtype=np.int64)
        self.casimirs = np.asarray(self.casimirs, dtype=float)
        if self.kind not in KINDS:
            raise ValidationError(f"unknown spectrum kind '{self.kind}'")
        if len(self.labels) != len(self.dims) or len(self.dims) != len(self.casimirs):
            raise ValidationError("labels, dims and casimirs must have the same length")
        if len(self.dims) == 0 or np.any(self.dims < 1):
            raise ValidationError("dimensions must be positive")
        if np.any(self.casimirs < 0):
            raise ValidationError("Casimir eigenvalues must be nonnegative")
        if self.kind == 'finite-group' and np.any(self.casimirs != 0):
            raise ValidationError("finite-group spectra carry zero Casimirs")

    @property
    def size(self) -> int:
        return len(self.dims)

    @property
    def truncated(self) -> bool:
        return self.kind == 'su2'

    def weights(self, t: float) -> np.ndarray:
        """exp(-t C(R)) for every entry."""
        return np.exp(-t * self.casimirs)


@dataclass
class YMResult:
    value: float
    tail_bound: float
    n_terms: int
    genus: int
    area: float
    exact: Optional[Fraction] = None
    details: Dict[str, object] = field(default_factory=dict)


def su2_spectrum(n_max: int, c: float = None) -> Spectrum:
    """Irreps n = 1..n_max of SU(2) with dim n and Casimir c (n^2 - 1)."""
    if n_max < 1:
        raise ValidationError(f"n_max must be at least 1, got {n_max}")
    settings = get_settings()
    if n_max > settings.nmax_cap:
        raise GuardExceeded(f"n_max {n_max} exceeds the cap {settings.nmax_cap}")
    c = settings.casimir_scale if c is None else c
    n = np.arange(1, n_max + 1)
    return Spectrum(labels=[str(k) for k in n], dims=n, casimirs=c * (n.astype(float) ** 2 - 1),
                    kind='su2', casimir_scale=c)


def finite_group_spectrum(table: CharacterTable) -> Spectrum:
    """One entry per irrep, all Casimirs zero."""
    return Spectrum(labels=[f"rho{i}" for i in range(table.num_irreps)], dims=list(table.dims),
                    casimirs=np.zeros(table.num_irreps), kind='finite-group')


def tail_bound(g: int, t: float, n: int, c: float) -> float:
    """
    Bound on sum_{m > n} exp(-t c (m^2 - 1)) m^(2-2g) by comparison with the
    integral from n.

    Raises:
        ValidationError: The series diverges (t = 0 with g <= 1) or n is
            below the point where the summand starts decreasing
    """
    a = t * c
    term = math.exp(-a * (n * n - 1)) * float(n) ** (2 - 2 * g)
    if g >= 2:
        return term * n / (2 * g - 3)
    if a <= 0:
        raise ValidationError(f"the genus {g} sum diverges at zero area")
    if g == 1:
        return term / (2 * a * n)
    if n < 1.0 / math.sqrt(a):
        raise ValidationError(f"truncation {n} is too small to bound the genus 0 tail (need >= {1 / math.sqrt(a):.3g})")
    return term * (1 / (2 * a * n) + 1 / (4 * a * a * n ** 3))


def nmax_for_tail(g: int, t: float, tol: float, c: float = None) -> int:
    """Smallest power of two whose certified tail bound is below tol."""
    settings = get_settings()
    c = settings.casimir_scale if c is None else c
    if g <= 1 and t * c <= 0:
        raise ValidationError(f"the genus {g} sum diverges at zero area")
    n = 1
    if g == 0:
        while n < 1.0 / math.sqrt(t * c):
            n *= 2
    while tail_bound(g, t, n, c) >= tol:
        n *= 2
        if n > settings.nmax_cap:
            raise GuardExceeded(f"tail bound {tol:g} needs more than {settings.nmax_cap} terms at t={t:g}, g={g}")
    return n


def partition_function(s: Spectrum, g: int, t: float) -> YMResult:
    """
    Z(S_g) = sum_R exp(-t C(R)) dim(R)^(2-2g) with an explicit remainder bound.

    Finite-group spectra are summed exactly; the su2 spectrum is truncated at
    its n_max and the bound covers the omitted terms.
    """
    if g < 0:
        raise ValidationError(f"genus must be nonnegative, got {g}")
    if t < 0:
        raise ValidationError(f"area must be nonnegative, got {t}")
    if s.kind == 'finite-group':
        exact = sum(Fraction(int(d)) ** (2 - 2 * g) for d in s.dims)
        return YMResult(value=float(exact), tail_bound=0.0, n_terms=s.size, genus=g, area=t, exact=exact)
    if t == 0 and g <= 1:
        raise ValidationError(f"the genus {g} sum diverges at zero area")
    terms = s.weights(t) * s.dims.astype(float) ** (2 - 2 * g)
    value = math.fsum(terms)
    bound = tail_bound(g, t, s.size, s.casimir_scale)
    logger.debug(f"YM genus {g}, t={t:g}: {value:.12g} +- {bound:.3g} from {s.size} terms")
    return YMResult(value=value, tail_bound=bound, n_terms=s.size, genus=g, area=t)


def elementary_operators(s: Spectrum, t: float) -> Dict[str, np.ndarray]:
    """Cylinder (diagonal matrix), pants (three-index tensor) and cap (covector) at area t."""
    n = s.size
    if n ** 3 > get_settings().max_tensor_entries:
        raise GuardExceeded(f"pants tensor of a {n}-term spectrum exceeds the entry cap")
    w = s.weights(t)
    dims = s.dims.astype(float)
    pants = np.zeros((n, n, n))
    idx = np.arange(n)
    pants[idx, idx, idx] = w / dims
    return {'cylinder': np.diag(w), 'pants': pants, 'cap': dims * w}


def _pieces_needed(g: int, layout: str) -> int:
    if layout == 'caps':
        return 2 + 2 * g
    if g < 1:
        raise ValidationError("the ring layout needs genus at least 1")
    return 2 * (g - 1) + 1


def assemble_closed_surface(s: Spectrum, g: int, areas: Sequence[float], layout: str = 'caps') -> float:
    """
    Glue a closed genus g surface from elementary pieces, one area per piece.

    'caps' is cap, then g handles (copants followed by pants), then cap.
    'ring' closes g - 1 handles and one cylinder into a trace.
    """
    if layout not in LAYOUTS:
        raise ValidationError(f"unknown layout '{layout}' (known: {', '.join(LAYOUTS)})")
    needed = _pieces_needed(g, layout)
    if len(areas) != needed:
        raise ValidationError(f"layout '{layout}' at genus {g} needs {needed} areas, got {len(areas)}")
    if any(a < 0 for a in areas):
        raise ValidationError("areas must be nonnegative")
    dims = s.dims.astype(float)
    pieces = iter(areas)
    if layout == 'caps':
        v = dims * s.weights(next(pieces))
        for _ in range(g):
            v = v * s.weights(next(pieces)) / dims
            v = v * s.weights(next(pieces)) / dims
        v = v * dims * s.weights(next(pieces))
    else:
        v = s.weights(next(pieces))
        for _ in range(g - 1):
            v = v * s.weights(next(pieces)) / dims
            v = v * s.weights(next(pieces)) / dims
    return math.fsum(v)


def random_split(total: float, pieces: int, rng: np.random.Generator) -> List[float]:
    """Random nonnegative areas summing to total."""
    raw = rng.uniform(0.1, 1.0, size=pieces)
    areas = list(total * raw / raw.sum())
    areas[-1] = total - math.fsum(areas[:-1])
    return [max(a, 0.0) for a in areas]


def gluing_consistency_check(s: Spectrum, g: int, t: float, seed: int = 0, trials: int = 3,
                             tol: float = 1e-12) -> CheckReport:
    """Both gluing layouts at random area splits against the closed formula on the same truncation."""
    rng = np.random.default_rng(seed)
    reference = partition_function(s, g, t).value
    defects = {}
    layouts = LAYOUTS if g >= 1 else ('caps',)
    for layout in layouts:
        worst = 0.0
        for _ in range(trials):
            areas = random_split(t, _pieces_needed(g, layout), rng)
            glued = assemble_closed_surface(s, g, areas, layout)
            worst = max(worst, abs(glued - reference) / max(abs(reference), 1e-300))
        defects[layout] = worst
    return CheckReport(name="gluing_consistency", defects=defects, tol=tol,
                       details={"genus": g, "area": t, "terms": s.size})


def approximate_unit_defect(s: Spectrum, t: float) -> float:
    """max_R |exp(-t C(R)) - 1| on the truncation; tends to 0 as t -> 0."""
    return float(np.max(np.abs(s.weights(t) - 1.0)))


def semigroup_check(s: Spectrum, t1: float, t2: float, tol: float = 1e-12) -> CheckReport:
    """Cylinder(t1) cylinder(t2) = cylinder(t1 + t2) and the cap-pants contraction is the cylinder."""
    ops1 = elementary_operators(s, t1)
    ops2 = elementary_operators(s, t2)
    ops12 = elementary_operators(s, t1 + t2)
    # a cap on an input leg inserts the unit sum_R dim R e_R
    capped = np.tensordot(ops1['pants'], s.dims.astype(float) * s.weights(t2), axes=([1], [0]))
    return CheckReport(
        name="cylinder_semigroup",
        defects={
            "composition": float(np.max(np.abs(ops1['cylinder'] @ ops2['cylinder'] - ops12['cylinder']))),
            "cap_pants": float(np.max(np.abs(capped - ops12['cylinder']))),
        },
        tol=tol,
    )


def zeta_limit(g: int, t: float, tol: float = 1e-8, c: float = None) -> YMResult:
    """
    su2 partition function at small area with a certified truncation; the
    t -> 0 limit is zeta(2g - 2).
    """
    if g < 2:
        raise ValidationError("the zeta limit needs genus at least 2")
    n_max = nmax_for_tail(g, t, tol, c)
    result = partition_function(su2_spectrum(n_max, c), g, t)
    target = ZETA_EVEN.get(2 * g - 2)
    if target is not None:
        result.details["zeta"] = target
        result.details["distance"] = abs(result.value - target)
    logger.info(f"zeta limit g={g} t={t:g}: {result.value:.10f} with {n_max} terms")
    return result
