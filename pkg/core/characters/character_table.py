"""
Character tables by simultaneous diagonalization of class-sum matrices.

For every irrep rho the central characters w_rho(a) = |a| chi_rho(a) / dim(rho)
form a common right eigenvector of the matrices N[a][b, c] = N_ab^c with
eigenvalue w_rho(a). A random real combination of those matrices has simple
spectrum, so one eigendecomposition separates every irrep at once.
"""
import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from core.errors import GuardExceeded, InvariantViolation
from core.group import ConjugacyClass, FiniteGroup, centralizer, class_structure_constants
from core.reports import CheckReport
from core.settings import get_settings

logger = logging.getLogger('core')

# Largest number of root-of-unity multisets enumerated per table entry
ROOT_SUM_ENUMERATION_CAP = 200000


@dataclass(eq=False)
class CharacterTable:
    """
    Irreducible characters of a finite group.

    Rows are irreps (trivial first), columns are conjugacy classes in the
    group's canonical class order.
    """
    group: FiniteGroup
    classes: List[ConjugacyClass]
    characters: np.ndarray
    dims: List[int]
    casimirs: Optional[List[float]] = None
    class_constants: np.ndarray = field(default=None, repr=False)

    @property
    def num_irreps(self) -> int:
        return len(self.dims)

    @property
    def class_sizes(self) -> np.ndarray:
        return np.array([c.size for c in self.classes], dtype=np.int64)

    def value(self, rho: int, x: int) -> complex:
        """chi_rho evaluated on element x."""
        return complex(self.characters[rho, self.group.class_index[x]])

    def dual_irrep(self, rho: int) -> int:
        """Index of the irrep whose character is the complex conjugate of rho's."""
        conj = np.conj(self.characters[rho])
        for sigma in range(self.num_irreps):
            if np.allclose(self.characters[sigma], conj, atol=get_settings().tol_snap):
                return sigma
        raise InvariantViolation("dual_irrep", f"no conjugate row for irrep {rho}")


def _row_key(dim: int, row: np.ndarray):
    return (dim, tuple((round(-float(z.real), 6) + 0.0, round(-float(z.imag), 6) + 0.0) for z in row))


def _eigenvalues_separated(eigvals: np.ndarray) -> bool:
    """True when every pair of eigenvalues differs by more than 1e-6 relative."""
    r = len(eigvals)
    if r < 2:
        return True
    gaps = np.abs(eigvals[:, None] - eigvals[None, :])
    np.fill_diagonal(gaps, np.inf)
    scale = max(1.0, float(np.max(np.abs(eigvals))))
    smallest = float(np.min(gaps))
    if smallest < 1e-6 * scale:
        logger.debug(f"Eigenvalue gap {smallest:.3e} too small, redrawing")
        return False
    return True


def _try_diagonalize(G: FiniteGroup, N: np.ndarray, rng: np.random.Generator):
    """One attempt; returns (dims, characters) or None when the draw did not separate."""
    settings = get_settings()
    r = N.shape[0]
    sizes = np.array([c.size for c in G.classes], dtype=float)
    coeffs = rng.uniform(-1.0, 1.0, size=r)
    combo = np.tensordot(coeffs, N.astype(float), axes=(0, 0))
    eigvals, eigvecs = np.linalg.eig(combo)
    if not _eigenvalues_separated(eigvals):
        return None
    dims, rows = [], []
    for col in range(r):
        v = eigvecs[:, col]
        if abs(v[0]) < 1e-9:
            return None
        w = v / v[0]
        u = w / sizes
        norm = float(np.sum(sizes * np.abs(u) ** 2))
        dim_f = np.sqrt(G.order / norm)
        dim = int(round(dim_f))
        if dim < 1 or abs(dim_f - dim) > settings.tol_snap:
            logger.debug(f"Dimension {dim_f} not within snap tolerance")
            return None
        dims.append(dim)
        rows.append(dim * u)
    return dims, np.array(rows, dtype=complex)


def _clean(chi: np.ndarray) -> np.ndarray:
    """Zero out float noise in real and imaginary parts."""
    tol = get_settings().tol_eq
    re = np.where(np.abs(chi.real) < tol, 0.0, chi.real)
    im = np.where(np.abs(chi.imag) < tol, 0.0, chi.imag)
    snapped_re = np.round(re)
    re = np.where(np.abs(re - snapped_re) < tol, snapped_re, re)
    return re + 1j * im


def character_table(G: FiniteGroup, seed: int = None) -> CharacterTable:
    """
    Compute the full character table of G.

    Args:
        G: The group
        seed: PRNG seed for the random combination of class matrices

    Returns:
        A verified CharacterTable; rows ordered by (dim, character values)

    Raises:
        InvariantViolation: if no draw within the retry budget separates the
            eigenspaces, or the result fails its own checks
    """
    settings = get_settings()
    if G.order > settings.max_group_order:
        raise GuardExceeded(f"group order {G.order} exceeds cap {settings.max_group_order}")
    seed = settings.default_seed if seed is None else seed
    rng = np.random.default_rng(seed)
    N = class_structure_constants(G)

    result = None
    for attempt in range(settings.retry_budget):
        result = _try_diagonalize(G, N, rng)
        if result is not None:
            break
        logger.warning(f"Character table attempt {attempt + 1} for {G.name} failed to separate eigenspaces")
    if result is None:
        raise InvariantViolation("eigenspace_separation",
                                 f"could not separate eigenspaces of {G.name} within {settings.retry_budget} draws")

    dims, chi = result
    chi = _clean(chi)
    order = sorted(range(len(dims)), key=lambda i: _row_key(dims[i], chi[i]))
    table = CharacterTable(
        group=G,
        classes=list(G.classes),
        characters=chi[order],
        dims=[dims[i] for i in order],
        class_constants=N,
    )

    if sum(d * d for d in table.dims) != G.order:
        raise InvariantViolation("peter_weyl", f"sum of squared dims {sum(d * d for d in table.dims)} != {G.order}")
    report = verify_orthogonality(table, settings.tol_eq)
    if not report.passed:
        raise InvariantViolation("orthogonality", f"defect {report.max_defect:.3e}")
    burnside = verify_burnside_relation(table, 1e-8)
    if not burnside.passed:
        raise InvariantViolation("burnside_relation", f"defect {burnside.max_defect:.3e}")
    logger.debug(f"Character table of {G.name}: dims {table.dims}")
    return table


def verify_orthogonality(t: CharacterTable, tol: float = None) -> CheckReport:
    """Row and column orthogonality defects of a character table."""
    tol = get_settings().tol_eq if tol is None else tol
    n = t.group.order
    sizes = t.class_sizes.astype(float)
    chi = t.characters
    r = chi.shape[0]
    rows = (chi * sizes[None, :]) @ chi.conj().T / n
    scaled = chi * np.sqrt(sizes / n)[None, :]
    cols = scaled.conj().T @ scaled
    return CheckReport(
        name="orthogonality",
        defects={
            "row": float(np.max(np.abs(rows - np.eye(r)))),
            "column": float(np.max(np.abs(cols - np.eye(chi.shape[1])))),
        },
        tol=tol,
    )


def verify_burnside_relation(t: CharacterTable, tol: float = 1e-8) -> CheckReport:
    """w(a) w(b) = sum_c N_ab^c w(c) for every irrep."""
    N = t.class_constants if t.class_constants is not None else class_structure_constants(t.group)
    w = t.characters * t.class_sizes[None, :] / np.array(t.dims, dtype=float)[:, None]
    lhs = w[:, :, None] * w[:, None, :]
    rhs = np.einsum('abc,rc->rab', N.astype(float), w)
    return CheckReport(name="burnside_relation",
                       defects={"central_characters": float(np.max(np.abs(lhs - rhs)))}, tol=tol)


def verify_root_of_unity_sums(t: CharacterTable, tol: float = 1e-8) -> CheckReport:
    """
    Each chi_rho(a) must be a sum of dim(rho) m-th roots of unity, with m the
    order of the class's elements. Checked by enumerating the multisets.
    """
    worst = 0.0
    skipped = 0
    for a, cls in enumerate(t.classes):
        m = int(t.group.element_orders[cls.representative])
        roots = np.exp(2j * np.pi * np.arange(m) / m)
        for rho, d in enumerate(t.dims):
            count = _multiset_count(m, d)
            if count > ROOT_SUM_ENUMERATION_CAP:
                skipped += 1
                continue
            sums = np.array([roots[list(c)].sum() for c in itertools.combinations_with_replacement(range(m), d)])
            worst = max(worst, float(np.min(np.abs(sums - t.characters[rho, a]))))
    return CheckReport(name="root_of_unity_sums", defects={"distance": worst}, tol=tol,
                       details={"skipped_entries": skipped})


def _multiset_count(m: int, d: int) -> int:
    return math.comb(m + d - 1, d)


def centralizer_tables(G: FiniteGroup, seed: int = None) -> Dict[int, CharacterTable]:
    """Character table of the centralizer of each class representative, keyed by representative."""
    tables = {}
    for cls in G.classes:
        sub = centralizer(G, cls.representative)
        tables[cls.representative] = character_table(sub.embedded_cayley, seed)
    return tables
