"""
Open/closed theory over a semisimple closed algebra B = sum_i C a_i.

A brane is an integer vector k; its open algebra is the block sum of
Mat_{k_i}(C) with trace eps_A(psi) = sum_i sqrt(eps_i) Tr(psi_i).
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Sequence, Tuple

import numpy as np

from core.errors import ValidationError
from core.frobenius import FrobeniusAlgebra, build_algebra, cylinder_map
from core.reports import CheckReport
from core.settings import get_settings

logger = logging.getLogger('core')


@dataclass(eq=False)
class ClosedStringAlgebra:
    """Closed algebra with a chosen square root of each trace."""
    traces: np.ndarray
    sqrt_choices: np.ndarray

    @property
    def n(self) -> int:
        return len(self.traces)

    def pairing(self, a: np.ndarray, b: np.ndarray) -> complex:
        """(a, b)_B = eps_B(ab) in the idempotent basis."""
        return complex(np.sum(a * b * self.traces))


@dataclass(frozen=True)
class BraneConfig:
    """A collection of branes, one nonnegative integer per spacetime point each."""
    branes: Tuple[Tuple[int, ...], ...]

    def k_class(self) -> Tuple[int, ...]:
        """Class of the superposition of all branes."""
        return tuple(int(x) for x in np.sum(np.array(self.branes), axis=0))


@dataclass(frozen=True)
class K0Description:
    rank: int
    description: str


@dataclass(eq=False)
class OpenAlgebra:
    """
    Block algebra on the matrix units of the nonzero blocks.

    Basis vector order: points in order, then (p, q) row-major inside a block.
    """
    closed: ClosedStringAlgebra
    k: Tuple[int, ...]
    offsets: List[int] = field(default_factory=list)

    def __post_init__(self):
        offset = 0
        self.offsets = []
        for size in self.k:
            self.offsets.append(offset)
            offset += size * size

    @property
    def dim(self) -> int:
        return sum(size * size for size in self.k)

    def basis_index(self, i: int, p: int, q: int) -> int:
        return self.offsets[i] + p * self.k[i] + q

    def to_blocks(self, v: np.ndarray) -> List[np.ndarray]:
        return [np.asarray(v[self.offsets[i]:self.offsets[i] + size * size]).reshape(size, size)
                for i, size in enumerate(self.k)]

    def from_blocks(self, blocks: Sequence[np.ndarray]) -> np.ndarray:
        return np.concatenate([np.asarray(b, dtype=complex).reshape(-1) for b in blocks]) \
            if self.dim else np.zeros(0, dtype=complex)

    def trace(self, v: np.ndarray) -> complex:
        return complex(sum(self.closed.sqrt_choices[i] * np.trace(b)
                           for i, b in enumerate(self.to_blocks(v))))

    def multiply(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        return self.from_blocks([a @ b for a, b in zip(self.to_blocks(u), self.to_blocks(v))])

    def pairing(self, u: np.ndarray, v: np.ndarray) -> complex:
        return self.trace(self.multiply(u, v))

    @cached_property
    def frobenius(self) -> FrobeniusAlgebra:
        return open_algebra_frobenius(self)


def closed_string_algebra(traces: Sequence[complex], signs: Sequence[int] = None) -> ClosedStringAlgebra:
    """
    Args:
        traces: Nonzero eps_i, one per spacetime point
        signs: +1/-1 per point selecting the square root (principal root times sign)
    """
    traces = np.asarray(traces, dtype=complex)
    if traces.ndim != 1 or len(traces) == 0:
        raise ValidationError("closed algebra needs at least one spacetime point")
    if np.any(traces == 0):
        raise ValidationError("closed algebra traces must be nonzero")
    signs = np.ones(len(traces)) if signs is None else np.asarray(signs, dtype=float)
    if signs.shape != traces.shape or not np.all(np.isin(signs, (1, -1))):
        raise ValidationError("one sign (+1 or -1) is needed per trace")
    roots = np.sqrt(traces) * signs
    if np.max(np.abs(roots ** 2 - traces)) > 1e-12 * max(1.0, float(np.max(np.abs(traces)))):
        raise ValidationError("square roots do not reproduce the traces")
    return ClosedStringAlgebra(traces=traces, sqrt_choices=roots)


def build_open_algebra(B: ClosedStringAlgebra, k: Sequence[int]) -> OpenAlgebra:
    k = tuple(int(x) for x in k)
    if len(k) != B.n:
        raise ValidationError(f"brane vector has length {len(k)}, closed algebra has {B.n} points")
    if any(x < 0 for x in k):
        raise ValidationError(f"brane multiplicities must be nonnegative, got {list(k)}")
    return OpenAlgebra(closed=B, k=k)


def open_algebra_frobenius(A: OpenAlgebra) -> FrobeniusAlgebra:
    """The open algebra as a (noncommutative) symmetric Frobenius algebra on matrix units."""
    d = A.dim
    if d == 0:
        raise ValidationError("open algebra of the zero brane is the zero algebra")
    mu = np.zeros((d, d, d), dtype=complex)
    unit = np.zeros(d, dtype=complex)
    trace = np.zeros(d, dtype=complex)
    labels = []
    for i, size in enumerate(A.k):
        for p in range(size):
            unit[A.basis_index(i, p, p)] = 1
            trace[A.basis_index(i, p, p)] = A.closed.sqrt_choices[i]
            for q in range(size):
                labels.append(f"E{i}_{p}{q}")
                for s in range(size):
                    mu[A.basis_index(i, p, q), A.basis_index(i, q, s), A.basis_index(i, p, s)] = 1
    return build_algebra(mu, unit, trace, labels=labels, name=f"open{list(A.k)}")


def i_lower_star(A: OpenAlgebra, i: int) -> np.ndarray:
    """i_*(a_i): identity on block i, zero elsewhere."""
    if not 0 <= i < len(A.k):
        raise ValidationError(f"point index {i} out of range")
    return A.from_blocks([np.eye(size) if j == i else np.zeros((size, size))
                          for j, size in enumerate(A.k)])


def i_lower_star_vector(A: OpenAlgebra, a: np.ndarray) -> np.ndarray:
    """i_* applied to a closed element given in the idempotent basis."""
    return A.from_blocks([a[j] * np.eye(size) for j, size in enumerate(A.k)])


def i_upper_star(A: OpenAlgebra, psi: np.ndarray) -> np.ndarray:
    """i^*(psi) = sum_i Tr(psi_i) / sqrt(eps_i) a_i."""
    blocks = A.to_blocks(psi)
    return np.array([np.trace(b) / A.closed.sqrt_choices[i] for i, b in enumerate(blocks)], dtype=complex)


def _boundary_matrices(A: OpenAlgebra) -> Tuple[np.ndarray, np.ndarray]:
    """Matrices of i_* (dim A x n) and i^* (n x dim A)."""
    n = A.closed.n
    lower = np.column_stack([i_lower_star(A, i) for i in range(n)]) if A.dim else np.zeros((0, n))
    upper = np.column_stack([i_upper_star(A, e) for e in np.eye(A.dim)]) if A.dim else np.zeros((n, 0))
    return lower, upper


def cardy_check(B: ClosedStringAlgebra, k: Sequence[int], tol: float = None) -> CheckReport:
    """
    Compare pi = mu_A sigma Delta_A, computed from the open Frobenius structure,
    with i_* i^*.
    """
    tol = get_settings().tol_eq if tol is None else tol
    A = build_open_algebra(B, k)
    pi = cylinder_map(A.frobenius)
    lower, upper = _boundary_matrices(A)
    defect = float(np.max(np.abs(pi - lower @ upper)))
    return CheckReport(name="cardy_condition", defects={"cardy": defect}, tol=tol,
                       details={"k": list(A.k), "dim": A.dim})


def verify_boundary_maps(B: ClosedStringAlgebra, k: Sequence[int], trials: int = 20,
                         seed: int = None, tol: float = 1e-10) -> CheckReport:
    """
    Randomized checks that i_* is a unital homomorphism into the center and
    that i_* and i^* are adjoint.
    """
    rng = np.random.default_rng(get_settings().default_seed if seed is None else seed)
    A = build_open_algebra(B, k)
    n = B.n

    def rand(size):
        return rng.normal(size=size) + 1j * rng.normal(size=size)

    defects = {"adjointness": 0.0, "homomorphism": 0.0, "centrality": 0.0}
    unit_sum = sum(i_lower_star(A, i) for i in range(n))
    defects["unit"] = float(np.max(np.abs(unit_sum - A.frobenius.unit_vector)))
    for _ in range(trials):
        phi, b = rand(n), rand(n)
        psi = rand(A.dim)
        lhs = A.pairing(i_lower_star_vector(A, phi), psi)
        rhs = B.pairing(phi, i_upper_star(A, psi))
        defects["adjointness"] = max(defects["adjointness"], abs(lhs - rhs))
        product = i_lower_star_vector(A, phi * b)
        split = A.multiply(i_lower_star_vector(A, phi), i_lower_star_vector(A, b))
        defects["homomorphism"] = max(defects["homomorphism"], float(np.max(np.abs(product - split))))
        image = i_lower_star_vector(A, phi)
        commutator = A.multiply(image, psi) - A.multiply(psi, image)
        defects["centrality"] = max(defects["centrality"], float(np.max(np.abs(commutator))))
    return CheckReport(name="boundary_maps", defects=defects, tol=tol)


def classify_branes(B: ClosedStringAlgebra) -> K0Description:
    """K_0(B) of a semisimple algebra with n points is free of rank n."""
    if B.n < 1:
        raise ValidationError("brane classification needs at least one spacetime point")
    description = "Z" if B.n == 1 else f"Z^{B.n}"
    return K0Description(rank=B.n, description=description)


def random_brane_config(rng: np.random.Generator, max_points: int = 3,
                        max_k: int = 3) -> Tuple[ClosedStringAlgebra, Tuple[int, ...]]:
    """Random traces in [0.1, 10], random root signs and a nonzero brane vector."""
    n = int(rng.integers(1, max_points + 1))
    traces = rng.uniform(0.1, 10.0, size=n)
    signs = rng.choice([1, -1], size=n)
    k = rng.integers(0, max_k + 1, size=n)
    if not k.any():
        k[int(rng.integers(0, n))] = 1
    return closed_string_algebra(traces, signs), tuple(int(x) for x in k)
