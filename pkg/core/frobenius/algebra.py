"""
Finite-dimensional Frobenius algebras given by structure constants and a trace.

Conventions: mu[i, j, k] is the coefficient of e_k in e_i e_j, the metric is
g[i, j] = eps(e_i e_j), and the dual basis is e^j = sum_k ginv[k, j] e_k.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Optional, Sequence

import numpy as np

from core.errors import ValidationError
from core.reports import CheckReport
from core.settings import get_settings

logger = logging.getLogger('core')


@dataclass(frozen=True)
class HandleElement:
    """omega = sum_i e_i e^i."""
    coordinates: np.ndarray
    invertible: bool


@dataclass(eq=False)
class FrobeniusAlgebra:
    """
    An algebra with a nondegenerate trace.

    `exact` optionally carries rational data (integer structure constants and
    Fraction traces) for constructors that have them.
    """
    mu: np.ndarray
    unit_vector: np.ndarray
    trace: np.ndarray
    basis_labels: List[str]
    commutative: bool
    name: str = "algebra"
    exact: Optional[dict] = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return int(self.mu.shape[0])

    @cached_property
    def metric(self) -> np.ndarray:
        return self.mu @ self.trace

    @cached_property
    def inverse_metric(self) -> np.ndarray:
        return np.linalg.inv(self.metric)

    @cached_property
    def dual_basis(self) -> np.ndarray:
        """Column j holds the coordinates of e^j."""
        return self.inverse_metric

    def multiply(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return np.einsum('i,j,ijk->k', a, b, self.mu)

    def left_multiplication(self, a: np.ndarray) -> np.ndarray:
        """Matrix of x -> a x."""
        return np.einsum('i,ijk->kj', a, self.mu)

    def epsilon(self, a: np.ndarray) -> complex:
        return complex(np.dot(self.trace, a))


def _associativity_defect(mu: np.ndarray) -> float:
    left = np.einsum('ijp,pkl->ijkl', mu, mu)
    right = np.einsum('jkp,ipl->ijkl', mu, mu)
    return float(np.max(np.abs(left - right))) if mu.size else 0.0


def _unit_defect(mu: np.ndarray, unit: np.ndarray) -> float:
    eye = np.eye(mu.shape[0])
    left = np.einsum('i,ijk->jk', unit, mu)
    right = np.einsum('j,ijk->ik', unit, mu)
    return float(max(np.max(np.abs(left - eye)), np.max(np.abs(right - eye))))


def build_algebra(mu, unit, trace, labels: Sequence[str] = None, name: str = "algebra",
                  check: bool = True, exact: dict = None) -> FrobeniusAlgebra:
    """
    Build and validate a Frobenius algebra.

    Args:
        mu: Structure constants, shape (d, d, d)
        unit: Coordinates of the unit
        trace: eps(e_i) for each basis vector
        labels: Optional basis labels
        name: Display name
        check: Verify associativity, unit law and nondegeneracy (disable only
            to build deliberately broken algebras)

    Returns:
        The FrobeniusAlgebra
    """
    mu = np.asarray(mu, dtype=complex)
    unit = np.asarray(unit, dtype=complex)
    trace = np.asarray(trace, dtype=complex)
    if mu.ndim != 3 or len(set(mu.shape)) != 1 or mu.shape[0] == 0:
        raise ValidationError(f"structure constants must have shape (d, d, d), got {mu.shape}")
    d = mu.shape[0]
    if unit.shape != (d,) or trace.shape != (d,):
        raise ValidationError(f"unit and trace must have length {d}")
    labels = list(labels) if labels is not None else [f"e{i}" for i in range(d)]
    if len(labels) != d:
        raise ValidationError(f"expected {d} basis labels, got {len(labels)}")

    tol = get_settings().tol_eq
    commutative = bool(np.max(np.abs(mu - mu.transpose(1, 0, 2))) <= tol)
    if check:
        defect = _associativity_defect(mu)
        if defect > tol:
            raise ValidationError(f"non-associative structure constants (defect {defect:.3e})")
        defect = _unit_defect(mu, unit)
        if defect > tol:
            raise ValidationError(f"unit law violated (defect {defect:.3e})")
        singular = np.linalg.svd(mu @ trace, compute_uv=False)
        if singular[0] == 0 or singular[-1] < tol * singular[0]:
            raise ValidationError("degenerate metric: the trace pairing is singular")
    algebra = FrobeniusAlgebra(mu=mu, unit_vector=unit, trace=trace, basis_labels=labels,
                               commutative=commutative, name=name, exact=exact)
    logger.debug(f"Built Frobenius algebra {name} of dimension {d} (commutative={commutative})")
    return algebra


def copairing(A: FrobeniusAlgebra) -> np.ndarray:
    """Coordinates C[i, k] of sum_i e_i (x) e^i."""
    return A.inverse_metric.T


def comultiplication(A: FrobeniusAlgebra) -> np.ndarray:
    """
    Delta[i, p, l]: coefficient of e_p (x) e_l in Delta(e_i) = sum_k e_i e_k (x) e^k.

    This is the three-point function eps(e_i e_j e_k) with both free indices
    raised by the inverse metric.
    """
    return np.einsum('ikp,lk->ipl', A.mu, A.inverse_metric)


def handle_element(A: FrobeniusAlgebra) -> HandleElement:
    omega = np.einsum('ik,ikl->l', copairing(A), A.mu)
    singular = np.linalg.svd(A.left_multiplication(omega), compute_uv=False)
    invertible = bool(singular[0] > 0 and singular[-1] >= get_settings().tol_eq * singular[0])
    return HandleElement(coordinates=omega, invertible=invertible)


def genus_invariant(A: FrobeniusAlgebra, g: int) -> complex:
    """eps(omega^g), by g applications of L_omega to the unit."""
    if g < 0:
        raise ValidationError(f"genus must be nonnegative, got {g}")
    L = A.left_multiplication(handle_element(A).coordinates)
    v = A.unit_vector.copy()
    for _ in range(g):
        v = L @ v
    return A.epsilon(v)


def is_semisimple(A: FrobeniusAlgebra) -> bool:
    return handle_element(A).invertible


def cylinder_map(A: FrobeniusAlgebra) -> np.ndarray:
    """Matrix of pi = mu sigma Delta, i.e. a -> sum_k e^k a e_k (columns are images)."""
    delta = comultiplication(A)
    return np.einsum('ipl,lps->si', delta, A.mu)


def regular_trace(A: FrobeniusAlgebra) -> np.ndarray:
    """eps(e_i) = Tr(L_{e_i})."""
    return np.einsum('ijj->i', A.mu)


def rescale_trace(A: FrobeniusAlgebra, lam: complex) -> FrobeniusAlgebra:
    if lam == 0:
        raise ValidationError("cannot rescale a trace by zero")
    return build_algebra(A.mu, A.unit_vector, lam * A.trace, labels=A.basis_labels,
                         name=f"{A.name}*{lam}")


def verify_frobenius_structure(A: FrobeniusAlgebra, tol: float = None) -> CheckReport:
    """
    Snake identities, counit laws and the Frobenius condition
    (id (x) mu)(Delta (x) id) = Delta mu = (mu (x) id)(id (x) Delta).
    """
    tol = get_settings().tol_eq if tol is None else tol
    d = A.dim
    eye = np.eye(d)
    g, ginv, mu = A.metric, A.inverse_metric, A.mu
    delta = comultiplication(A)

    delta_mu = np.einsum('ijs,spl->ijpl', mu, delta)
    left = np.einsum('ipq,qjl->ijpl', delta, mu)
    right = np.einsum('jql,iqp->ijpl', delta, mu)
    defects = {
        "associativity": _associativity_defect(mu),
        "unit": _unit_defect(mu, A.unit_vector),
        "snake_raise_lower": float(np.max(np.abs(g @ ginv - eye))),
        "snake_zigzag": float(np.max(np.abs(ginv @ g.T - eye))),
        "counit_left": float(np.max(np.abs(np.einsum('p,ipl->il', A.trace, delta) - eye))),
        "counit_right": float(np.max(np.abs(np.einsum('l,ipl->ip', A.trace, delta) - eye))),
        "frobenius_left": float(np.max(np.abs(left - delta_mu))),
        "frobenius_right": float(np.max(np.abs(right - delta_mu))),
    }
    if A.commutative:
        defects["commutativity"] = float(np.max(np.abs(mu - mu.transpose(1, 0, 2))))
    return CheckReport(name="frobenius_structure", defects=defects, tol=tol)


def change_basis(A: FrobeniusAlgebra, P: np.ndarray) -> FrobeniusAlgebra:
    """
    Same algebra in the basis f_i = sum_a P[a, i] e_a.

    Raises:
        ValidationError: P is not square of size dim A or is singular
    """
    P = np.asarray(P, dtype=complex)
    if P.shape != (A.dim, A.dim):
        raise ValidationError(f"basis change must be {A.dim}x{A.dim}, got {P.shape}")
    if abs(np.linalg.det(P)) < get_settings().tol_eq:
        raise ValidationError("basis change matrix is singular")
    Q = np.linalg.inv(P)
    mu = np.einsum('ai,bj,abc,kc->ijk', P, P, A.mu, Q)
    return build_algebra(mu, Q @ A.unit_vector, P.T @ A.trace, name=f"{A.name}'")
