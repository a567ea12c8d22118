"""
Modular data (S, T, C, quantum dimensions, Gauss sums) and the Verlinde formulas.

S is the unitary normalized S-matrix with label 0 the unit object. The central
charge phase zeta is the principal cube root of p+/D, so (ST)^3 = zeta^3 S^2
holds by construction whenever the data is modular.
"""
import logging
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Union

import numpy as np

from core.errors import InvariantViolation
from core.reports import CheckReport
from core.settings import get_settings

logger = logging.getLogger('modular')


@dataclass(eq=False)
class ModularData:
    """Labels, S/T/C matrices and derived scalars of a modular category."""
    name: str
    labels: List[Any]
    S: np.ndarray
    T: np.ndarray
    C: np.ndarray
    qdims: np.ndarray
    p_plus: complex
    p_minus: complex
    D: float
    zeta: complex
    integral_qdims: bool = False
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def twists(self) -> np.ndarray:
        return np.diag(self.T)


def assemble(name: str, labels: List[Any], S: np.ndarray, twists: np.ndarray, C: np.ndarray,
             integral_qdims: bool = False, details: Dict[str, Any] = None) -> ModularData:
    """Derive quantum dimensions, p+-, D and zeta from S, the twists and C."""
    S = np.asarray(S, dtype=complex)
    twists = np.asarray(twists, dtype=complex)
    qdims = S[0, :] / S[0, 0]
    if integral_qdims:
        snapped = np.round(qdims.real)
        if np.max(np.abs(qdims - snapped)) > get_settings().tol_snap:
            raise InvariantViolation("integral_qdims", f"quantum dimensions of {name} are not integers")
        qdims = snapped.astype(complex)
    p_plus = complex(np.sum(twists * qdims ** 2))
    p_minus = complex(np.sum(twists.conj() * qdims ** 2))
    D = float(np.sqrt(np.sum(np.abs(qdims) ** 2)))
    zeta = complex(np.power(p_plus / D, 1.0 / 3.0))
    return ModularData(name=name, labels=list(labels), S=S, T=np.diag(twists), C=np.asarray(C, dtype=float),
                       qdims=qdims, p_plus=p_plus, p_minus=p_minus, D=D, zeta=zeta,
                       integral_qdims=integral_qdims, details=dict(details or {}))


def _twist_root_defect(twists: np.ndarray, bound: int) -> float:
    """Largest distance of any theta from the nearest root of unity of order <= bound."""
    orders = np.arange(1, bound + 1)
    worst = 0.0
    for theta in twists:
        powers = np.exp(1j * np.angle(theta) * orders)
        worst = max(worst, float(np.min(np.abs(powers - 1))) + abs(abs(theta) - 1.0))
    return worst


def modular_relations_check(md: ModularData, tol: float = None) -> CheckReport:
    """S symmetric and unitary, S^2 = C, C^2 = 1, CT = TC, (ST)^3 = zeta^3 S^2, twists roots of unity."""
    settings = get_settings()
    tol = settings.tol_modular if tol is None else tol
    S, T, C = md.S, md.T, md.C
    eye = np.eye(md.rank)
    S2 = S @ S
    ST = S @ T
    defects = {
        "s_symmetric": float(np.max(np.abs(S - S.T))),
        "s_unitary": float(np.max(np.abs(S @ S.conj().T - eye))),
        "s_squared_is_c": float(np.max(np.abs(S2 - C))),
        "c_involution": float(np.max(np.abs(C @ C - eye))),
        "ct_commute": float(np.max(np.abs(C @ T - T @ C))),
        "st_cubed": float(np.max(np.abs(ST @ ST @ ST - md.zeta ** 3 * S2))),
        "gauss_sums": float(abs(md.p_plus * md.p_minus - md.D ** 2)) / max(1.0, md.D ** 2),
        "twist_roots_of_unity": _twist_root_defect(md.twists, settings.twist_order_bound),
        "qdims_from_s": float(np.max(np.abs(S[0, :] / S[0, 0] - md.qdims))),
        "unit_row_positive": max(float(np.max(np.abs(S[0, :].imag))), float(max(0.0, -np.min(S[0, :].real)))),
    }
    return CheckReport(name="modular_relations", defects=defects, tol=tol,
                       details={"name": md.name, "rank": md.rank})


def validate(md: ModularData) -> ModularData:
    """Raise InvariantViolation naming the first relation that fails."""
    report = modular_relations_check(md)
    failing = report.failing()
    if failing:
        name, value = next(iter(failing.items()))
        raise InvariantViolation(name, f"{md.name}: defect {value:.3e}")
    return md


def dual_labels(md: ModularData) -> List[int]:
    """i -> i*, read off the charge conjugation matrix."""
    return [int(np.argmax(np.abs(md.C[:, i]))) for i in range(md.rank)]


def verlinde_fusion(md: ModularData) -> np.ndarray:
    """
    N[i, j, k] = sum_r S_ir S_jr S_{k* r} / S_0r, snapped to nonnegative integers.

    Raises:
        InvariantViolation: 'fusion_integrality' when any coefficient is more
            than the snap tolerance away from a nonnegative integer
    """
    S = md.S
    if np.min(np.abs(S[0, :])) < get_settings().tol_eq:
        raise InvariantViolation("fusion_integrality", f"{md.name}: S has a vanishing unit row entry")
    dual = dual_labels(md)
    raw = np.einsum('ir,jr,kr->ijk', S, S, S[dual, :] / S[0, :][None, :])
    snapped = np.round(raw.real)
    defect = float(np.max(np.abs(raw - snapped)))
    if defect > get_settings().tol_snap or np.min(snapped) < 0:
        raise InvariantViolation("fusion_integrality", f"{md.name}: fusion coefficients off integers by {defect:.3e}")
    return snapped.astype(np.int64)


def fusion_checks(md: ModularData, N: np.ndarray) -> CheckReport:
    """Unit row, symmetry, duality and associativity of integer fusion rules."""
    dual = dual_labels(md)
    eye = np.eye(md.rank, dtype=np.int64)
    assoc_left = np.einsum('ijm,mkl->ijkl', N, N)
    assoc_right = np.einsum('jkm,iml->ijkl', N, N)
    dualized = N[np.ix_(dual, dual, dual)]
    defects = {
        "unit_row": float(np.max(np.abs(N[0] - eye))),
        "symmetric": float(np.max(np.abs(N - N.transpose(1, 0, 2)))),
        "duality": float(np.max(np.abs(N - dualized))),
        "associativity": float(np.max(np.abs(assoc_left - assoc_right))),
    }
    return CheckReport(name="fusion_rules", defects=defects, tol=0.0)


def verlinde_dim(md: ModularData, g: int) -> Union[int, float]:
    """D^(2g-2) sum_i qdim_i^(2-2g), snapped to an integer within tolerance."""
    qd = np.abs(md.qdims)
    value = float(md.D ** (2 * g - 2) * np.sum(qd ** (2 - 2 * g)))
    snapped = round(value)
    if abs(value - snapped) <= get_settings().tol_snap * max(1.0, abs(value)):
        return int(snapped)
    return value


def fusion_genus_dim(N: np.ndarray, g: int) -> int:
    """Tr(H^(g-1)) with the handle operator H = sum_i N_i N_{i*}, from fusion rules alone."""
    if g == 0:
        return 1
    r = N.shape[0]
    mats = [N[i].astype(object) for i in range(r)]
    # i* is the unique j with N_ij^0 = 1
    dual = [int(np.argmax(N[i, :, 0])) for i in range(r)]
    H = sum(np.dot(mats[i], mats[dual[i]]) for i in range(r))
    power = np.eye(r, dtype=np.int64).astype(object)
    for _ in range(g - 1):
        power = np.dot(power, H)
    return int(sum(power[i, i] for i in range(r)))


def perturb_s(md: ModularData, eps: float = 1e-3, seed: int = 0) -> ModularData:
    """Copy of md with a random perturbation of S (fault injection)."""
    rng = np.random.default_rng(seed)
    noise = eps * rng.uniform(-1.0, 1.0, size=md.S.shape)
    return replace(md, S=md.S + (noise + noise.T) / 2, name=f"{md.name}+perturbed")
