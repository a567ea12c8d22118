"""
SU(2) at level k: labels 0..k (twice the spin).
"""
import logging
from typing import Dict, List

import numpy as np

from core.errors import InvariantViolation, ValidationError
from .modular_data import ModularData, assemble, modular_relations_check

logger = logging.getLogger('modular')

# Twist conventions tried in order: theta = exp(sign * 2 pi i h)
TWIST_SIGNS = (1, -1)


def conformal_weights(k: int) -> np.ndarray:
    """h_j = j(j+2) / (4(k+2))."""
    j = np.arange(k + 1)
    return j * (j + 2) / (4.0 * (k + 2))


def central_charge(k: int) -> float:
    return 3.0 * k / (k + 2)


def su2_s_matrix(k: int) -> np.ndarray:
    """S_ij = sqrt(2/(k+2)) sin(pi (i+1)(j+1) / (k+2))."""
    idx = np.arange(1, k + 2)
    return np.sqrt(2.0 / (k + 2)) * np.sin(np.pi * np.outer(idx, idx) / (k + 2))


def su2_level_k(k: int, sign: int = None) -> ModularData:
    """
    Modular data of SU(2)_k.

    Args:
        k: Level, at least 1
        sign: Twist convention; by default each of TWIST_SIGNS is tried and
            the first one satisfying the modular relations is kept

    Returns:
        ModularData with the chosen sign recorded in details["twist_sign"]

    Raises:
        ValidationError: k < 1 or a sign other than +-1
        InvariantViolation: No sign satisfies the relations
    """
    if k < 1:
        raise ValidationError(f"level must be at least 1, got {k}")
    signs = TWIST_SIGNS if sign is None else (sign,)
    if any(s not in TWIST_SIGNS for s in signs):
        raise ValidationError(f"twist sign must be +1 or -1, got {sign}")
    S = su2_s_matrix(k)
    h = conformal_weights(k)
    C = np.eye(k + 1)
    last = None
    for s in signs:
        twists = np.exp(s * 2j * np.pi * h)
        md = assemble(f"SU(2)_{k}", list(range(k + 1)), S, twists, C,
                      details={"level": k, "twist_sign": s, "central_charge": central_charge(k)})
        report = modular_relations_check(md)
        if report.passed:
            logger.debug(f"SU(2)_{k}: twist sign {s:+d}, zeta = {md.zeta:.6f}")
            return md
        last = report
    raise InvariantViolation(next(iter(last.failing())), f"SU(2)_{k} fails the modular relations")


def clebsch_gordan(k: int) -> np.ndarray:
    """
    Truncated Clebsch-Gordan rule: N[i, j, m] = 1 iff |i-j| <= m <= min(i+j, 2k-i-j)
    and i+j+m is even.
    """
    N = np.zeros((k + 1, k + 1, k + 1), dtype=np.int64)
    for i in range(k + 1):
        for j in range(k + 1):
            for m in range(abs(i - j), min(i + j, 2 * k - i - j) + 1, 2):
                N[i, j, m] = 1
    return N


def quantum_dimensions(k: int) -> List[float]:
    """sin(pi (j+1)/(k+2)) / sin(pi/(k+2))."""
    q = np.pi / (k + 2)
    return [float(np.sin((j + 1) * q) / np.sin(q)) for j in range(k + 1)]


def summary(md: ModularData) -> Dict[str, object]:
    return {
        "level": md.details.get("level"),
        "twist_sign": md.details.get("twist_sign"),
        "central_charge": md.details.get("central_charge"),
        "D": md.D,
        "zeta": md.zeta,
    }
