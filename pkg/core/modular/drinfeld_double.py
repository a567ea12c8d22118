"""
Modular data of the Drinfeld double D(G).

Simple objects are pairs (class a, irrep alpha of the centralizer Z(a)); the
unit (identity class, trivial irrep) comes first.
"""
import logging
from dataclasses import dataclass
from typing import List

import numpy as np

from core.characters import character_table
from core.dijkgraaf_witten import count_homs_surface_group
from core.errors import InvariantViolation
from core.group import FiniteGroup, Subgroup, centralizer
from core.settings import get_settings
from .modular_data import ModularData, assemble, validate

logger = logging.getLogger('modular')


@dataclass(frozen=True)
class DoubleLabel:
    """Class index of G and irrep index of the representative's centralizer."""
    conjugacy_class: int
    irrep: int

    def __str__(self):
        return f"({self.conjugacy_class},{self.irrep})"


@dataclass(eq=False)
class _CentralizerData:
    subgroup: Subgroup
    # chi[alpha, x] for x in the parent group; zero off the centralizer
    chi: np.ndarray
    dims: List[int]


def _centralizer_data(G: FiniteGroup, seed: int = None) -> List[_CentralizerData]:
    data = []
    for cls in G.classes:
        sub = centralizer(G, cls.representative)
        table = character_table(sub.embedded_cayley, seed)
        chi = np.zeros((table.num_irreps, G.order), dtype=complex)
        for i, x in enumerate(sub.elements):
            chi[:, x] = table.characters[:, table.group.class_index[i]]
        data.append(_CentralizerData(subgroup=sub, chi=chi, dims=list(table.dims)))
    return data


def _s_block(G: FiniteGroup, a: int, b: int, za: _CentralizerData, zb: _CentralizerData) -> np.ndarray:
    """
    S entries between the labels over classes with representatives a and b:
    (1/|Z_a||Z_b|) sum over g with [a, g b g^-1] = 1 of
    conj(alpha(g b g^-1)) conj(beta(g^-1 a g)).
    """
    conj = G.conjugation_table
    table = G.cayley
    gbg = conj[:, b]
    commuting = table[a, gbg] == table[gbg, a]
    xs = gbg[commuting]
    ys = conj[G.inverse[np.flatnonzero(commuting)], a]
    block = za.chi[:, xs].conj() @ zb.chi[:, ys].conj().T
    return block / (za.subgroup.order * zb.subgroup.order)


def _dual_index(G: FiniteGroup, labels: List[DoubleLabel], data: List[_CentralizerData],
                label: DoubleLabel) -> int:
    a = G.classes[label.conjugacy_class].representative
    target_class = G.inverse_class(label.conjugacy_class)
    a_dual = G.classes[target_class].representative
    conj = G.conjugation_table
    x = int(np.flatnonzero(conj[:, G.inverse[a]] == a_dual)[0])
    x_inv = int(G.inverse[x])
    zdual = data[target_class]
    members = np.array(zdual.subgroup.elements)
    transported = data[label.conjugacy_class].chi[label.irrep, conj[x_inv, members]].conj()
    tol = get_settings().tol_snap
    for beta in range(len(zdual.dims)):
        if np.allclose(zdual.chi[beta, members], transported, atol=tol):
            return labels.index(DoubleLabel(target_class, beta))
    raise InvariantViolation("charge_conjugation", f"no dual label for {label} in D({G.name})")


def drinfeld_double(G: FiniteGroup, seed: int = None, check: bool = True) -> ModularData:
    """
    Build S, T and C of D(G).

    Args:
        G: The finite group
        seed: Seed for the centralizer character tables
        check: Raise InvariantViolation if a modular relation fails

    Returns:
        ModularData with integral quantum dimensions |class a| dim alpha
    """
    data = _centralizer_data(G, seed)
    labels = [DoubleLabel(c, alpha) for c in range(len(G.classes)) for alpha in range(len(data[c].dims))]
    offsets = np.cumsum([0] + [len(d.dims) for d in data])
    n = len(labels)
    S = np.zeros((n, n), dtype=complex)
    for ca, cls_a in enumerate(G.classes):
        for cb, cls_b in enumerate(G.classes):
            S[offsets[ca]:offsets[ca + 1], offsets[cb]:offsets[cb + 1]] = _s_block(
                G, cls_a.representative, cls_b.representative, data[ca], data[cb])
    twists = np.array([
        data[lab.conjugacy_class].chi[lab.irrep, G.classes[lab.conjugacy_class].representative]
        / data[lab.conjugacy_class].dims[lab.irrep]
        for lab in labels
    ])
    C = np.zeros((n, n))
    for i, lab in enumerate(labels):
        C[_dual_index(G, labels, data, lab), i] = 1.0
    md = assemble(f"D({G.name})", labels, S, twists, C, integral_qdims=True,
                  details={"group": G.name, "group_order": G.order})
    if abs(md.zeta - 1.0) > get_settings().tol_modular:
        raise InvariantViolation("zeta_unit", f"D({G.name}) has zeta = {md.zeta}")
    logger.info(f"D({G.name}): {n} labels, D = {md.D:.6g}")
    return validate(md) if check else md


def label_names(G: FiniteGroup, md: ModularData) -> List[str]:
    """Readable labels 'rep:irrep' using class representatives."""
    return [f"{G.classes[lab.conjugacy_class].representative}:{lab.irrep}" for lab in md.labels]


def burnside_orbit_oracle(G: FiniteGroup, g: int, method: str = 'convolution') -> int:
    """
    (1/|G|) sum_c |Hom(pi_1 S_g, Z(c))|, summed class by class.

    Equals the genus-g Verlinde dimension of D(G).
    """
    total = 0
    for cls in G.classes:
        sub = centralizer(G, cls.representative)
        total += cls.size * count_homs_surface_group(sub.embedded_cayley, g, method)
    if total % G.order:
        raise InvariantViolation("burnside_orbit_count", f"orbit count for {G.name} is not an integer")
    return total // G.order


def qdim_multiset(md: ModularData) -> List[int]:
    return sorted(int(round(q.real)) for q in md.qdims)

