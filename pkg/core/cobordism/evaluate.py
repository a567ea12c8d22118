"""
Evaluation of cobordism words under a commutative Frobenius algebra.

The running map is kept as a tensor with one axis per circle at the current
cut plus one axis for the flattened input; every atom of the next slice is
contracted into its own axes.
"""
import logging
from typing import Dict, List, Tuple

import numpy as np

from core.errors import GuardExceeded, ValidationError
from core.frobenius import FrobeniusAlgebra, comultiplication, genus_invariant
from core.reports import CheckReport
from core.settings import get_settings
from .word import ATOMS, CobordismWord, closed_surface_word, make_word, typecheck

logger = logging.getLogger('core')

MAX_SUITE_GENUS = 4


def atom_tensors(A: FrobeniusAlgebra) -> Dict[str, np.ndarray]:
    """Each atom as a tensor with output axes first, then input axes."""
    d = A.dim
    eye = np.eye(d, dtype=complex)
    return {
        'id': eye,
        'pants': A.mu.transpose(2, 0, 1),
        'copants': comultiplication(A).transpose(1, 2, 0),
        'cap': A.unit_vector.astype(complex),
        'cup': A.trace.astype(complex),
        'twist': np.einsum('ad,bc->abcd', eye, eye),
    }


def _check_size(w: CobordismWord, d: int) -> None:
    settings = get_settings()
    widths = w.widths
    widest = max(widths)
    if widest > settings.max_cobordism_width:
        raise GuardExceeded(f"word reaches {widest} circles, cap is {settings.max_cobordism_width}")
    entries = max(d ** (width + widths[0]) for width in widths)
    if entries > settings.max_tensor_entries:
        raise GuardExceeded(f"evaluation needs {entries} entries, cap is {settings.max_tensor_entries}")


def evaluate(w: CobordismWord, A: FrobeniusAlgebra) -> np.ndarray:
    """
    Linear map of the word, shape (dim^out, dim^in).

    Raises:
        ValidationError: if the word does not typecheck or A is not commutative
        GuardExceeded: if an intermediate tensor would exceed the entry cap
    """
    n_in, n_out = typecheck(w)
    if not A.commutative:
        raise ValidationError(f"cobordism evaluation needs a commutative algebra, {A.name} is not")
    d = A.dim
    _check_size(w, d)
    tensors = atom_tensors(A)

    state = np.eye(d ** n_in, dtype=complex).reshape((d,) * n_in + (d ** n_in,))
    for atoms in w.slices:
        position = 0
        for atom in atoms:
            k_in, k_out = ATOMS[atom]
            q = tensors[atom]
            state = np.tensordot(q, state, axes=(list(range(k_out, k_out + k_in)),
                                                 list(range(position, position + k_in))))
            state = np.moveaxis(state, list(range(k_out)), list(range(position, position + k_out)))
            position += k_out
    return state.reshape(d ** n_out, d ** n_in)


def _standard_relations() -> List[Tuple[str, List[List[List[str]]]]]:
    """Each relation lists two or more words that must evaluate to the same map."""
    return [
        ("associativity", [[['pants', 'id'], ['pants']], [['id', 'pants'], ['pants']]]),
        ("left_unit", [[['cap', 'id'], ['pants']], [['id']]]),
        ("right_unit", [[['id', 'cap'], ['pants']], [['id']]]),
        ("coassociativity", [[['copants'], ['copants', 'id']], [['copants'], ['id', 'copants']]]),
        ("left_counit", [[['copants'], ['cup', 'id']], [['id']]]),
        ("right_counit", [[['copants'], ['id', 'cup']], [['id']]]),
        ("frobenius", [[['pants'], ['copants']],
                       [['id', 'copants'], ['pants', 'id']],
                       [['copants', 'id'], ['id', 'pants']]]),
        ("commutativity", [[['twist'], ['pants']], [['pants']]]),
        ("cocommutativity", [[['copants'], ['twist']], [['copants']]]),
        ("twist_involution", [[['twist'], ['twist']], [['id', 'id']]]),
        ("braid", [[['twist', 'id'], ['id', 'twist'], ['twist', 'id']],
                   [['id', 'twist'], ['twist', 'id'], ['id', 'twist']]]),
        ("twist_naturality", [[['cap', 'id'], ['twist']], [['id', 'cap']]]),
    ]


def relation_suite(A: FrobeniusAlgebra, tol: float = None, max_genus: int = MAX_SUITE_GENUS) -> CheckReport:
    """
    Evaluate both sides of every generating relation and report the defects.

    Also compares the closed genus-g words against eps(omega^g) for g up to
    `max_genus`.
    """
    tol = get_settings().tol_eq if tol is None else tol
    defects = {}
    for name, words in _standard_relations():
        maps = [evaluate(make_word(slices), A) for slices in words]
        defects[name] = max(float(np.max(np.abs(m - maps[0]))) for m in maps[1:])
    for g in range(max_genus + 1):
        value = evaluate(closed_surface_word(g), A)[0, 0]
        expected = genus_invariant(A, g)
        defects[f"closed_genus_{g}"] = float(abs(value - expected) / max(1.0, abs(expected)))
    report = CheckReport(name="cobordism_relations", defects=defects, tol=tol)
    logger.debug(f"Relation suite on {A.name}: max defect {report.max_defect:.3e}")
    return report
