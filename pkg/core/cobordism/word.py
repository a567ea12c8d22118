"""
2d cobordisms as words: a list of time slices, each slice a row of generator atoms.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from core.errors import ValidationError

logger = logging.getLogger('core')

# kind -> (inputs, outputs)
ATOMS: Dict[str, Tuple[int, int]] = {
    'id': (1, 1),
    'pants': (2, 1),
    'copants': (1, 2),
    'cap': (0, 1),
    'cup': (1, 0),
    'twist': (2, 2),
}

ALIASES = {
    'identity': 'id',
    'mu': 'pants',
    'delta': 'copants',
    'eta': 'cap',
    'unit': 'cap',
    'epsilon': 'cup',
    'counit': 'cup',
    'sigma': 'twist',
    'swap': 'twist',
}


@dataclass(frozen=True)
class CobordismWord:
    """Slices are read bottom to top: slice 0 acts first."""
    slices: Tuple[Tuple[str, ...], ...]

    @property
    def in_circles(self) -> int:
        return typecheck(self)[0]

    @property
    def out_circles(self) -> int:
        return typecheck(self)[1]

    @property
    def widths(self) -> List[int]:
        """Number of circles at every cut, from the input to the output."""
        widths = [slice_arity(self.slices[0])[0]]
        for atoms in self.slices:
            widths.append(slice_arity(atoms)[1])
        return widths

    def then(self, other: 'CobordismWord') -> 'CobordismWord':
        """Composite that runs self first, then other."""
        return CobordismWord(self.slices + other.slices)

    def __str__(self) -> str:
        return format_word(self)


def _normalize_atom(atom: str) -> str:
    kind = ALIASES.get(atom.lower(), atom.lower())
    if kind not in ATOMS:
        raise ValidationError(f"unknown generator '{atom}'")
    return kind


def slice_arity(atoms: Sequence[str]) -> Tuple[int, int]:
    return (sum(ATOMS[a][0] for a in atoms), sum(ATOMS[a][1] for a in atoms))


def make_word(slices: Iterable[Iterable[str]]) -> CobordismWord:
    """Build a word from slices of atom names (aliases accepted) and typecheck it."""
    word = CobordismWord(tuple(tuple(_normalize_atom(a) for a in atoms) for atoms in slices))
    typecheck(word)
    return word


def typecheck(w: CobordismWord) -> Tuple[int, int]:
    """
    Check that each slice consumes exactly what the previous one produced.

    Returns:
        (in_circles, out_circles)
    """
    if not w.slices:
        raise ValidationError("empty cobordism word")
    for atoms in w.slices:
        for atom in atoms:
            if atom not in ATOMS:
                raise ValidationError(f"unknown generator '{atom}'")
    ins, outs = slice_arity(w.slices[0])
    for t in range(1, len(w.slices)):
        needed, produced = slice_arity(w.slices[t])
        if needed != outs:
            raise ValidationError(
                f"arity mismatch at slice {t}: previous slice outputs {outs} circle(s), "
                f"slice {t} takes {needed}")
        outs = produced
    return ins, outs


def closed_surface_word(g: int) -> CobordismWord:
    """cap, then g handles (copants; pants), then cup."""
    if g < 0:
        raise ValidationError(f"genus must be nonnegative, got {g}")
    slices = [('cap',)]
    for _ in range(g):
        slices.append(('copants',))
        slices.append(('pants',))
    slices.append(('cup',))
    return CobordismWord(tuple(slices))


def identity_word(width: int) -> CobordismWord:
    return CobordismWord((('id',) * width,))


def parse_word(text: str) -> CobordismWord:
    """One slice per line, atoms separated by spaces; '#' starts a comment."""
    slices = []
    for line in text.splitlines():
        line = line.split('#', 1)[0].strip()
        if line:
            slices.append(line.split())
    return make_word(slices)


def format_word(w: CobordismWord) -> str:
    return "\n".join(" ".join(atoms) for atoms in w.slices)
