"""
2d cobordism words and their evaluation.
"""
from .evaluate import atom_tensors, evaluate, relation_suite
from .word import (
    ATOMS, CobordismWord, closed_surface_word, format_word, identity_word, make_word,
    parse_word, typecheck,
)
