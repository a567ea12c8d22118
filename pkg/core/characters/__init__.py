"""
Character theory of finite groups.
"""
from .character_table import (
    CharacterTable, centralizer_tables, character_table, verify_burnside_relation,
    verify_orthogonality, verify_root_of_unity_sums,
)
