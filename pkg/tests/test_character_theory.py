import numpy as np
import pytest

from core.characters import (
    centralizer_tables, character_table, verify_burnside_relation, verify_orthogonality,
    verify_root_of_unity_sums,
)
from core.characters.character_table import _eigenvalues_separated, _try_diagonalize
from core.group import class_structure_constants, group_from_alias


def test_s3_table(s3):
    table = character_table(s3)
    expected = np.array([[1, 1, 1], [1, -1, 1], [2, 0, -1]])
    assert table.dims == [1, 1, 2]
    assert np.allclose(table.characters, expected)


@pytest.mark.parametrize("alias", ['trivial', 'Z2', 'Z5', 'Z2xZ2', 'S3', 'D4', 'Q8', 'D5', 'S4'])
def test_sum_of_squared_dimensions(alias):
    G = group_from_alias(alias)
    table = character_table(G)
    assert sum(d * d for d in table.dims) == G.order
    assert table.num_irreps == len(G.classes)
    assert np.allclose(table.characters[0], 1)


@pytest.mark.parametrize("alias", ['Z3', 'S3', 'D4', 'Q8', 'Z2xZ4', 'S4'])
def test_checks_pass(alias):
    table = character_table(group_from_alias(alias))
    assert verify_orthogonality(table, 1e-9).passed
    assert verify_burnside_relation(table).passed
    assert verify_root_of_unity_sums(table).passed


def test_table_does_not_depend_on_seed(d4):
    a = character_table(d4, seed=1)
    b = character_table(d4, seed=12345)
    assert a.dims == b.dims
    assert np.allclose(a.characters, b.characters)


def test_dual_irreps_of_z3(z3):
    table = character_table(z3)
    duals = [table.dual_irrep(rho) for rho in range(3)]
    assert duals[0] == 0
    assert sorted(duals) == [0, 1, 2]
    assert duals[1] == 2 and duals[2] == 1
    assert np.allclose(table.characters[1], np.conj(table.characters[2]))


def test_value_reads_by_element(s3):
    table = character_table(s3)
    # element 3 is a 3-cycle
    assert table.value(2, 3) == pytest.approx(-1)
    assert table.value(1, 1) == pytest.approx(-1)


def test_centralizer_tables_of_s3(s3):
    tables = centralizer_tables(s3)
    assert sorted(tables) == [0, 1, 3]
    assert tables[0].num_irreps == 3
    assert tables[1].num_irreps == 2
    assert tables[3].num_irreps == 3


def test_orthogonality_detects_a_broken_table(s3):
    table = character_table(s3)
    table.characters = table.characters.copy()
    table.characters[2, 2] = 0.5
    report = verify_orthogonality(table, 1e-9)
    assert not report.passed
    assert set(report.failing()) <= {"row", "column"}


@pytest.mark.parametrize("alias", ['Z3', 'Z2xZ2', 'S3', 'D4', 'Q8'])
def test_flipping_one_character_value_breaks_orthogonality(alias):
    G = group_from_alias(alias)
    table = character_table(G)
    assert table.dims[1] == 1
    table.characters = table.characters.copy()
    table.characters[1, -1] *= -1
    report = verify_orthogonality(table, 1e-9)
    assert not report.passed
    assert report.max_defect >= 2 / G.order - 1e-12


def test_degenerate_eigenvalues_are_redrawn():
    assert not _eigenvalues_separated(np.array([1.0, 1.0, 2.0]))
    assert not _eigenvalues_separated(np.array([3.0 + 1j, 0.5, 3.0 + 1j]))
    assert _eigenvalues_separated(np.array([1.0, 2.0, 3.0]))
    assert _eigenvalues_separated(np.array([7.0]))


def test_diagonalization_rejects_a_degenerate_combination(s3):
    class ZeroDraw:
        def uniform(self, low, high, size):
            return np.zeros(size)

    N = class_structure_constants(s3)
    assert _try_diagonalize(s3, N, ZeroDraw()) is None
