from fractions import Fraction

import numpy as np
import pytest

from core.errors import ValidationError
from core.frobenius import (
    build_algebra, change_basis, class_function_algebra, cylinder_map, dual_numbers, genus_invariant,
    group_algebra, handle_element, is_semisimple, matrix_algebra, regular_trace, rescale_trace,
    semisimple_algebra, verify_frobenius_structure,
)
from core.group import group_from_alias

LOOP_OF_ORDER_5 = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


@pytest.mark.parametrize("g, expected", [(0, 1 / 6), (1, 3), (2, 81), (3, 2673)])
def test_class_function_algebra_of_s3(s3, g, expected):
    # |G|^(2g-2) (1 + 1 + 2^(2-2g))
    assert genus_invariant(class_function_algebra(s3), g) == pytest.approx(expected)


def test_class_function_algebra_is_commutative_and_exact(q8):
    A = class_function_algebra(q8)
    assert A.commutative
    assert is_semisimple(A)
    assert A.exact["trace"][0] == Fraction(1, 8)
    assert verify_frobenius_structure(A).passed


def test_semisimple_genus_invariants():
    A = semisimple_algebra([2.0, 3.0])
    assert genus_invariant(A, 0) == pytest.approx(5)
    assert genus_invariant(A, 1) == pytest.approx(2)
    assert genus_invariant(A, 2) == pytest.approx(1 / 2 + 1 / 3)
    assert np.allclose(handle_element(A).coordinates, [1 / 2, 1 / 3])


def test_torus_is_dimension():
    algebras = [semisimple_algebra([1, 5, -2]), matrix_algebra(2), dual_numbers(0, 1),
                group_algebra(group_from_alias('D4'))]
    for A in algebras:
        assert genus_invariant(A, 1) == pytest.approx(A.dim)


@pytest.mark.parametrize("lam", [2.0, -0.5, 1j])
def test_rescaling_law(lam):
    A = semisimple_algebra([1.0, 4.0, 0.25])
    B = rescale_trace(A, lam)
    for g in range(4):
        assert genus_invariant(B, g) == pytest.approx(lam ** (1 - g) * genus_invariant(A, g))


def test_rescale_by_zero_is_rejected():
    with pytest.raises(ValidationError):
        rescale_trace(semisimple_algebra([1.0]), 0)


def test_dual_numbers_are_not_semisimple():
    A = dual_numbers(0.0, 1.0)
    assert A.commutative
    assert not is_semisimple(A)
    assert np.allclose(handle_element(A).coordinates, [0, 2])
    assert genus_invariant(A, 2) == pytest.approx(0)
    assert verify_frobenius_structure(A).passed


def test_matrix_algebra_is_noncommutative_frobenius():
    A = matrix_algebra(3)
    assert not A.commutative
    assert "commutativity" not in verify_frobenius_structure(A).defects
    assert verify_frobenius_structure(A).passed
    # omega = n 1 for Mat_n with the matrix trace
    assert np.allclose(handle_element(A).coordinates, 3 * A.unit_vector)


def test_group_algebra_normalizations(s3):
    lattice = group_algebra(s3, 'lattice')
    principal = group_algebra(s3, 'principal')
    assert lattice.trace[0] == pytest.approx(6)
    assert principal.trace[0] == pytest.approx(1 / 6)
    assert np.allclose(regular_trace(lattice), lattice.trace)
    with pytest.raises(ValidationError):
        group_algebra(s3, 'unnormalized')


def test_cylinder_map_is_a_projector_for_the_regular_trace(s3):
    pi = cylinder_map(group_algebra(s3, 'lattice'))
    assert np.allclose(pi @ pi, pi)
    assert np.linalg.matrix_rank(pi) == 3


def test_change_basis_preserves_invariants(np_random):
    A = semisimple_algebra([1.5, -2.0, 0.5j])
    P = np.eye(3) + 0.3 * np_random.normal(size=(3, 3))
    B = change_basis(A, P)
    assert verify_frobenius_structure(B).passed
    for g in range(4):
        assert genus_invariant(B, g) == pytest.approx(genus_invariant(A, g))
    with pytest.raises(ValidationError):
        change_basis(A, np.zeros((3, 3)))
    with pytest.raises(ValidationError):
        change_basis(A, np.eye(2))


def test_build_algebra_rejections():
    mu = np.zeros((2, 2, 2))
    mu[0, 0, 0] = mu[0, 1, 1] = mu[1, 0, 1] = 1
    with pytest.raises(ValidationError, match="degenerate"):
        build_algebra(mu, [1, 0], [1, 0])
    with pytest.raises(ValidationError, match="unit"):
        build_algebra(mu, [0, 1], [0, 1])
    with pytest.raises(ValidationError, match="shape"):
        build_algebra(np.zeros((2, 2)), [1, 0], [0, 1])
    loop = np.zeros((5, 5, 5))
    for i, row in enumerate(LOOP_OF_ORDER_5):
        for j, k in enumerate(row):
            loop[i, j, k] = 1
    with pytest.raises(ValidationError, match="non-associative"):
        build_algebra(loop, np.eye(5)[0], 5 * np.eye(5)[0])


def test_negative_genus_is_rejected():
    with pytest.raises(ValidationError):
        genus_invariant(semisimple_algebra([1.0]), -1)
