from fractions import Fraction

import numpy as np
import pytest

from core.errors import ValidationError
from core.group import class_structure_constants, group_from_alias
from core.lattice import (
    Triangulation, cylinder, cylinder_bridge_check, cylinder_projector, disk, exact_inverse, exact_rank,
    fraction_array, group_algebra_tensors, integerize, lattice_bridge_check, library_surface,
    pachner_13, pachner_22, pachner_invariance_check, partition_function, projector_report, random_moves,
    single_triangle, sphere, standard_surface, surface_from_name, tensors_from_structure_constants,
    triangulation_from_dict, verify_face_maps,
)
from library.loader import get_library_loader


@pytest.mark.parametrize("g", [0, 1, 2, 3])
def test_standard_surface_combinatorics(g):
    t = standard_surface(g)
    assert t.euler_characteristic() == 2 - 2 * g
    assert t.boundary == []
    assert verify_face_maps(t).passed
    if g >= 1:
        assert t.num_vertices == 1
        assert t.num_triangles == 4 * g - 2


def test_sphere_and_bounded_surfaces():
    assert sphere().euler_characteristic() == 2
    assert cylinder().euler_characteristic() == 0
    assert len(cylinder().boundary) == 2
    assert disk().euler_characteristic() == 1
    assert disk().boundary_slots == [0, 3, 6]
    assert single_triangle().num_edges == 3


@pytest.mark.parametrize("alias, g, expected", [
    ('Z2', 0, Fraction(2)),
    ('Z2', 2, Fraction(2)),
    ('S3', 0, Fraction(6)),
    ('S3', 1, Fraction(3)),
    ('S3', 2, Fraction(9, 4)),
    ('Q8', 2, Fraction(4) + Fraction(1, 4)),
])
def test_closed_state_sum_is_sum_over_irreps(alias, g, expected):
    G = group_from_alias(alias)
    value = partition_function(standard_surface(g), group_algebra_tensors(G))
    assert isinstance(value, Fraction)
    assert value == expected


def test_state_sum_of_the_class_algebra(s3):
    # regular trace on a commutative semisimple algebra: every idempotent has trace 1
    d = tensors_from_structure_constants(class_structure_constants(s3), name="Z(C[S3])")
    for g in range(3):
        assert partition_function(standard_surface(g), d) == 3


def test_pachner_moves_preserve_the_state_sum(s3):
    d = group_algebra_tensors(s3)
    t = standard_surface(1)
    flipped = pachner_22(t, 2)
    subdivided = pachner_13(t, 0)
    assert subdivided.num_triangles == t.num_triangles + 2
    for moved in (flipped, subdivided):
        assert moved.euler_characteristic() == 0
        assert verify_face_maps(moved).passed
        assert partition_function(moved, d) == Fraction(3)


def test_random_moves_are_seeded():
    a = random_moves(standard_surface(2), 20, seed=7)
    b = random_moves(standard_surface(2), 20, seed=7)
    assert a.num_triangles == b.num_triangles
    assert a.pairing == b.pairing
    assert a.euler_characteristic() == -2


@pytest.mark.parametrize("alias", ['Z2', 'Z3', 'S3'])
@pytest.mark.parametrize("g", [0, 1, 2])
def test_pachner_invariance_and_bridge(alias, g):
    G = group_from_alias(alias)
    assert pachner_invariance_check(G, g, moves=10, seed=g).passed
    assert lattice_bridge_check(G, g).passed


def test_cylinder_is_the_center_projector(s3):
    pi = cylinder_projector(s3)
    report = projector_report(s3, pi)
    assert report["idempotent"]
    assert report["rank"] == 3
    assert report["fixes_class_sums"]
    assert cylinder_bridge_check(s3).passed


def test_boundary_colorings(z2):
    d = group_algebra_tensors(z2)
    tensor = partition_function(disk(), d)
    assert tensor.shape == (2, 2, 2)
    assert partition_function(disk(), d, boundary_coloring=[1, 1, 0]) == tensor[1, 1, 0]
    with pytest.raises(ValidationError):
        partition_function(disk(), d, boundary_coloring=[0, 0])
    with pytest.raises(ValidationError):
        partition_function(disk(), d, boundary_coloring=[0, 0, 5])


def test_surface_specs():
    assert surface_from_name('genus:2').euler_characteristic() == -2
    assert surface_from_name('Torus').euler_characteristic() == 0
    with pytest.raises(ValidationError):
        surface_from_name('klein')
    with pytest.raises(ValidationError):
        surface_from_name('genus:two')


def test_pachner_check_needs_a_closed_surface(z2):
    with pytest.raises(ValidationError):
        pachner_invariance_check(z2, 0, surface=cylinder())


def test_flip_rejects_boundary_slots():
    with pytest.raises(ValidationError):
        pachner_22(single_triangle(), 0)
    with pytest.raises(ValidationError):
        pachner_13(sphere(), 5)


def test_triangulation_from_edge_labels(s3):
    torus = triangulation_from_dict({"triangles": [["a", "b", "c"], ["a", "b", "c"]]}, name="square")
    assert torus.num_vertices == 1
    assert torus.euler_characteristic() == 0
    assert partition_function(torus, group_algebra_tensors(s3)) == 3


@pytest.mark.parametrize("data", [
    {},
    {"triangles": [["a", "b"]]},
    {"triangles": [["a", "a", "a"]]},
    {"triangles": [["a", "b", "c"]]},
    {"triangles": [["a", "b", "c"]], "pairings": [[0, 1, 2]]},
])
def test_rejected_triangulations(data):
    with pytest.raises(ValidationError):
        triangulation_from_dict(data)


def test_pairing_must_be_an_involution():
    with pytest.raises(ValidationError):
        Triangulation(2, {0: 3, 3: 1, 1: 4, 4: 0, 2: 5, 5: 2})


def test_library_loader():
    names = get_library_loader().get_all_names()
    assert 'cylinder' in names and 'disk' in names
    assert library_surface('cylinder') is not library_surface('cylinder')
    with pytest.raises(ValidationError):
        library_surface('mobius')


def test_exact_linear_algebra():
    m = fraction_array([[2, 1], [1, 1]])
    assert np.array_equal(exact_inverse(m), fraction_array([[1, -1], [-1, 2]]))
    assert exact_rank(fraction_array([[1, 2], [2, 4]])) == 1
    scale, ints = integerize(fraction_array([Fraction(1, 2), Fraction(1, 3)]))
    assert scale == Fraction(1, 6)
    assert list(ints) == [3, 2]
    with pytest.raises(ValidationError):
        exact_inverse(fraction_array([[1, 2], [2, 4]]))
