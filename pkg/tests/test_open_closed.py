import numpy as np
import pytest

from core.errors import ValidationError
from core.frobenius import verify_frobenius_structure
from core.open_closed import (
    BraneConfig, build_open_algebra, cardy_check, classify_branes, closed_string_algebra, i_lower_star,
    i_upper_star, open_algebra_frobenius, random_brane_config, verify_boundary_maps,
)


def test_square_root_choices():
    B = closed_string_algebra([4.0, 9.0], [1, -1])
    assert np.allclose(B.sqrt_choices, [2, -3])
    assert np.allclose(B.sqrt_choices ** 2, B.traces)


def test_open_algebra_dimension_and_trace():
    B = closed_string_algebra([4.0, 9.0])
    A = build_open_algebra(B, [1, 2])
    assert A.dim == 5
    unit = open_algebra_frobenius(A).unit_vector
    # Tr of the identity on each block times the chosen root
    assert A.trace(unit) == pytest.approx(1 * 2 + 2 * 3)
    assert A.trace(i_lower_star(A, 1)) == pytest.approx(6)


def test_open_algebra_is_symmetric_frobenius():
    A = build_open_algebra(closed_string_algebra([0.5, 2.0, 7.0], [1, -1, 1]), [2, 0, 1])
    F = open_algebra_frobenius(A)
    assert not F.commutative
    assert verify_frobenius_structure(F).passed
    assert np.allclose(F.metric, F.metric.T)


@pytest.mark.parametrize("traces, signs, k", [
    ([1.0], None, [1]),
    ([4.0, 9.0], [-1, 1], [1, 2]),
    ([0.3, 2.5, 6.0], [1, 1, -1], [3, 0, 2]),
    ([2j, -1.0], [1, -1], [2, 1]),
])
def test_cardy_condition(traces, signs, k):
    B = closed_string_algebra(traces, signs)
    report = cardy_check(B, k)
    assert report.passed, report.failing()
    assert verify_boundary_maps(B, k, trials=5, seed=3).passed


def test_i_upper_star_inverts_on_units():
    B = closed_string_algebra([4.0, 9.0])
    A = build_open_algebra(B, [2, 1])
    phi = i_upper_star(A, i_lower_star(A, 0))
    assert np.allclose(phi, [2 / 2, 0])


def test_random_configurations_satisfy_cardy():
    rng = np.random.default_rng(0xC0FFEE)
    for _ in range(10):
        B, k = random_brane_config(rng)
        assert any(k)
        assert cardy_check(B, k).passed


def test_random_configurations_are_seeded():
    first = random_brane_config(np.random.default_rng(5))
    second = random_brane_config(np.random.default_rng(5))
    assert first[1] == second[1]
    assert np.allclose(first[0].traces, second[0].traces)


def test_brane_classification():
    assert classify_branes(closed_string_algebra([1.0])).description == "Z"
    k0 = classify_branes(closed_string_algebra([1.0, 2.0, 3.0]))
    assert k0.rank == 3
    assert k0.description == "Z^3"
    assert BraneConfig(((1, 0), (0, 2), (1, 1))).k_class() == (2, 3)


@pytest.mark.parametrize("traces, signs", [([], None), ([1.0, 0.0], None), ([1.0], [2]), ([1.0, 2.0], [1])])
def test_rejected_closed_algebras(traces, signs):
    with pytest.raises(ValidationError):
        closed_string_algebra(traces, signs)


def test_rejected_brane_vectors():
    B = closed_string_algebra([1.0, 2.0])
    with pytest.raises(ValidationError):
        build_open_algebra(B, [1])
    with pytest.raises(ValidationError):
        build_open_algebra(B, [1, -1])
    with pytest.raises(ValidationError):
        open_algebra_frobenius(build_open_algebra(B, [0, 0]))
