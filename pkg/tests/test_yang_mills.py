import math
from fractions import Fraction

import numpy as np
import pytest

from core.characters import character_table
from core.errors import GuardExceeded, ValidationError
from core.lattice import group_algebra_tensors, partition_function as lattice_partition_function, standard_surface
from core.settings import replace_settings
from core.yang_mills import (
    ZETA_EVEN, Spectrum, approximate_unit_defect, assemble_closed_surface, elementary_operators,
    finite_group_spectrum, gluing_consistency_check, nmax_for_tail, partition_function, random_split,
    semigroup_check, su2_spectrum, tail_bound, zeta_limit,
)


@pytest.fixture
def s3_spectrum(s3):
    return finite_group_spectrum(character_table(s3))


def test_finite_spectrum_is_exact_and_area_independent(s3_spectrum):
    for t in (0.0, 0.3, 5.0):
        result = partition_function(s3_spectrum, 2, t)
        assert result.exact == Fraction(9, 4)
        assert result.tail_bound == 0.0
    assert partition_function(s3_spectrum, 1, 0.3).exact == 3


def test_finite_spectrum_matches_lattice_state_sum(s3, s3_spectrum):
    d = group_algebra_tensors(s3)
    for g in range(3):
        assert partition_function(s3_spectrum, g, 0.7).exact == lattice_partition_function(standard_surface(g), d)


@pytest.mark.parametrize("g, n", [(0, 16), (1, 16), (1, 64), (2, 8), (3, 4)])
def test_tail_bound_covers_the_omitted_terms(g, n):
    t, c = 0.1, 0.25
    truncated = partition_function(su2_spectrum(n, c), g, t)
    reference = partition_function(su2_spectrum(20000, c), g, t)
    assert 0 <= reference.value - truncated.value <= truncated.tail_bound


def test_genus_zero_bound_needs_a_large_enough_truncation():
    with pytest.raises(ValidationError):
        tail_bound(0, 0.1, 4, 0.25)


def test_nmax_for_tail_is_a_power_of_two():
    n = nmax_for_tail(2, 0.1, 1e-10)
    assert n & (n - 1) == 0
    assert tail_bound(2, 0.1, n, 0.25) < 1e-10
    assert tail_bound(2, 0.1, n // 2, 0.25) >= 1e-10


def test_divergent_sums_are_rejected():
    with pytest.raises(ValidationError):
        partition_function(su2_spectrum(10), 1, 0.0)
    with pytest.raises(ValidationError):
        nmax_for_tail(0, 0.0, 1e-8)
    with pytest.raises(ValidationError):
        partition_function(su2_spectrum(10), -1, 0.1)


@pytest.mark.parametrize("g, t", [(2, 1e-10), (3, 1e-6)])
def test_small_area_limit_is_zeta(g, t):
    result = zeta_limit(g, t, tol=1e-8)
    assert result.details["zeta"] == pytest.approx(ZETA_EVEN[2 * g - 2])
    assert result.details["distance"] + result.tail_bound < 1e-4
    assert result.value < ZETA_EVEN[2 * g - 2]


def test_zeta_values():
    assert ZETA_EVEN[2] == pytest.approx(math.pi ** 2 / 6)
    assert ZETA_EVEN[4] == pytest.approx(1.0823232337111382)
    with pytest.raises(ValidationError):
        zeta_limit(1, 1e-3)


@pytest.mark.parametrize("g", [0, 1, 2, 3])
def test_gluing_layouts_agree(g, s3_spectrum):
    assert gluing_consistency_check(su2_spectrum(64), g, 0.1, seed=g).passed
    assert gluing_consistency_check(s3_spectrum, g, 0.1, seed=g).passed


def test_assembly_rejections():
    s = su2_spectrum(8)
    with pytest.raises(ValidationError):
        assemble_closed_surface(s, 2, [0.1] * 5, 'caps')
    with pytest.raises(ValidationError):
        assemble_closed_surface(s, 0, [0.1], 'ring')
    with pytest.raises(ValidationError):
        assemble_closed_surface(s, 1, [0.1], 'mobius')
    with pytest.raises(ValidationError):
        assemble_closed_surface(s, 1, [0.2, -0.1, 0.1, 0.1], 'caps')


def test_random_split_sums_to_total(np_random):
    areas = random_split(0.37, 6, np_random)
    assert len(areas) == 6
    assert math.fsum(areas) == pytest.approx(0.37, abs=1e-15)
    assert min(areas) >= 0


def test_elementary_operators_and_semigroup():
    s = su2_spectrum(12)
    ops = elementary_operators(s, 0.2)
    assert ops['cylinder'].shape == (12, 12)
    assert ops['pants'].shape == (12, 12, 12)
    assert np.allclose(ops['cap'], s.dims * s.weights(0.2))
    assert semigroup_check(s, 0.1, 0.25).passed


def test_cylinder_tends_to_the_identity():
    s = su2_spectrum(32)
    defects = [approximate_unit_defect(s, t) for t in (1.0, 0.1, 0.01, 0.0)]
    assert defects == sorted(defects, reverse=True)
    assert defects[-1] == 0.0


def test_spectrum_validation():
    with pytest.raises(ValidationError):
        Spectrum(labels=['a'], dims=[1], casimirs=[0.5], kind='finite-group')
    with pytest.raises(ValidationError):
        Spectrum(labels=['a'], dims=[0], casimirs=[0.0], kind='su2')
    with pytest.raises(ValidationError):
        Spectrum(labels=['a', 'b'], dims=[1], casimirs=[0.0], kind='su2')
    with pytest.raises(ValidationError):
        Spectrum(labels=['a'], dims=[1], casimirs=[0.0], kind='u1')


def test_truncation_caps():
    replace_settings(nmax_cap=100)
    with pytest.raises(GuardExceeded):
        su2_spectrum(101)
    with pytest.raises(GuardExceeded):
        nmax_for_tail(1, 1e-6, 1e-12)
