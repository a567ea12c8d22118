import cmath

import numpy as np
import pytest

from core.errors import InvariantViolation, ValidationError
from core.group import group_from_alias
from core.modular import (
    DoubleLabel, burnside_orbit_oracle, central_charge, clebsch_gordan, conformal_weights, drinfeld_double,
    dual_labels, fusion_checks, fusion_genus_dim, label_names, modular_relations_check, perturb_s,
    qdim_multiset, quantum_dimensions, su2_level_k, summary, validate, verlinde_dim, verlinde_fusion,
)


@pytest.fixture(scope="module")
def double_s3():
    return drinfeld_double(group_from_alias('S3'))


def test_double_of_s3_shape(double_s3):
    assert double_s3.rank == 8
    assert qdim_multiset(double_s3) == [1, 1, 2, 2, 2, 2, 3, 3]
    assert double_s3.D == pytest.approx(6)
    assert double_s3.zeta == pytest.approx(1)
    assert double_s3.labels[0] == DoubleLabel(0, 0)


def test_double_of_s3_relations(double_s3):
    report = modular_relations_check(double_s3)
    assert report.passed, report.failing()
    assert np.allclose(double_s3.S, double_s3.S.T)
    assert np.allclose(double_s3.C @ double_s3.C, np.eye(8))


@pytest.mark.parametrize("g, expected", [(0, 1), (1, 8), (2, 116)])
def test_double_of_s3_verlinde(double_s3, s3, g, expected):
    assert verlinde_dim(double_s3, g) == expected
    assert fusion_genus_dim(verlinde_fusion(double_s3), g) == expected
    if g > 0:
        assert burnside_orbit_oracle(s3, g) == expected


def test_toric_code(z2):
    md = drinfeld_double(z2)
    assert md.rank == 4
    assert np.allclose(md.qdims, 1)
    assert sorted(np.round(md.twists.real).astype(int).tolist()) == [-1, 1, 1, 1]
    assert verlinde_dim(md, 2) == 16
    assert burnside_orbit_oracle(z2, 2) == 16
    assert label_names(z2, md) == ["0:0", "0:1", "1:0", "1:1"]


@pytest.mark.parametrize("alias", ['Z3', 'Z4', 'D4', 'Q8'])
def test_doubles_are_modular_with_integer_fusion(alias):
    G = group_from_alias(alias)
    md = drinfeld_double(G)
    N = verlinde_fusion(md)
    assert fusion_checks(md, N).passed
    assert np.array_equal(N[0], np.eye(md.rank, dtype=np.int64))
    assert sum(q * q for q in qdim_multiset(md)) == G.order ** 2
    for g in (1, 2):
        oracle = burnside_orbit_oracle(G, g)
        assert verlinde_dim(md, g) == oracle
        assert fusion_genus_dim(N, g) == oracle


def test_charge_conjugation_of_z3(z3):
    md = drinfeld_double(z3)
    duals = dual_labels(md)
    assert duals[0] == 0
    assert [duals[d] for d in duals] == list(range(9))
    assert duals != list(range(9))


def test_perturbed_s_breaks_fusion_integrality(double_s3):
    broken = perturb_s(double_s3, eps=1e-3, seed=1)
    with pytest.raises(InvariantViolation) as info:
        verlinde_fusion(broken)
    assert info.value.name == "fusion_integrality"
    with pytest.raises(InvariantViolation) as info:
        validate(broken)
    assert info.value.name in modular_relations_check(broken).failing()
    assert double_s3.name == "D(S3)"


@pytest.mark.parametrize("k", range(1, 7))
def test_su2_fusion_is_clebsch_gordan(k):
    md = su2_level_k(k)
    assert md.rank == k + 1
    assert np.array_equal(verlinde_fusion(md), clebsch_gordan(k))
    assert np.allclose(md.qdims.real, quantum_dimensions(k))
    assert md.details["twist_sign"] == 1
    assert md.zeta == pytest.approx(cmath.exp(2j * cmath.pi * central_charge(k) / 24))


@pytest.mark.parametrize("k, g, expected", [(1, 2, 4), (2, 1, 3), (2, 2, 10), (3, 2, 20)])
def test_su2_verlinde_dimensions(k, g, expected):
    md = su2_level_k(k)
    assert verlinde_dim(md, g) == expected
    assert fusion_genus_dim(clebsch_gordan(k), g) == expected


def test_su2_conventions():
    assert np.allclose(conformal_weights(2), [0, 3 / 16, 1 / 2])
    assert central_charge(2) == pytest.approx(1.5)
    forced = su2_level_k(3, sign=-1)
    assert forced.details["twist_sign"] == -1
    assert forced.zeta == pytest.approx(np.conj(su2_level_k(3).zeta))
    info = summary(forced)
    assert info["level"] == 3
    assert info["D"] == pytest.approx(forced.D)


@pytest.mark.parametrize("k, sign", [(0, None), (-2, None), (2, 2)])
def test_su2_rejections(k, sign):
    with pytest.raises(ValidationError):
        su2_level_k(k, sign)
