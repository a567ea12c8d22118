import io

import pytest

from cli import dispatch
from cli.selftest import CRITERIA, run_selftest, select_criteria
from core.errors import ValidationError


def test_filters_by_name_and_tag():
    assert [c.name for c in select_criteria(['torus_count'])] == ['torus_count']
    tagged = {c.name for c in select_criteria(['su2k,openclosed'])}
    assert tagged == {'su2k_fusion', 'cardy_condition'}
    assert len(select_criteria([])) == len(CRITERIA)
    with pytest.raises(ValidationError):
        select_criteria(['nonsense'])


@pytest.mark.parametrize("name", ['torus_count', 'cylinder_projector', 'cardy_condition',
                                  'drinfeld_double_s3', 'fusion_integrality', 'su2k_fusion',
                                  'cobordism_relations'])
def test_single_criteria_pass(name):
    result = run_selftest(0xC0FFEE, [name])
    assert result["passed"], result["failures"]
    assert [c["name"] for c in result["criteria"]] == [name]


def test_injected_fault_is_named():
    result = run_selftest(0xC0FFEE, ['fusion_integrality'], inject='perturb-s')
    assert not result["passed"]
    assert result["failures"] == ['fusion_integrality']
    assert "fusion_integrality" in result["criteria"][0]["error"]


def test_unknown_injection():
    with pytest.raises(ValidationError):
        run_selftest(0, [], inject='flip-bits')


def test_json_output_is_reproducible():
    outputs = []
    for _ in range(2):
        out, err = io.StringIO(), io.StringIO()
        assert dispatch(['selftest', '--only', 'torus_count,cardy_condition', '--format', 'json'], out, err) == 0
        outputs.append(out.getvalue())
    assert outputs[0] == outputs[1]
    assert "elapsed" not in outputs[0]


def test_failing_selftest_exits_with_1():
    out, err = io.StringIO(), io.StringIO()
    code = dispatch(['selftest', '--only', 'fusion_integrality', '--inject', 'perturb-s'], out, err)
    assert code == 1
    assert "fusion_integrality" in err.getvalue()


@pytest.mark.slow
def test_full_suite_passes():
    result = run_selftest(0xC0FFEE)
    assert result["passed"], result["failures"]
    assert len(result["criteria"]) == len(CRITERIA)
