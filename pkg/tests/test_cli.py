import io
import json

import pytest

from cli import dispatch
from main import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = dispatch(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv, '--format', 'json')
    assert code == 0, err
    return json.loads(out)


def test_torus_count_of_z2():
    result = run_json('dw', '--group', 'Z2', '--genus', '1')
    assert result["schema"] == "tqft/1"
    assert result["command"] == "dw"
    assert result["count"] == 4
    assert result["value"] == "4/2"
    assert result["reduced"]["exact"] == "2"


def test_genus_two_of_s3_both_methods():
    for method in ('brute', 'convolution'):
        result = run_json('dw', '--preset', 'S3', '--genus', '2', '--method', method, '--compare')
        assert result["count"] == 486
        assert result["reduced"]["exact"] == "81"
        assert result["character_formula"]["exact"] == "81"


def test_npoint_function():
    result = run_json('dw', '--group', 'S3', '--genus', '0', '--points', '1,5')
    assert result["boundary_labels"] == [1, 1]
    assert result["value"]["exact"] == "1/2"


def test_character_method_and_boundary_labels():
    result = run_json('dw', '--group', 'S3', '--genus', '2', '--method', 'character')
    assert result["method"] == "character"
    assert result["count"] == 486
    assert run_json('dw', '--group', 'S3', '--genus', '0', '--boundary', '1,1')["value"]["exact"] == "1/2"
    assert run_json('dw', '--group', 'S3', '--genus', '0', '--boundary', '2,2,2')["value"]["exact"] == "1/3"
    code, _, _ = run('dw', '--group', 'S3', '--genus', '0', '--boundary', '3')
    assert code == 2


def test_group_queries():
    assert run_json('group', '--group', 'S3', 'classes')["sizes"] == [1, 3, 2]
    summary = run_json('group', '--group', 'Q8')
    assert summary["order"] == 8 and summary["num_classes"] == 5 and not summary["abelian"]
    assert run_json('group', '--group', 'S3', 'centralizers')["centralizer_orders"] == [6, 2, 3]


def test_character_table_with_checks():
    result = run_json('chartable', '--group', 'S3', '--checks')
    assert result["dims"] == [1, 1, 2]
    assert result["characters"][2] == [2.0, 0.0, -1.0]
    assert all(check["passed"] for check in result["checks"])


def test_frobenius_genus_invariants():
    result = run_json('frob', '--algebra', 'semisimple:2,3', '--max-genus', '2')
    assert result["genus_invariants"] == pytest.approx([5, 2, 1 / 2 + 1 / 3])
    assert result["semisimple"] is True
    assert result["structure"]["passed"] is True


def test_cobordism_words():
    result = run_json('cob', '--algebra', 'classfun:S3', '--genus', '2')
    assert result["in_circles"] == 0 and result["out_circles"] == 0
    assert result["matrix"][0][0] == pytest.approx(81)
    inline = run_json('cob', '--algebra', 'semisimple:1,4', '--word', 'cap;copants;pants;cup')
    assert inline["matrix"][0][0] == pytest.approx(2)
    assert run_json('cob', '--algebra', 'classfun:D4', '--suite')["relations"]["passed"] is True


def test_cobordism_eval_and_suite_actions():
    result = run_json('cob', 'eval', '--word', 'cap;copants;pants;cup', '--algebra', 'semisimple:1,4')
    assert result["matrix"][0][0] == pytest.approx(2)
    assert run_json('cob', 'suite', '--algebra', 'classfun:S3')["relations"]["passed"] is True
    code, _, err = run('cob', 'eval', '--algebra', 'semisimple:1,4')
    assert code == 2
    assert "--word" in err


def test_cobordism_rejects_noncommutative_algebras():
    code, _, err = run('cob', '--algebra', 'matrix:2', '--genus', '1')
    assert code == 2
    assert "commutative" in err


def test_open_closed():
    result = run_json('openclosed', '--traces', '4,9', '--signs', '-1,1', '--branes', '1,2')
    assert result["open_dim"] == 5
    assert result["k0"]["description"] == "Z^2"
    assert result["cardy"]["passed"] is True
    assert run_json('openclosed', '--random', '5')["configurations"] == 5


@pytest.mark.parametrize("signs", ['+,-,+', '+,−,+', '1,-1,1', '+1,-1,+1'])
def test_cardy_subcommand(signs):
    result = run_json('openclosed', 'cardy', '--traces', '1,4,9', '--k', '2,1,3', '--signs', signs)
    assert result["points"] == 3
    assert result["branes"] == [2, 1, 3]
    assert result["cardy"]["passed"] is True


def test_signs_may_lead_with_a_minus():
    for argv in (['--signs', '-1,1'], ['--signs=-1,1'], ['--signs', '-,+']):
        result = run_json('openclosed', '--traces', '4,9', *argv)
        assert result["cardy"]["passed"] is True
    code, _, _ = run('openclosed', '--traces', '4,9', '--signs', '+,x')
    assert code == 2


def test_lattice_state_sums():
    result = run_json('lattice', '--group', 'S3', '--surface', 'genus:2')
    assert result["value"]["exact"] == "9/4"
    assert result["euler_characteristic"] == -2
    moved = run_json('lattice', '--group', 'S3', '--surface', 'genus:2', '--moves', '5')
    assert moved["value"]["exact"] == "9/4"
    assert run_json('lattice', '--group', 'Z2', '--surface', 'torus', '--check', 'pachner',
                    '--moves', '10')["pachner"]["passed"] is True
    assert run_json('lattice', '--group', 'S3', '--check', 'cylinder')["cylinder"]["passed"] is True


def test_lattice_shuffle_keeps_the_value():
    result = run_json('lattice', '--surface', 'genus:2', '--group', 'S3', '--shuffle', '50', '--seed', '7')
    assert result["moves"] == 50
    assert result["value"]["exact"] == "9/4"
    assert result["euler_characteristic"] == -2


def test_lattice_check_rejects_boundaries():
    code, _, _ = run('lattice', '--group', 'Z2', '--surface', 'cylinder', '--check', 'bridge')
    assert code == 2


def test_drinfeld_double_of_s3():
    result = run_json('double', '--group', 'S3', '--genus', '2')
    assert result["rank"] == 8
    assert result["verlinde_dim"] == 116
    assert result["burnside_orbits"] == 116
    assert result["fusion_genus_dim"] == 116
    assert sorted(round(q) for q in result["qdims"]) == [1, 1, 2, 2, 2, 2, 3, 3]
    relations = run_json('double', '--group', 'S3', '--emit', 'relations')["relations"]
    assert relations["passed"] is True


def test_double_emits_several_outputs():
    result = run_json('double', '--group', 'S3', '--emit', 's,t,c,fusion,dims', '--genus', '2')
    assert len(result["S"]) == 8 and len(result["C"]) == 8
    assert len(result["twists"]) == 8
    assert len(result["fusion"]) == 8
    assert sorted(round(q) for q in result["qdims"]) == [1, 1, 2, 2, 2, 2, 3, 3]
    assert result["verlinde_dim"] == 116
    assert run_json('double', '--group', 'trivial', '--emit', 's')["S"] == [[1]]
    code, _, _ = run('double', '--group', 'S3', '--emit', 's,banana')
    assert code == 2


def test_su2_level_k():
    result = run_json('su2k', '--level', '2', '--genus', '2')
    assert result["verlinde_dim"] == 10
    assert result["twist_sign"] == 1
    fusion = run_json('su2k', '--level', '1', '--emit', 'fusion')["fusion"]
    assert fusion[1][1] == [1, 0]


def test_yang_mills():
    finite = run_json('ym', '--spectrum', 'finite', '--group', 'S3', '--genus', '2', '--gluing')
    assert finite["exact"]["exact"] == "9/4"
    assert finite["gluing"]["passed"] is True
    su2 = run_json('ym', '--genus', '2', '--area', '0.1')
    assert su2["tail_bound"] < 1e-8
    assert su2["value"] == pytest.approx(1.412, abs=0.005)
    code, _, _ = run('ym', '--spectrum', 'finite', '--genus', '2')
    assert code == 2


@pytest.mark.parametrize("argv", [
    ['dw', '--group', 'PSL27', '--genus', '1'],
    ['dw', '--group', 'S4', '--genus', '4', '--method', 'brute'],
    ['su2k', '--level', '0'],
    ['dw', '--group', 'S3'],
    ['frobnicate'],
])
def test_rejected_input_exits_with_2(argv):
    code, out, _ = run(*argv)
    assert code == 2
    assert out == ""


def test_output_file_and_formats(tmp_path):
    target = tmp_path / "dw.json"
    code, out, _ = run('dw', '--group', 'Z2', '--genus', '1', '--output', str(target))
    assert code == 0
    assert "count" in out
    assert json.loads(target.read_text())["count"] == 4
    code, out, _ = run('dw', '--group', 'Z2', '--genus', '1', '--format', 'csv')
    assert "count,4" in out.splitlines()


def test_seed_accepts_hex():
    code, _, err = run('chartable', '--group', 'Z3', '--seed', '0xBEEF')
    assert code == 0, err


def test_main_writes_logs(capsys, tmp_path):
    assert main(['group', '--group', 'Z2', '--format', 'json']) == 0
    assert json.loads(capsys.readouterr().out)["order"] == 2
    assert (tmp_path / "logs" / "cli.log").exists()
