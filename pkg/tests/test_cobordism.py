import numpy as np
import pytest

from core.cobordism import (
    CobordismWord, closed_surface_word, evaluate, format_word, identity_word, make_word, parse_word,
    relation_suite, typecheck,
)
from core.errors import GuardExceeded, ValidationError
from core.frobenius import (
    change_basis, class_function_algebra, dual_numbers, genus_invariant, matrix_algebra, semisimple_algebra,
)
from core.settings import replace_settings


def test_widths_and_arity():
    w = closed_surface_word(1)
    assert w.widths == [0, 1, 2, 1, 0]
    assert typecheck(w) == (0, 0)
    assert make_word([['pants', 'id'], ['twist']]).widths == [3, 2, 2]
    assert make_word([['pants', 'id'], ['pants'], ['copants']]).widths == [3, 2, 1, 2]


def test_parse_accepts_aliases_and_comments():
    w = parse_word("unit   # start from the vacuum\ndelta\nmu\ncounit\n")
    assert format_word(w) == "cap\ncopants\npants\ncup"
    assert w == closed_surface_word(1)


def test_arity_mismatch_names_the_slice():
    with pytest.raises(ValidationError, match="slice 1"):
        make_word([['pants'], ['pants']])


@pytest.mark.parametrize("text", ["", "cap\nbanana\ncup", "# nothing here"])
def test_malformed_words(text):
    with pytest.raises(ValidationError):
        parse_word(text)


@pytest.mark.parametrize("g", [0, 1, 2, 3])
def test_closed_words_match_genus_invariant(s3, g):
    A = class_function_algebra(s3)
    value = evaluate(closed_surface_word(g), A)
    assert value.shape == (1, 1)
    assert value[0, 0] == pytest.approx(genus_invariant(A, g))


def test_genus_two_of_s3_is_81(s3):
    assert evaluate(closed_surface_word(2), class_function_algebra(s3))[0, 0] == pytest.approx(81)


def test_identity_and_twist():
    A = semisimple_algebra([1.0, 2.0, 3.0])
    assert np.allclose(evaluate(identity_word(2), A), np.eye(9))
    twist = evaluate(make_word([['twist']]), A).reshape(3, 3, 3, 3)
    for a in range(3):
        for b in range(3):
            assert twist[a, b, b, a] == 1
    assert np.allclose(twist.sum(), 9)


def test_pants_on_idempotents():
    A = semisimple_algebra([1.0, 2.0])
    pants = evaluate(make_word([['pants']]), A)
    assert pants.shape == (2, 4)
    assert np.allclose(pants, [[1, 0, 0, 0], [0, 0, 0, 1]])


def test_composition_with_then():
    A = semisimple_algebra([2.0, 5.0])
    cap = make_word([['cap']])
    cup = make_word([['cup']])
    assert evaluate(cap.then(cup), A)[0, 0] == pytest.approx(7)


def test_noncommutative_algebras_are_rejected():
    with pytest.raises(ValidationError, match="commutative"):
        evaluate(closed_surface_word(1), matrix_algebra(2))


def test_width_and_entry_caps():
    A = semisimple_algebra([1.0, 1.0])
    with pytest.raises(GuardExceeded):
        evaluate(identity_word(9), A)
    replace_settings(max_tensor_entries=100)
    with pytest.raises(GuardExceeded):
        evaluate(identity_word(2), semisimple_algebra([1.0, 2.0, 3.0, 4.0]))


def test_relation_suite_on_standard_algebras(s3, np_random):
    assert relation_suite(class_function_algebra(s3)).passed
    assert relation_suite(dual_numbers(0.5, 1.0)).passed
    A = semisimple_algebra([1.0, -0.5, 2j])
    B = change_basis(A, np.eye(3) + 0.2 * np_random.normal(size=(3, 3)))
    report = relation_suite(B, max_genus=3)
    assert report.passed
    assert "closed_genus_3" in report.defects
    assert "frobenius" in report.defects


def test_word_dataclass_is_hashable():
    assert len({closed_surface_word(1), parse_word("cap\ncopants\npants\ncup")}) == 1
    assert isinstance(identity_word(1), CobordismWord)
