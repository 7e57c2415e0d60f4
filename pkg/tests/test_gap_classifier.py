import itertools

import pytest
from hypothesis import assume, given
import hypothesis.strategies as st

from src.errors import EssentialArityTooSmallError
from src.finite_function import FiniteFunction, gap_report
from src.gap_classifier import FormTag, classify, gap_via_classifier
from src.generators import all_functions, random_function
from src.zhegalkin import from_anf, parse_polynomial, to_anf
from strategies import boolean_functions


@pytest.mark.parametrize(
    "text,tag,participants,c",
    [
        ("x1 + x2", FormTag.LINEAR_PARITY, (1, 2), 0),
        ("x1 + x2 + x3 + 1", FormTag.LINEAR_PARITY, (1, 2, 3), 1),
        ("x1*x2 + x1", FormTag.AND_PLUS_VAR, (1, 2), 0),
        ("x1*x2 + x2 + 1", FormTag.AND_PLUS_VAR, (2, 1), 1),
        ("x1*x2 + x1*x3 + x2*x3", FormTag.TRIANGLE_MAJ, (1, 2, 3), 0),
        ("x1*x2 + x1*x3 + x2*x3 + x1 + x2", FormTag.TRIANGLE_MAJ_PLUS_TWO, (1, 2, 3), 0),
        ("x1*x2 + x1*x3 + x2*x3 + x2 + x3 + 1", FormTag.TRIANGLE_MAJ_PLUS_TWO, (2, 3, 1), 1),
    ],
)
def test_special_forms(text, tag, participants, c):
    form = classify(parse_polynomial(text))
    assert form.tag is tag
    assert form.participants == participants
    assert form.c == c
    assert form.implied_gap == 2


def test_participants_use_actual_variable_indices():
    form = classify(parse_polynomial("x2*x4 + x2", arity=4))
    assert form.tag is FormTag.AND_PLUS_VAR
    assert form.participants == (2, 4)


@pytest.mark.parametrize(
    "text",
    ["x1*x2", "x1*x2 + x1 + x2", "x1*x2*x3", "x1*x2 + x3", "x1*x2 + x1*x3 + x2*x3 + x1"],
)
def test_not_special(text):
    form = classify(parse_polynomial(text))
    assert form.tag is FormTag.NOT_SPECIAL
    assert form.implied_gap == 1


def test_tag_values_are_cli_names():
    assert FormTag.TRIANGLE_MAJ.value == "TriangleMaj"
    assert FormTag.NOT_SPECIAL.value == "NotSpecial"


def test_classify_needs_two_variables():
    with pytest.raises(EssentialArityTooSmallError):
        classify(parse_polynomial("x1 + 1"))


def test_examples(xor, and_, maj3):
    assert gap_via_classifier(xor) == 2
    assert gap_via_classifier(and_) == 1
    assert classify(to_anf(maj3)).tag is FormTag.TRIANGLE_MAJ


def test_classifier_agrees_with_search_up_to_arity_three():
    for n in (2, 3):
        for f in all_functions(2, 2, n):
            if f.ess >= 2:
                assert gap_via_classifier(f) == gap_report(f).gap


@pytest.mark.slow
def test_classifier_agrees_with_search_arity_four():
    for f in all_functions(2, 2, 4):
        if f.ess >= 2:
            assert gap_via_classifier(f) == gap_report(f).gap


@pytest.mark.parametrize("n", [5, 6])
def test_classifier_agrees_on_random_tables(n):
    for seed in range(50):
        f = random_function(2, 2, n, seed)
        assert gap_via_classifier(f) == gap_report(f).gap


def test_classifier_with_fictitious_variables():
    # x1*x3 + x1 in drei Variablen, x2 fiktiv
    f = FiniteFunction(2, 2, 3, [0, 0, 0, 0, 1, 0, 1, 0])
    assert classify(to_anf(f)).participants == (1, 3)
    assert gap_via_classifier(f) == gap_report(f).gap == 2


def _term(*indices):
    return "*".join(f"x{i}" for i in indices)


@st.composite
def special_polynomials(draw):
    """Eine der vier Sonderformen an zufälligen Indizes in 3 bis 6 Variablen."""
    n = draw(st.integers(3, 6))
    picked = draw(st.permutations(range(1, n + 1)))
    tag = draw(st.sampled_from([t for t in FormTag if t is not FormTag.NOT_SPECIAL]))
    c = draw(st.integers(0, 1))
    i, j, l = picked[:3]
    if tag is FormTag.LINEAR_PARITY:
        used = picked[:draw(st.integers(2, n))]
        terms = [_term(v) for v in used]
    elif tag is FormTag.AND_PLUS_VAR:
        used = (i, j)
        terms = [_term(i, j), _term(i)]
    else:
        used = (i, j, l)
        terms = [_term(i, j), _term(i, l), _term(j, l)]
        if tag is FormTag.TRIANGLE_MAJ_PLUS_TWO:
            terms += [_term(i), _term(j)]
    if c:
        terms.append("1")
    return tag, tuple(sorted(used)), c, parse_polynomial(" + ".join(terms), arity=n)


@given(special_polynomials())
def test_special_forms_at_any_indices_have_gap_two(case):
    tag, used, c, p = case
    form = classify(p)
    assert form.tag is tag
    assert tuple(sorted(form.participants)) == used
    assert form.c == c
    f = from_anf(p)
    assert gap_report(f).gap == 2 == gap_via_classifier(f)


@given(boolean_functions(n=st.integers(2, 5)), st.data())
def test_classify_ignores_variable_order(f, data):
    assume(f.ess >= 2)
    permutation = data.draw(st.permutations(range(1, f.n + 1)))
    original = classify(to_anf(f))
    permuted = classify(to_anf(f.permute(permutation)))
    assert (permuted.tag, permuted.c) == (original.tag, original.c)


def test_classify_ignores_variable_order_up_to_arity_three():
    for f in all_functions(2, 2, 3):
        if f.ess < 2:
            continue
        expected = classify(to_anf(f))
        for permutation in itertools.permutations((1, 2, 3)):
            form = classify(to_anf(f.permute(permutation)))
            assert (form.tag, form.c) == (expected.tag, expected.c)
