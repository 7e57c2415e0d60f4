import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from src.errors import (
    BudgetExceededError,
    GammaNotSurjectiveError,
    PhiNotInjectiveError,
    SpecInvalidError,
    ValueOutOfRangeError,
)
from src.finite_function import FiniteFunction, gap_report
from src.generators import (
    LiftSpec,
    QuasiLinearSpec,
    all_functions,
    count_quadratic_polynomials,
    find_total_collapse_witnesses,
    function_from_index,
    is_total_collapse,
    lift,
    quadratic_polynomial_from_index,
    quasi_linear,
    random_function,
    random_gap_two_quasi_linear_spec,
    random_lift_spec,
)
from src.prng import SplitMix64


def test_function_from_index_row_zero_is_most_significant():
    assert function_from_index(2, 2, 2, 6).values() == (0, 1, 1, 0)
    assert function_from_index(2, 2, 2, 9).values() == (1, 0, 0, 1)
    assert function_from_index(2, 3, 1, 5).values() == (1, 2)
    with pytest.raises(ValueOutOfRangeError):
        function_from_index(2, 2, 2, 16)


def test_all_functions():
    tables = [f.values() for f in all_functions(2, 2, 2)]
    assert len(tables) == 16
    assert len(set(tables)) == 16
    assert [f.values() for f in all_functions(2, 2, 2, start=6, stop=7)] == [(0, 1, 1, 0)]


def test_random_function_values_follow_generator():
    assert random_function(2, 2, 2, seed=1234567).values() == (1, 1, 1, 1)
    assert random_function(2, 3, 2, seed=1234567).values() == (0, 1, 0, 1)


def test_random_function_is_deterministic_and_streams_differ():
    a = random_function(3, 3, 4, seed=5)
    assert a == random_function(3, 3, 4, seed=5)
    assert a != random_function(3, 3, 4, seed=5, stream=1)


def test_random_function_table_budget():
    with pytest.raises(BudgetExceededError):
        random_function(4, 2, 6, seed=1, table_budget=100)


def test_quadratic_enumeration():
    assert count_quadratic_polynomials(2) == 8
    assert count_quadratic_polynomials(4) == 63 * 32
    polynomials = [quadratic_polynomial_from_index(3, t) for t in range(count_quadratic_polynomials(3))]
    assert len(set(polynomials)) == len(polynomials) == 112
    assert all(p.degree == 2 for p in polynomials)
    with pytest.raises(ValueOutOfRangeError):
        quadratic_polynomial_from_index(3, 112)


def test_quasi_linear_example():
    spec = QuasiLinearSpec(3, 3, ((0, 1, 0),) * 3, (0, 1))
    f = quasi_linear(spec)
    assert (f.k, f.b, f.n) == (3, 3, 3)
    report = gap_report(f)
    assert report.ess == 3
    assert report.gap == 2


def test_quasi_linear_with_constant_inner_map():
    spec = QuasiLinearSpec(2, 3, ((0, 1), (1, 1), (0, 1)), (1, 0))
    f = quasi_linear(spec)
    assert f.essential_variables == (1, 3)
    assert gap_report(f).gap == 2


def test_quasi_linear_with_different_inner_maps_has_gap_one():
    f = quasi_linear(QuasiLinearSpec(3, 2, ((0, 1, 0), (0, 1, 1)), (0, 1)))
    assert f.ess == 2
    assert gap_report(f).gap == 1


def test_quasi_linear_with_constant_outer_map_is_constant():
    assert quasi_linear(QuasiLinearSpec(3, 3, ((0, 1, 0),) * 3, (2, 2))).ess == 0


@pytest.mark.parametrize(
    "h,g",
    [
        (((0, 1, 0),) * 2, (0, 1)),
        (((0, 1, 2),) * 3, (0, 1)),
        (((0, 1, 0),) * 3, (0, 3)),
        (((0, 1, 0),) * 3, (0,)),
    ],
)
def test_quasi_linear_spec_validation(h, g):
    with pytest.raises(SpecInvalidError):
        QuasiLinearSpec(3, 3, h, g)


@settings(deadline=None, max_examples=60)
@given(st.integers(2, 4), st.integers(2, 4), st.integers(0, 2 ** 32))
def test_random_quasi_linear_specs_have_gap_two(k, n, seed):
    f = quasi_linear(random_gap_two_quasi_linear_spec(SplitMix64(seed), k, n))
    assert gap_report(f).gap == 2


def test_lift_of_xor(xor):
    g = lift(LiftSpec(xor, (0, 1, 0), (0, 1)))
    assert (g.k, g.b, g.n) == (3, 3, 2)
    report = gap_report(g)
    assert (report.ess, report.gap) == (2, 2)


def test_lift_spec_validation(xor):
    with pytest.raises(GammaNotSurjectiveError):
        LiftSpec(xor, (0, 0, 0), (0, 1))
    with pytest.raises(PhiNotInjectiveError):
        LiftSpec(xor, (0, 1, 1), (2, 2))
    with pytest.raises(SpecInvalidError):
        LiftSpec(xor, (0,), (0, 1))
    with pytest.raises(SpecInvalidError):
        LiftSpec(FiniteFunction(2, 3, 1, [0, 2]), (0, 1), (0, 1))


@settings(deadline=None, max_examples=60)
@given(st.integers(2, 3), st.integers(1, 3), st.integers(0, 2 ** 32))
def test_lift_preserves_ess_and_gap(k, n, seed):
    rng = SplitMix64(seed)
    f = FiniteFunction(k, k, n, rng.integers(k, k ** n))
    spec = random_lift_spec(rng, f)
    assert spec.target_size <= 5
    g = lift(spec)
    assert g.ess == f.ess
    if f.ess >= 2:
        assert gap_report(g).gap == gap_report(f).gap


def test_is_total_collapse(xor, and_, xor3):
    assert is_total_collapse(xor)
    assert not is_total_collapse(and_)
    assert not is_total_collapse(xor3)


def test_collapse_witnesses_boolean_binary():
    result = find_total_collapse_witnesses(2, 2)
    assert result.exhaustive
    assert result.examined == 16
    tables = {f.values() for f in result.witnesses}
    assert len(tables) == 6
    assert (0, 1, 1, 0) in tables and (1, 0, 0, 1) in tables


def test_no_boolean_collapse_witness_in_three_variables():
    result = find_total_collapse_witnesses(2, 3)
    assert result.mode == "exhaustive"
    assert result.witnesses == []


def test_collapse_witnesses_three_elements():
    binary = find_total_collapse_witnesses(3, 2, limit=1)
    assert binary.mode == "exhaustive"
    assert len(binary.witnesses) == 1
    ternary = find_total_collapse_witnesses(3, 3, limit=3)
    assert ternary.mode == "reduced"
    assert len(ternary.witnesses) == 3
    for f in ternary.witnesses:
        assert f.ess == 3
        assert is_total_collapse(f)


def test_collapse_search_budget():
    with pytest.raises(BudgetExceededError) as info:
        find_total_collapse_witnesses(3, 3, budget=100)
    assert info.value.partial.mode == "sampled"
    sampled = find_total_collapse_witnesses(3, 3, budget=100, samples=50, seed=3)
    assert sampled.mode == "sampled"
    assert sampled.examined == 50
    assert all(is_total_collapse(f) for f in sampled.witnesses)
