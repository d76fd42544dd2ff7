from fractions import Fraction

import pytest

from searchit.closed_forms import (CORNER, INTERIOR, TwoTypeSpec, arithmetic_times_spec, check_pn_threshold,
                                   constant_times_spec, expand_two_type, solve_arithmetic_times,
                                   solve_constant_times, solve_two_type, systematic_sets,
                                   two_type_payoff, two_type_searcher_sets)
from searchit.game import GameSpec, solve_game
from searchit.lp import hider_uniqueness
from searchit.oracle import certify_closed_form
from searchit.util import GameSpecError

THREE_BOXES = ("1/5", "3/10", "1/2")
TABULATED_P = ("1/2", "2/5", "3/10", "1/5", "1/10")


def test_constant_times_interior():
    solution = solve_constant_times(THREE_BOXES, 1)
    assert solution.regime == INTERIOR
    assert solution.lambda_sum == Fraction(31, 3)
    assert solution.value == Fraction(3, 31)
    assert solution.h.h == (Fraction(15, 31), Fraction(10, 31), Fraction(6, 31))


@pytest.mark.parametrize("k, regime, value", [
    (1, INTERIOR, Fraction(3, 31)),
    (2, INTERIOR, Fraction(6, 31)),
    (3, CORNER, Fraction(1, 5)),
])
def test_constant_times_matches_lp(k, regime, value):
    solution = solve_constant_times(THREE_BOXES, k)
    assert solution.regime == regime
    assert solution.value == value
    _, lp = solve_game(constant_times_spec(THREE_BOXES, k))
    assert lp.value == value
    assert certify_closed_form(solution.spec, solution.h.h, solution.searcher, solution.value).ok


@pytest.mark.parametrize("k", [0, 4, "3/2"])
def test_constant_times_budget_out_of_range(k):
    with pytest.raises(GameSpecError):
        solve_constant_times(THREE_BOXES, k)


def test_systematic_sets_reproduce_marginals():
    spec = constant_times_spec(("1/2", "1/2", "1/2", "1/2"), 2)
    marginals = [Fraction(1, 3), Fraction(2, 3), Fraction(1, 2), Fraction(1, 2)]
    sets = systematic_sets(spec, marginals, 2)
    assert sum(sets.values()) == 1
    assert all(len(s) == 2 for s in sets)
    for i, target in enumerate(marginals, start=1):
        assert sum(p for s, p in sets.items() if i in s) == target


def test_systematic_sets_need_consistent_marginals():
    spec = constant_times_spec(("1/2", "1/2"), 1)
    with pytest.raises(GameSpecError):
        systematic_sets(spec, [Fraction(1, 2), Fraction(1, 3)], 1)


def test_arithmetic_times_odd():
    solution = solve_arithmetic_times(("1/2", "2/5", "3/10", "1/5", "1/10"))
    assert solution.verified
    assert not solution.even
    assert solution.strictly_decreasing
    assert solution.m == 2
    assert solution.value == Fraction(3, 55)
    assert solution.hider.h == (0, 0, Fraction(2, 11), Fraction(3, 11), Fraction(6, 11))
    assert sorted(s.members for s in solution.searcher) == [(1, 4), (2, 3), (5,)]


def test_arithmetic_times_even_is_flagged():
    solution = solve_arithmetic_times(("1/2", "2/5", "3/10", "1/5"))
    assert solution.even
    assert not solution.verified
    assert solution.value == Fraction(3, 25)
    assert solution.oracle_value == Fraction(6, 65)


def test_threshold(arithmetic_family):
    assert check_pn_threshold(arithmetic_family(10)).holds
    assert check_pn_threshold(arithmetic_family(10)).value == Fraction(1, 10)
    below = check_pn_threshold(arithmetic_family(9))
    assert not below.holds
    assert below.value is None


def test_threshold_single_location():
    result = check_pn_threshold(GameSpec((1,), ("1/3",), 1))
    assert result.holds
    assert result.reduced_value is None


def test_threshold_preconditions(arithmetic_family, unequal_times):
    with pytest.raises(GameSpecError):
        check_pn_threshold(arithmetic_family(4))
    with pytest.raises(GameSpecError):
        check_pn_threshold(unequal_times)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_threshold_agrees_with_lp(n):
    for k in range(n, n * (n + 1) // 2 + 1):
        spec = GameSpec(tuple(range(1, n + 1)), TABULATED_P[:n], k)
        _, solution = solve_game(spec)
        result = check_pn_threshold(spec)
        assert result.holds == (solution.value == spec.p[-1])
        if n == 5:
            assert result.holds == (k >= 10)


def test_two_types():
    spec = TwoTypeSpec(4, 2, 2, "3/10", "1/5", 4)
    solution = solve_two_type(spec)
    assert solution.y_bar == Fraction(2, 5)
    assert solution.j_hat == Fraction(6, 5)
    assert solution.m == 2
    assert solution.value == Fraction(3, 25)
    assert solution.searcher_mix == {1: Fraction(4, 5), 2: Fraction(1, 5)}
    for j in range(0, solution.m + 1):
        assert two_type_payoff(spec, j, solution.y_bar) == solution.value

    expanded = expand_two_type(spec)
    assert expanded.t == (1, 1, 1, 1, 2, 2)
    sets = two_type_searcher_sets(spec, solution)
    assert sum(sets.values()) == 1
    assert certify_closed_form(expanded, solution.hider(spec), sets, solution.value).ok
    _, lp = solve_game(expanded)
    assert lp.value == solution.value


def test_two_types_outside_regime():
    spec = TwoTypeSpec(1, 1, 3, "1/2", "1/3", 3)
    assert not spec.in_regime
    with pytest.raises(GameSpecError):
        solve_two_type(spec)
    _, lp = solve_game(expand_two_type(spec))
    assert lp.value == Fraction(1, 5)


def test_two_types_mean_beyond_floor():
    spec = TwoTypeSpec(3, 2, 2, "1", "1/10", 3)
    assert spec.in_regime
    assert spec.j_hat == Fraction(60, 43)
    assert not spec.closed_form_applies
    with pytest.raises(GameSpecError):
        solve_two_type(spec)


@pytest.mark.parametrize("values", [
    (0, 1, 1, "1/2", "1/2", 1),
    (1, 1, "3/2", "1/2", "1/2", 1),
    (1, 1, 1, "0", "1/2", 1),
    (1, 1, 1, "1/2", "2", 1),
])
def test_two_type_spec_validation(values):
    with pytest.raises(GameSpecError):
        TwoTypeSpec(*values)



def decreasing_p(rng, n):
    return tuple(Fraction(c, 40) for c in sorted(rng.sample(range(1, 41), n), reverse=True))


@pytest.mark.slow
@pytest.mark.parametrize("n", [3, 5, 7])
def test_arithmetic_times_odd_random(rng, n):
    for _ in range(50):
        p = decreasing_p(rng, n)
        solution = solve_arithmetic_times(p)
        matrix, lp = solve_game(arithmetic_times_spec(p))
        assert solution.verified
        assert solution.strictly_decreasing
        assert solution.value == lp.value
        assert hider_uniqueness(matrix, lp.value).point() == solution.hider.h


@pytest.mark.parametrize("n", [4, 6])
def test_arithmetic_times_even_random(rng, n):
    for _ in range(10):
        p = decreasing_p(rng, n)
        solution = solve_arithmetic_times(p)
        _, lp = solve_game(arithmetic_times_spec(p))
        assert solution.even
        if solution.verified:
            assert solution.value == lp.value
        else:
            assert solution.oracle_value == lp.value


def test_arithmetic_times_with_ties():
    solution = solve_arithmetic_times(("1/2", "2/5", "2/5", "1/5", "1/10"))
    assert not solution.strictly_decreasing


@pytest.mark.slow
def test_constant_times_random(rng):
    for _ in range(50):
        n = rng.randint(1, 6)
        p = sorted(Fraction(rng.randint(1, 20), 20) for _ in range(n))
        for k in range(1, n + 1):
            solution = solve_constant_times(p, k)
            _, lp = solve_game(constant_times_spec(p, k))
            assert solution.value == lp.value == min(k / solution.lambda_sum, p[0])
            assert certify_closed_form(solution.spec, solution.h.h, solution.searcher, solution.value).ok
            if solution.regime == INTERIOR:
                assert set(h * pi for h, pi in zip(solution.h.h, p)) == {solution.value / k}


def random_two_type(rng):
    """ a two-type game with the closed form, at most 14 locations once expanded and k <= 5 """
    while True:
        tau = rng.randint(1, 3)
        a = rng.randint(1, 8)
        b = rng.randint(1, (14 - a) // tau)
        k = rng.randint(1, min(a, b * tau, 5))
        spec = TwoTypeSpec(a, b, tau, Fraction(rng.randint(1, 10), 10), Fraction(rng.randint(1, 10), 10), k)
        if spec.closed_form_applies:
            return spec
        with pytest.raises(GameSpecError):
            solve_two_type(spec)


@pytest.mark.slow
def test_two_types_random(rng):
    for _ in range(50):
        spec = random_two_type(rng)
        assert spec.a + spec.b * spec.tau <= 14
        solution = solve_two_type(spec)
        assert solution.value == spec.p * spec.q * spec.k / (spec.a * spec.q + spec.b * spec.p * spec.tau)
        for j in range(0, solution.m + 1):
            assert two_type_payoff(spec, j, solution.y_bar) == solution.value
        expanded = expand_two_type(spec)
        _, lp = solve_game(expanded)
        assert lp.value == solution.value
        assert certify_closed_form(expanded, solution.hider(spec), two_type_searcher_sets(spec, solution), solution.value).ok
