from fractions import Fraction

import pytest

from searchit.learning import (LearningSpec, build_learning_matrix, diagonal_form, explicit_value,
                               per_state_payoffs, posterior_after_escape, returns_more_often,
                               solve_learning)
from searchit.lp import solve_zero_sum
from searchit.util import GameSpecError


@pytest.fixture
def thirds():
    return LearningSpec("1/3", "2/3")


def test_matrix(thirds):
    assert build_learning_matrix(thirds) == ((Fraction(13, 36), Fraction(1, 4)), (Fraction(1, 4), Fraction(3, 8)))
    assert diagonal_form(thirds) == (Fraction(8, 9), 1)


def test_state_payoffs(thirds):
    payoffs = per_state_payoffs(thirds)
    assert payoffs.same_high == Fraction(5, 18)
    assert payoffs.same_low == Fraction(4, 9)
    assert payoffs.rd_lh == payoffs.rd_hl == Fraction(7, 18)
    matrix = build_learning_matrix(thirds)
    assert payoffs.rs_rs == matrix[0][0]
    assert payoffs.rd_rd == matrix[1][1] == Fraction(3, 8)


def test_solve_thirds(thirds):
    solution = solve_learning(thirds)
    assert solution.shortcut
    assert solution.value_A == Fraction(21, 68) == explicit_value(thirds)
    assert solution.value_Y == Fraction(8, 17)
    assert solution.prob_rs == Fraction(9, 17)
    assert solution.prob_rd == Fraction(8, 17)
    assert returns_more_often(thirds)


def test_posterior_thirds(thirds):
    posterior = posterior_after_escape(thirds, solve_learning(thirds))
    assert posterior.prob_high_given_escape == Fraction(2, 3)
    assert posterior.expected_escape_next == Fraction(5, 9)
    assert posterior.implied_capture_x == Fraction(4, 9)
    assert posterior.q_low_capture == Fraction(2, 3)


@pytest.mark.parametrize("low, high, value, rs, shortcut", [
    ("0", "1/2", Fraction(33, 80), Fraction(3, 5), True),
    ("1/2", "1/2", Fraction(5, 16), Fraction(1, 2), True),
    ("0", "0", Fraction(1, 2), None, False),
    ("1", "1", Fraction(0), None, False),
])
def test_solve_special_cases(low, high, value, rs, shortcut):
    solution = solve_learning(LearningSpec(low, high))
    assert solution.value_A == value
    assert solution.shortcut == shortcut
    if rs is not None:
        assert solution.prob_rs == rs
    else:
        assert solution.value_Y is None


def test_equal_escape_probabilities_do_not_favour_returning():
    spec = LearningSpec("1/2", "1/2")
    assert not returns_more_often(spec)
    posterior = posterior_after_escape(spec, solve_learning(spec))
    assert posterior.q_low_capture == Fraction(1, 2)
    assert posterior.implied_capture_x == Fraction(1, 2)


def test_posterior_needs_an_escape():
    spec = LearningSpec("0", "0")
    with pytest.raises(GameSpecError):
        posterior_after_escape(spec, solve_learning(spec))


def test_posterior_certain_escape():
    spec = LearningSpec("1", "1")
    posterior = posterior_after_escape(spec, solve_learning(spec))
    assert posterior.expected_escape_next == 1
    assert posterior.implied_capture_x == 0


@pytest.mark.parametrize("low, high", [("2/3", "1/3"), ("-1/10", "1/2"), ("1/2", "11/10")])
def test_invalid_escape_probabilities(low, high):
    with pytest.raises(GameSpecError):
        LearningSpec(low, high)


def test_prior_is_fixed():
    with pytest.raises(GameSpecError):
        LearningSpec("1/3", "2/3", prior="1/3")


def test_random_escape_probabilities(rng):
    for _ in range(50):
        low = Fraction(rng.randint(0, 20), 20)
        high = Fraction(rng.randint(int(low * 20), 20), 20)
        spec = LearningSpec(low, high)
        solution = solve_learning(spec)
        matrix = build_learning_matrix(spec)
        assert solution.value_A == solve_zero_sum(matrix).value
        payoffs = per_state_payoffs(spec)
        assert payoffs.rs_rs == matrix[0][0]
        assert payoffs.rd_rd == matrix[1][1]
        if solution.shortcut and low < high:
            assert returns_more_often(spec) == (solution.prob_rs > Fraction(1, 2))
        if low + high > 0:
            posterior = posterior_after_escape(spec, solution)
            assert posterior.implied_capture_x == 1 - posterior.expected_escape_next


def test_low_escape_location_is_revisited_more_often(rng):
    grid = sorted(set(Fraction(i, 24) for i in range(25)) | set(Fraction(i, 30) for i in range(31)))
    for _ in range(200):
        low, high = sorted(rng.sample(grid, 2))
        spec = LearningSpec(low, high)
        solution = solve_learning(spec)
        matrix = build_learning_matrix(spec)
        posterior = posterior_after_escape(spec, solution)
        assert posterior.implied_capture_x == 1 - (low ** 2 + high ** 2) / (low + high)
        if not solution.shortcut:
            # only l = 0, h = 1 empties a diagonal entry
            assert (low, high) == (0, 1)
            continue
        assert solution.value_A == explicit_value(spec) == solve_zero_sum(matrix).value
        assert solution.prob_rs > Fraction(1, 2)
        assert returns_more_often(spec)
