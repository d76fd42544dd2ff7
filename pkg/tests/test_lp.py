from fractions import Fraction

import pytest

from searchit.game import solve_game
from searchit.lp import (check_guarantees, hider_uniqueness, linear_program, searcher_uniqueness,
                         solve_diagonal, solve_zero_sum)
from searchit.util import GameSpecError, InfeasibleProgramError, SearchItError, as_matrix


def test_linear_program_vertex_and_duals():
    result = linear_program([1, 1], [[1, 2], [3, 1]], [4, 6])
    assert result.x == (Fraction(8, 5), Fraction(6, 5))
    assert result.objective == Fraction(14, 5)
    assert result.duals == (Fraction(2, 5), Fraction(1, 5))


def test_linear_program_minimize_with_negative_rhs():
    result = linear_program([2, 3], [[-1, -1]], [-2], maximize=False)
    assert result.objective == 4
    assert result.x == (2, 0)


def test_linear_program_equality_rows():
    result = linear_program([1, 2, 3], A_eq=[[1, 1, 1]], b_eq=[1])
    assert result.x == (0, 0, 1)
    assert result.objective == 3


def test_linear_program_infeasible():
    with pytest.raises(InfeasibleProgramError):
        linear_program([1], [[1], [-1]], [1, -2])


def test_linear_program_unbounded():
    with pytest.raises(SearchItError):
        linear_program([1, 0], [[0, 1]], [1])


@pytest.mark.parametrize("matrix, value", [
    ([[1, -1], [-1, 1]], 0),
    ([[0, 1, -1], [-1, 0, 1], [1, -1, 0]], 0),
    ([[5]], 5),
    ([[2, 2], [2, 2]], 2),
    ([[3, 0], [0, 3], [1, 1]], Fraction(3, 2)),
    ([["1/3", 0, 0], [0, "1/5", 0], [0, 0, "1/7"]], Fraction(1, 15)),
])
def test_small_games(matrix, value):
    solution = solve_zero_sum(matrix)
    assert solution.value == value
    assert check_guarantees(as_matrix(matrix), solution)


def test_constant_matrix_is_uniform():
    solution = solve_zero_sum([[2, 2, 2], [2, 2, 2]])
    assert solution.row_strategy == (Fraction(1, 2), Fraction(1, 2))
    assert solution.col_strategy == (Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))


def test_tall_matrix_strategies():
    solution = solve_zero_sum([[3, 0], [0, 3], [1, 1]])
    assert solution.row_strategy == (Fraction(1, 2), Fraction(1, 2), 0)
    assert solution.col_strategy == (Fraction(1, 2), Fraction(1, 2))


def test_diagonal_game():
    d = (Fraction(1, 3), Fraction(1, 5), Fraction(1, 7))
    expected = (Fraction(1, 5), Fraction(1, 3), Fraction(7, 15))
    diagonal = solve_diagonal(d)
    assert diagonal.value == Fraction(1, 15)
    assert diagonal.row_strategy == expected
    general = solve_zero_sum([[d[0], 0, 0], [0, d[1], 0], [0, 0, d[2]]])
    assert general.row_strategy == expected
    assert general.col_strategy == expected


def test_diagonal_game_needs_positive_entries():
    with pytest.raises(GameSpecError):
        solve_diagonal((1, 0))


def test_ragged_matrix_is_rejected():
    with pytest.raises(GameSpecError):
        solve_zero_sum([[1, 2], [3]])


def test_scaling_and_shifting(rng):
    for _ in range(50):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        matrix = [[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(cols)] for _ in range(rows)]
        value = solve_zero_sum(matrix).value
        scale = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        shift = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        assert solve_zero_sum([[scale * v for v in row] for row in matrix]).value == scale * value
        assert solve_zero_sum([[v + shift for v in row] for row in matrix]).value == value + shift


def test_unique_hider(arithmetic_family):
    matrix, solution = solve_game(arithmetic_family(5))
    report = hider_uniqueness(matrix, solution.value)
    assert report.unique
    assert report.point() == (0, 0, Fraction(2, 11), Fraction(3, 11), Fraction(6, 11))


def test_searcher_is_not_unique(arithmetic_family):
    matrix, solution = solve_game(arithmetic_family(5))
    report = searcher_uniqueness(matrix, solution.value)
    assert not report.unique
    assert report.point() is None
    one_three = [s.members for s in matrix.rows].index((1, 3))
    assert report.ranges[one_three][1] > 0


def test_uniqueness_probe_below_the_value(unequal_times):
    matrix, solution = solve_game(unequal_times)
    with pytest.raises(InfeasibleProgramError):
        hider_uniqueness(matrix, solution.value - Fraction(1, 1000))
