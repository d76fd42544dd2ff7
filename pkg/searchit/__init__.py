from .game import GameSpec, SearchSet, HiderStrategy, solve_game, best_response_value, maximal_feasible_sets
from .lp import solve_zero_sum, hider_uniqueness
from .solvers import GameSolver
