""" Independent verification of game solutions

    Nothing in here runs the simplex method on a game it is checking:
    equilibria are certified by exact slack computation and recomputed by
    support enumeration (subset enumeration plus Gaussian elimination).
    The sweeps use the general pipeline and report what it finds.
"""
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy

from .game import build_matrix, maximal_feasible_sets, solve_game
from .lp import MixedSolution, hider_uniqueness
from .process import process_sweep
from .util import EnumerationLimitError, GameSpecError, VerificationError, as_matrix, to_rational

SUPPORT_ENUMERATION_LIMIT = 6


@dataclass(frozen=True)
class Certificate(object):
    """ Exact slacks of a claimed equilibrium

        hider_slack[r] = v - payoff of row r against the hider mix
        searcher_slack[c] = payoff of column c against the searcher mix - v
    """
    claimed_value: Fraction
    hider_slack: tuple
    searcher_slack: tuple

    @property
    def ok(self):
        return min(self.hider_slack) >= 0 and min(self.searcher_slack) >= 0

    def worst_row(self):
        """ (row index, slack) of the row with the smallest hider slack """
        index = min(range(len(self.hider_slack)), key=lambda r: (self.hider_slack[r], r))
        return index, self.hider_slack[index]

    def worst_column(self):
        index = min(range(len(self.searcher_slack)), key=lambda c: (self.searcher_slack[c], c))
        return index, self.searcher_slack[index]


def _distribution(values, size, name):
    values = [to_rational(v, name) for v in values]
    if len(values) != size:
        raise GameSpecError("dimension mismatch: {0:s} has {1:d} entries, expected {2:d}".format(name, len(values), size))
    if any(v < 0 for v in values) or sum(values) != 1:
        raise GameSpecError("{0:s} is not a probability distribution".format(name))
    return numpy.array(values, dtype=object)


def verify_equilibrium(matrix, hider_mix, searcher_mix, claimed_value):
    """ Checks a claimed solution of a zero-sum game exactly

        Raises: GameSpecError if the mixes do not fit the matrix

        Arguments:
        ----------
        matrix -- PayoffMatrix or rectangular sequence of rationals
        hider_mix -- distribution over the columns
        searcher_mix -- distribution over the rows
        claimed_value -- the value both mixes should guarantee
    """
    values = as_matrix(matrix)
    rows, cols = values.shape
    hider = _distribution(hider_mix, cols, "hider mix")
    searcher = _distribution(searcher_mix, rows, "searcher mix")
    v = to_rational(claimed_value, "claimed value")
    hider_slack = tuple(v - payoff for payoff in values.dot(hider))
    searcher_slack = tuple(payoff - v for payoff in searcher.dot(values))
    return Certificate(v, hider_slack, searcher_slack)


def certify_closed_form(spec, hider, searcher_sets, value):
    """ Certifies a solution of G(n,t,p,k) given as a hiding distribution
        and a searcher mix over concrete search sets.

        The payoff matrix is built over every undominated set plus the
        support of the searcher mix, so the hider side is checked against
        all best replies.

        Arguments:
        ----------
        spec -- the game
        hider -- hiding probabilities, one per location
        searcher_sets -- dict SearchSet -> probability
        value -- the claimed value
    """
    matrix = certificate_matrix(spec, searcher_sets)
    searcher = [searcher_sets.get(search_set, Fraction(0)) for search_set in matrix.rows]
    return verify_equilibrium(matrix, hider, searcher, value)


def certificate_matrix(spec, searcher_sets, max_subsets_cap=None):
    """ payoff matrix over the undominated sets and the searcher support,
        rows in lexicographic order
    """
    rows = sorted(set(maximal_feasible_sets(spec, max_subsets_cap)) | set(searcher_sets))
    return build_matrix(spec, rows)


class _SingularSystem(Exception):
    pass


def _solve_linear_system(A, b):
    """ Gauss-Jordan elimination over the rationals """
    size = len(b)
    M = [list(row) + [rhs] for row, rhs in zip(A, b)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if M[r][col] != 0), None)
        if pivot is None:
            raise _SingularSystem()
        M[col], M[pivot] = M[pivot], M[col]
        head = M[col][col]
        M[col] = [v / head for v in M[col]]
        for r in range(size):
            if r != col and M[r][col] != 0:
                factor = M[r][col]
                M[r] = [a - factor * c for a, c in zip(M[r], M[col])]
    return [M[r][-1] for r in range(size)]


def _indifference(block):
    """ mix over the rows of a square block making every column pay the same

        Returns:
        (mix, common payoff) or None if the system is singular
    """
    size = len(block)
    A = []
    for j in range(size):
        A.append([block[i][j] for i in range(size)] + [Fraction(-1)])
    A.append([Fraction(1)] * size + [Fraction(0)])
    b = [Fraction(0)] * size + [Fraction(1)]
    try:
        solution = _solve_linear_system(A, b)
    except _SingularSystem:
        return None
    return solution[:-1], solution[-1]


def support_enumeration_solve(matrix):
    """ Solves a small zero-sum game by enumerating square support pairs

        A zero-sum game always has an equilibrium on square supports with
        nonsingular indifference systems, so the first support pair whose
        solution passes the certificate gives the value.

        Raises: EnumerationLimitError for matrices larger than 6x6
    """
    values = as_matrix(matrix)
    rows, cols = values.shape
    if rows > SUPPORT_ENUMERATION_LIMIT or cols > SUPPORT_ENUMERATION_LIMIT:
        raise EnumerationLimitError("support enumeration is limited to {0:d}x{0:d} matrices, got {1:d}x{2:d}".format(SUPPORT_ENUMERATION_LIMIT, rows, cols))

    for size in range(1, min(rows, cols) + 1):
        for row_support in itertools.combinations(range(rows), size):
            for col_support in itertools.combinations(range(cols), size):
                block = [[values[i, j] for j in col_support] for i in row_support]
                searcher = _indifference(block)
                if searcher is None:
                    continue
                transposed = [[block[i][j] for i in range(size)] for j in range(size)]
                hider = _indifference(transposed)
                if hider is None:
                    continue
                x, v = searcher
                y, w = hider
                if w != v or any(p < 0 for p in x) or any(p < 0 for p in y):
                    continue
                row_strategy = [Fraction(0)] * rows
                col_strategy = [Fraction(0)] * cols
                for i, p in zip(row_support, x):
                    row_strategy[i] = p
                for j, p in zip(col_support, y):
                    col_strategy[j] = p
                if verify_equilibrium(values, col_strategy, row_strategy, v).ok:
                    logging.debug("support enumeration: equilibrium on supports {0} x {1}".format(row_support, col_support))
                    return MixedSolution(v, tuple(row_strategy), tuple(col_strategy))
    raise VerificationError("support enumeration found no equilibrium")


@dataclass(frozen=True)
class SweepRow(object):
    k: Fraction
    value: Fraction
    hider: tuple
    hider_ranges: object
    searcher: dict


def _sweep_entry(argument):
    spec, max_subsets_cap = argument
    matrix, solution = solve_game(spec, max_subsets_cap)
    ranges = hider_uniqueness(matrix, solution.value)
    searcher = {row: p for row, p in zip(matrix.rows, solution.row_strategy) if p != 0}
    return SweepRow(spec.k, solution.value, solution.col_strategy, ranges, searcher)


def check_monotone(rows):
    """ Raises VerificationError unless the values never decrease with k """
    for previous, current in zip(rows, rows[1:]):
        if current.value < previous.value:
            raise VerificationError("value decreased from {0} at k={1} to {2} at k={3}".format(previous.value, previous.k, current.value, current.k))


def sweep_k(spec, k_values, workers=None, max_subsets_cap=None):
    """ Solves G(n,t,p,k) for every k of k_values

        Entries are evaluated independently (possibly in parallel) and
        returned in the order of k_values.

        Raises: VerificationError if the value ever decreases in k

        Returns:
        --------
        list of SweepRow (value, LP hider, hider ranges over all optimal
        hiding distributions, LP searcher support)
    """
    k_values = sorted(to_rational(k, "k") for k in k_values)
    arguments = [(spec.with_budget(k), max_subsets_cap) for k in k_values]
    rows = process_sweep(_sweep_entry, arguments, workers, label="k-sweep entry")
    check_monotone(rows)
    return rows


@dataclass(frozen=True)
class TwoTypeSweepRow(object):
    k: int
    value: Fraction
    type_one_mass: Fraction
    closed_form_value: object


def _two_type_entry(argument):
    from .closed_forms import expand_two_type, solve_two_type

    two_type, max_subsets_cap = argument
    spec = expand_two_type(two_type)
    _, solution = solve_game(spec, max_subsets_cap)
    type_one_mass = sum(solution.col_strategy[:two_type.a], Fraction(0))
    closed_form_value = None
    if two_type.closed_form_applies:
        closed_form_value = solve_two_type(two_type).value
        if closed_form_value != solution.value:
            raise VerificationError("two-type closed form {0} differs from LP value {1} at k={2:d}".format(closed_form_value, solution.value, two_type.k))
    return TwoTypeSweepRow(two_type.k, solution.value, type_one_mass, closed_form_value)


def sweep_two_type(two_type, k_values, workers=None, max_subsets_cap=None):
    """ Solves the expanded two-type game for every k. Where the closed
        form applies its value is checked and reported alongside.
        The hider's total mass on type 1 locations shows where (if ever)
        the hider moves to a single type as k grows.
    """
    arguments = [(two_type.with_budget(k), max_subsets_cap) for k in sorted(k_values)]
    rows = process_sweep(_two_type_entry, arguments, workers, label="two-type sweep entry")
    check_monotone(rows)
    return rows
