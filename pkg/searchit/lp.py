""" Exact solution of zero-sum matrix games

    Every number is a Fraction. Linear programs are solved with a dense
    two-phase simplex tableau using Bland's rule for both the entering and
    the leaving variable, so the pivot sequence (and therefore the optimal
    strategies returned) is fully determined by the input.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy

from .util import GameSpecError, InfeasibleProgramError, SearchItError, VerificationError, as_matrix, to_rational


@dataclass(frozen=True)
class MixedSolution(object):
    """ Value and optimal mixed strategies of a zero-sum game. The row
        player (searcher) maximizes, the column player (hider) minimizes.
    """
    value: Fraction
    row_strategy: tuple
    col_strategy: tuple


@dataclass(frozen=True)
class UniquenessReport(object):
    """ Range of every coordinate over the set of optimal strategies """
    ranges: tuple

    @property
    def unique(self):
        return all(low == high for low, high in self.ranges)

    def point(self):
        """ the optimal strategy if it is unique, otherwise None """
        if not self.unique:
            return None
        return tuple(low for low, _ in self.ranges)


@dataclass(frozen=True)
class LPResult(object):
    x: tuple
    objective: Fraction
    duals: tuple
    pivots: int


class SimplexTableau(object):
    """ Dense tableau for

            maximize    c.x
            subject to  A_ub x <= b_ub
                        A_eq x  = b_eq
                        x >= 0

        Columns are ordered as: structural variables, one slack per
        inequality row, one artificial per row that needs one. The last
        row holds the reduced costs, the last column the right hand sides.
    """
    def __init__(self, c, A_ub=(), b_ub=(), A_eq=(), b_eq=()):
        self.n = len(c)
        self.n_ub = len(A_ub)
        rows = []
        for coefficients, rhs in zip(A_ub, b_ub):
            rows.append((list(coefficients), Fraction(rhs), True))
        for coefficients, rhs in zip(A_eq, b_eq):
            rows.append((list(coefficients), Fraction(rhs), False))

        needs_artificial = [rhs < 0 or not is_ub for _, rhs, is_ub in rows]
        self.n_art = sum(needs_artificial)
        self.m = len(rows)
        width = self.n + self.n_ub + self.n_art
        self.art_start = self.n + self.n_ub

        T = numpy.zeros((self.m + 1, width + 1), dtype=object)
        T[:, :] = Fraction(0)
        self.basis = []
        art = self.art_start
        for r, (coefficients, rhs, is_ub) in enumerate(rows):
            sign = -1 if rhs < 0 else 1
            for j, value in enumerate(coefficients):
                T[r, j] = sign * Fraction(value)
            if is_ub:
                T[r, self.n + r] = Fraction(sign)
            T[r, -1] = sign * rhs
            if needs_artificial[r]:
                T[r, art] = Fraction(1)
                self.basis.append(art)
                art += 1
            else:
                self.basis.append(self.n + r)
        self.T = T
        self.c = [Fraction(v) for v in c]
        self.pivots = 0

    def pivot(self, row, col):
        T = self.T
        T[row, :] = T[row, :] / T[row, col]
        for i in range(T.shape[0]):
            if i != row and T[i, col] != 0:
                T[i, :] = T[i, :] - T[i, col] * T[row, :]
        self.basis[row] = col
        self.pivots += 1

    def _run(self, allowed):
        """ primal simplex with Bland's rule over the allowed columns """
        T = self.T
        objective = T.shape[0] - 1
        while True:
            entering = None
            for j in range(allowed):
                if T[objective, j] < 0:
                    entering = j
                    break
            if entering is None:
                return

            leaving, best = None, None
            for i in range(objective):
                if T[i, entering] > 0:
                    key = (T[i, -1] / T[i, entering], self.basis[i])
                    if best is None or key < best:
                        leaving, best = i, key
            if leaving is None:
                raise SearchItError("linear program is unbounded")
            self.pivot(leaving, entering)

    def _price_out(self):
        T = self.T
        objective = T.shape[0] - 1
        for r, variable in enumerate(self.basis):
            coefficient = T[objective, variable]
            if coefficient != 0:
                T[objective, :] = T[objective, :] - coefficient * T[r, :]

    def _phase_one(self):
        T = self.T
        objective = T.shape[0] - 1
        T[objective, :] = Fraction(0)
        T[objective, self.art_start:-1] = Fraction(1)
        self._price_out()
        self._run(T.shape[1] - 1)
        if T[objective, -1] < 0:
            raise InfeasibleProgramError("linear program has no feasible point")

        # drive zero-level artificials out of the basis, dropping redundant rows
        r = 0
        while r < len(self.basis):
            if self.basis[r] >= self.art_start:
                col = next((j for j in range(self.art_start) if self.T[r, j] != 0), None)
                if col is None:
                    self.T = numpy.delete(self.T, r, axis=0)
                    del self.basis[r]
                    continue
                self.pivot(r, col)
            r += 1

    def solve(self):
        if self.n_art > 0:
            self._phase_one()
        T = self.T
        objective = T.shape[0] - 1
        T[objective, :] = Fraction(0)
        for j, value in enumerate(self.c):
            T[objective, j] = -value
        self._price_out()
        self._run(self.art_start)

        x = [Fraction(0)] * self.n
        for r, variable in enumerate(self.basis):
            if variable < self.n:
                x[variable] = T[r, -1]
        duals = tuple(T[objective, self.n + r] for r in range(self.n_ub))
        logging.debug("simplex finished after {0:d} pivots".format(self.pivots))
        return LPResult(tuple(x), T[objective, -1], duals, self.pivots)


def linear_program(c, A_ub=(), b_ub=(), A_eq=(), b_eq=(), maximize=True):
    """ Solves an LP over x >= 0 exactly

        Raises: InfeasibleProgramError if the constraints have no solution

        Arguments:
        ----------
        c -- objective coefficients
        A_ub, b_ub -- inequality rows A_ub x <= b_ub
        A_eq, b_eq -- equality rows A_eq x = b_eq
        maximize -- direction of optimization

        Returns:
        --------
        LPResult with primal values, objective value and the duals of the
        inequality rows (of the maximization the tableau actually solves)
    """
    sign = 1 if maximize else -1
    tableau = SimplexTableau([sign * Fraction(v) for v in c], A_ub, b_ub, A_eq, b_eq)
    result = tableau.solve()
    if maximize:
        return result
    return LPResult(result.x, -result.objective, result.duals, result.pivots)


def _normalize(values):
    """ affine map onto entries in [1, 2]; invariant under positive scaling """
    low = min(values.flat)
    high = max(values.flat)
    return (values - low) / (high - low) + 1, low, high


def _solve_positive(P):
    """ Solves the game with entries >= 1: maximize sum(y), P y <= 1.

        Returns:
        --------
        (value, row strategy, column strategy)
    """
    rows, cols = P.shape
    result = linear_program([1] * cols, P.tolist(), [1] * rows)
    total = result.objective
    value = 1 / total
    row_strategy = tuple(d / total for d in result.duals)
    col_strategy = tuple(y / total for y in result.x)
    return value, row_strategy, col_strategy


def check_guarantees(values, solution):
    """ True if the searcher mix guarantees at least the value on every
        column and the hider mix holds every row to at most the value.
    """
    rows = numpy.array(list(solution.row_strategy), dtype=object)
    cols = numpy.array(list(solution.col_strategy), dtype=object)
    return all(v >= solution.value for v in rows.dot(values)) and all(v <= solution.value for v in values.dot(cols))


def solve_zero_sum(matrix):
    """ Value and optimal strategies of a zero-sum game

        The LP is written with one constraint per row of the smaller side
        of the matrix: tall matrices are solved through the negated
        transpose.

        Arguments:
        ----------
        matrix -- PayoffMatrix or rectangular sequence of rationals,
                  rows maximize, columns minimize
    """
    values = as_matrix(matrix)
    rows, cols = values.shape
    low = min(values.flat)
    high = max(values.flat)
    if low == high:
        solution = MixedSolution(low, tuple([Fraction(1, rows)] * rows), tuple([Fraction(1, cols)] * cols))
        return solution

    if rows <= cols:
        P, low, high = _normalize(values)
        normalized, row_strategy, col_strategy = _solve_positive(P)
        value = low + (high - low) * (normalized - 1)
    else:
        P, low, high = _normalize(-values.T)
        normalized, col_strategy, row_strategy = _solve_positive(P)
        value = -(low + (high - low) * (normalized - 1))

    solution = MixedSolution(value, row_strategy, col_strategy)
    if not check_guarantees(values, solution):
        raise VerificationError("simplex returned strategies that do not certify value {0}".format(value))
    return solution


def solve_diagonal(d):
    """ Diagonal game with positive entries: value 1/sum(1/d_i), both
        players choose i with probability value/d_i.
    """
    d = [to_rational(v, "diagonal entry") for v in d]
    if len(d) == 0:
        raise GameSpecError("a diagonal game needs at least one entry")
    if any(v <= 0 for v in d):
        raise GameSpecError("diagonal entries must be positive: {0}".format([str(v) for v in d]))
    value = 1 / sum(1 / v for v in d)
    strategy = tuple(value / v for v in d)
    return MixedSolution(value, strategy, strategy)


def hider_uniqueness(matrix, v):
    """ Minimizes and maximizes every hider coordinate over the optimal
        hiding distributions {h : M h <= v, sum(h) = 1, h >= 0}.

        Raises: InfeasibleProgramError if no distribution holds every
                row to v, i.e. v is below the value of the game
    """
    values = as_matrix(matrix)
    rows, cols = values.shape
    v = to_rational(v, "v")
    A_ub = values.tolist()
    b_ub = [v] * rows
    A_eq = [[Fraction(1)] * cols]
    b_eq = [Fraction(1)]

    ranges = []
    for j in range(cols):
        c = [Fraction(int(i == j)) for i in range(cols)]
        low = linear_program(c, A_ub, b_ub, A_eq, b_eq, maximize=False).objective
        high = linear_program(c, A_ub, b_ub, A_eq, b_eq, maximize=True).objective
        ranges.append((low, high))
    return UniquenessReport(tuple(ranges))


def searcher_uniqueness(matrix, v):
    """ Same probe for the searcher: ranges of every row probability over
        the optimal searcher mixes, via the negated transposed game.
    """
    values = as_matrix(matrix)
    return hider_uniqueness(-values.T, -to_rational(v, "v"))
