import logging
import math

from .closed_forms import (arithmetic_times_spec, expand_two_type, solve_arithmetic_times,
                           solve_constant_times, solve_two_type, two_type_searcher_sets)
from .game import SearchSet, searcher_marginals, solve_game
from .learning import (STRATEGIES, build_learning_matrix, per_state_payoffs,
                       posterior_after_escape, returns_more_often, solve_learning)
from .oracle import certify_closed_form, verify_equilibrium
from .solver import ResultDocument, Solver, document_field
from .util import GameFileError, GameSpecError, VerificationError, to_rational


def _cross_check(mode, closed_value, lp_value):
    if closed_value != lp_value:
        raise VerificationError("{0:s}: closed form value {1} differs from LP value {2}".format(mode, closed_value, lp_value))


class GeneralSolver(Solver):
    """ maximal sets -> payoff matrix -> exact LP, for any game """
    mode = 'general'

    def lp_document(self, spec, details=None):
        matrix, solution = solve_game(spec, self.max_subsets)
        certificate = verify_equilibrium(matrix, solution.col_strategy, solution.row_strategy, solution.value)
        if not certificate.ok:
            raise VerificationError("LP solution failed its own certificate")
        details = dict(details or {})
        details['undominated_sets'] = len(matrix.rows)
        details['inspection_probability'] = searcher_marginals(matrix, solution.row_strategy)
        searcher_sets = dict(zip(matrix.rows, solution.row_strategy))
        return self.game_document(spec, solution.value, solution.col_strategy, searcher_sets,
                                  'lp', certificate, details), solution

    def _solve(self):
        document, _ = self.lp_document(self.get_game())
        return document


class ConstantTimesSolver(GeneralSolver):
    """ equal search times t: the searcher inspects floor(k/t) locations """
    mode = 'constant-times'

    def _solve(self):
        spec = self.get_game()
        if len(set(spec.t)) != 1:
            raise GameSpecError("constant-times mode needs equal search times, got {0}".format([str(t) for t in spec.t]))
        size = math.floor(spec.k / spec.t[0])
        if not 1 <= size <= spec.n:
            raise GameSpecError("constant-times mode needs t <= k <= n t; use general mode")
        closed = solve_constant_times(spec.p, size)
        searcher_sets = dict((SearchSet.of(spec, s.members), p) for s, p in closed.searcher.items())

        _, solution = solve_game(spec, self.max_subsets)
        _cross_check(self.mode, closed.value, solution.value)
        certificate = certify_closed_form(spec, closed.h.h, searcher_sets, closed.value)
        if not certificate.ok:
            raise VerificationError("constant-times strategies failed the equilibrium certificate")
        details = {'lambda_sum': closed.lambda_sum, 'regime': closed.regime, 'locations_per_search': size}
        return self.game_document(spec, closed.value, closed.h.h, searcher_sets, 'both', certificate, details)


class ArithmeticTimesSolver(GeneralSolver):
    """ t_i = i and k = n; falls back to the LP when the pairing
        construction does not certify (even n)
    """
    mode = 'arithmetic-times'

    def _solve(self):
        spec = self.get_game()
        expected = arithmetic_times_spec(spec.p)
        if spec.t != expected.t or spec.k != expected.k:
            raise GameSpecError("arithmetic-times mode needs t_i = i and k = n")
        closed = solve_arithmetic_times(spec.p)
        details = {'m': closed.m, 'S': closed.S, 'even': closed.even,
                   'strictly_decreasing': closed.strictly_decreasing, 'verified': closed.verified}
        if closed.verified:
            _, solution = solve_game(spec, self.max_subsets)
            _cross_check(self.mode, closed.value, solution.value)
            certificate = certify_closed_form(spec, closed.hider.h, closed.searcher, closed.value)
            return self.game_document(spec, closed.value, closed.hider.h, closed.searcher, 'both', certificate, details)

        details['closed_form_value'] = closed.value
        details['discrepancy'] = "pairing leaves location {0:d} uncovered; LP solution reported".format(closed.m)
        logging.warning("arithmetic-times construction rejected for n={0:d}, reporting the LP solution".format(spec.n))
        document, _ = self.lp_document(spec, details)
        return document


class TwoTypeSolver(Solver):
    """ two location types, solved in closed form and checked on the expanded game """
    mode = 'two-type'

    def _solve(self):
        two_type = self.game_file.two_type
        if two_type is None:
            raise GameFileError("missing field", "two_type")
        closed = solve_two_type(two_type)
        spec = expand_two_type(two_type)
        hider = closed.hider(two_type)
        searcher_sets = two_type_searcher_sets(two_type, closed)

        _, solution = solve_game(spec, self.max_subsets)
        _cross_check(self.mode, closed.value, solution.value)
        certificate = certify_closed_form(spec, hider, searcher_sets, closed.value)
        if not certificate.ok:
            raise VerificationError("two-type strategies failed the equilibrium certificate")
        details = {'y_bar': closed.y_bar, 'j_hat': closed.j_hat, 'm': closed.m,
                   'type_two_inspections': closed.searcher_mix}
        return self.game_document(spec, closed.value, hider, searcher_sets, 'both', certificate, details)


class LearningSolver(Solver):
    """ the two period learning game; strategies are rs and rd """
    mode = 'learning'

    def get_learning(self):
        if self.game_file.learning is None:
            raise GameFileError("missing field", "learning")
        return self.game_file.learning

    def _solve(self):
        spec = self.get_learning()
        solution = solve_learning(spec)
        hider = (solution.hider_rs, 1 - solution.hider_rs)
        searcher = (solution.prob_rs, solution.prob_rd)
        certificate = verify_equilibrium(solution.matrix_A, hider, searcher, solution.value_A)
        payoffs = per_state_payoffs(spec)
        details = {'low': spec.l, 'high': spec.h,
                   'matrix_A': solution.matrix_A, 'diag_Y': solution.diag_Y, 'value_Y': solution.value_Y,
                   'return_payoff_low': payoffs.same_low, 'return_payoff_high': payoffs.same_high,
                   'both_return_more_often': returns_more_often(spec)}
        if spec.l + spec.h > 0:
            posterior = posterior_after_escape(spec, solution)
            details['posterior_high'] = posterior.prob_high_given_escape
            details['expected_escape_next'] = posterior.expected_escape_next
            details['implied_capture_x'] = posterior.implied_capture_x
            details['q_low_capture'] = posterior.q_low_capture
        provenance = 'both' if solution.shortcut else 'lp'
        return ResultDocument(self.mode, solution.value_A,
                              list(zip(STRATEGIES, hider)),
                              [(name, None, p) for name, p in zip(STRATEGIES, searcher)],
                              provenance, certificate, details)

    def verify(self, document):
        matrix = build_learning_matrix(self.get_learning())
        value = to_rational(document_field(document, 'value', 'fraction'), "value")
        hider = [document_field(entry, 'probability') for entry in document_field(document, 'hider')]
        searcher = [document_field(entry, 'probability') for entry in document_field(document, 'searcher')]
        certificate = verify_equilibrium(matrix, hider, searcher, value)
        return certificate, list(STRATEGIES), list(STRATEGIES)


solver_matrix = {
    'general': GeneralSolver,
    'constant-times': ConstantTimesSolver,
    'arithmetic-times': ArithmeticTimesSolver,
    'two-type': TwoTypeSolver,
    'learning': LearningSolver,
    }


def GameSolver(game_file, mode=None, **kwargs):
    """ Convenience wrapper for the solver classes.

        Arguments:
        ----------
        game_file -- parsed GameFile
        mode -- solving mode, defaults to the mode of the game file
        kwargs -- keyword based arguments (see Solver)
    """
    if mode is None:
        mode = game_file.mode
    if mode not in solver_matrix:
        raise GameSpecError("Mode '{0}' not supported. Please use one of {1:s}".format(mode, ", ".join(sorted(solver_matrix))))
    return solver_matrix[mode](game_file, **kwargs)
