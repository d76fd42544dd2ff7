""" The two period learning game on two locations

    Each location independently has escape probability l or h (prior 1/2
    each, l <= h). Capture at a location with escape probability x happens
    with probability 1 - x. In period one both players pick a location at
    random; if the hider is found and escapes, both know where. In period
    two each player either returns to the same location (rs) or switches
    (rd). All payoffs are unconditional probabilities that the searcher
    wins, so the factor 1/2 for meeting in period one is included.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from .lp import solve_diagonal, solve_zero_sum
from .util import GameSpecError, VerificationError, to_rational

HALF = Fraction(1, 2)
STRATEGIES = ('rs', 'rd')


@dataclass(frozen=True)
class LearningSpec(object):
    l: Fraction
    h: Fraction
    prior: Fraction = HALF

    def __post_init__(self):
        l = to_rational(self.l, "low escape probability")
        h = to_rational(self.h, "high escape probability")
        prior = to_rational(self.prior, "prior")
        if not 0 <= l <= h <= 1:
            raise GameSpecError("escape probabilities must satisfy 0 <= low <= high <= 1, got {0} and {1}".format(l, h))
        if prior != HALF:
            raise GameSpecError("only the prior 1/2 is supported, got {0}".format(prior))
        object.__setattr__(self, 'l', l)
        object.__setattr__(self, 'h', h)
        object.__setattr__(self, 'prior', prior)


def escape_payoff(x):
    """ P_x(rs,rs): both return to the location (escape probability x) they met at """
    return HALF * ((1 - x) + x * (1 - x))


def switch_payoff(first, second):
    """ both move from a location with escape probability `first` to one with `second` """
    return HALF * ((1 - first) + first * (1 - second))


@dataclass(frozen=True)
class StatePayoffs(object):
    same_low: Fraction
    same_high: Fraction
    rd_hh: Fraction
    rd_ll: Fraction
    rd_lh: Fraction
    rd_hl: Fraction

    @property
    def rs_rs(self):
        return (self.same_low + self.same_high) / 2

    @property
    def rd_rd(self):
        return (self.rd_hh + self.rd_ll + self.rd_lh + self.rd_hl) / 4


def per_state_payoffs(spec):
    l, h = spec.l, spec.h
    return StatePayoffs(escape_payoff(l), escape_payoff(h),
                        switch_payoff(h, h), switch_payoff(l, l),
                        switch_payoff(l, h), switch_payoff(h, l))


def build_learning_matrix(spec):
    """ The 2x2 normal form, rows searcher (rs, rd), columns hider (rs, rd) """
    l, h = spec.l, spec.h
    same = (2 - h * h - l * l) / 4
    different = (4 - (h + l) ** 2) / 8
    mixed = (2 - (h + l)) / 4
    return ((same, mixed), (mixed, different))


def diagonal_form(spec):
    """ (a, b) with 8A - (4 - 2h - 2l) J = diag(a, b) """
    l, h = spec.l, spec.h
    a = -2 * h * h + 2 * h - 2 * l * l + 2 * l
    b = 2 * h + 2 * l - (h + l) ** 2
    return a, b


def explicit_value(spec):
    """ V(A) written out in l and h; needs both diagonal entries nonzero """
    l, h = spec.l, spec.h
    return HALF - l / 4 - h / 4 - 1 / (8 * (1 / (2 * h * h - 2 * h + 2 * l * l - 2 * l) - 1 / (2 * h + 2 * l - (h + l) ** 2)))


@dataclass(frozen=True)
class LearningSolution(object):
    """ value_Y is None when a diagonal entry vanishes and the game was
        solved by LP only (shortcut False).
    """
    matrix_A: tuple
    diag_Y: tuple
    value_A: Fraction
    value_Y: object
    prob_rs: Fraction
    prob_rd: Fraction
    hider_rs: Fraction
    shortcut: bool


def solve_learning(spec):
    """ Solves the learning game through the diagonal reduction

        8A - (4-2h-2l) J = Y = diag(a, b), so A and Y share optimal
        strategies, V(Y) = 1/(1/a + 1/b) and V(A) = (V(Y) + 4 - 2h - 2l)/8.
        The result is checked against the LP solution of A and, when it is
        defined, against the explicit formula for V(A).

        Raises: VerificationError if the three values disagree
    """
    matrix = build_learning_matrix(spec)
    a, b = diagonal_form(spec)
    lp = solve_zero_sum(matrix)
    if a > 0 and b > 0:
        diagonal = solve_diagonal((a, b))
        value_A = (diagonal.value + 4 - 2 * spec.h - 2 * spec.l) / 8
        explicit = explicit_value(spec)
        if not value_A == lp.value == explicit:
            raise VerificationError("learning game value mismatch: shortcut {0}, LP {1}, explicit {2}".format(value_A, lp.value, explicit))
        prob_rs, prob_rd = diagonal.row_strategy
        return LearningSolution(matrix, (a, b), value_A, diagonal.value, prob_rs, prob_rd, prob_rs, True)

    logging.info("diagonal entry vanishes for l={0}, h={1}; solving the 2x2 game directly".format(spec.l, spec.h))
    prob_rs, prob_rd = lp.row_strategy
    return LearningSolution(matrix, (a, b), lp.value, None, prob_rs, prob_rd, lp.col_strategy[0], False)


@dataclass(frozen=True)
class PosteriorResult(object):
    prob_high_given_escape: Fraction
    expected_escape_next: Fraction
    implied_capture_x: Fraction
    q_low_capture: Fraction


def posterior_after_escape(spec, solution):
    """ Beliefs about the location of a first period escape

        prob_high_given_escape is Bayes' rule; implied_capture_x is the
        capture probability x that makes the equilibrium mix optimal in
        the diagonal game diag(x, 1 - (l+h)/2); q_low_capture is the weight
        on the low capture probability 1-h that reproduces x.

        Raises: GameSpecError if l + h = 0 (nobody ever escapes)
    """
    l, h, prior = spec.l, spec.h, spec.prior
    if l + h == 0:
        raise GameSpecError("no escape is possible when both escape probabilities are 0")
    prob_high = prior * h / (prior * h + (1 - prior) * l)
    expected_escape = (l * l + h * h) / (l + h)
    other_location = 1 - (l + h) / 2

    if solution.shortcut:
        implied_x = solution.prob_rd * other_location / solution.prob_rs
    else:
        # the equilibrium mix is not pinned down; use the Bayes expectation it equals
        implied_x = 1 - expected_escape
    if h == l:
        q = prob_high
    else:
        q = ((1 - l) - implied_x) / (h - l)

    if implied_x != 1 - expected_escape or q != prob_high:
        raise VerificationError("posterior mismatch for l={0}, h={1}: x={2}, q={3}".format(l, h, implied_x, q))
    return PosteriorResult(prob_high, expected_escape, implied_x, q)


def returns_more_often(spec):
    """ True when both players return to the escape location with
        probability above 1/2; decided by the sign of a - b = -(h-l)^2.
    """
    a, b = diagonal_form(spec)
    difference = a - b
    if difference != -(spec.h - spec.l) ** 2:
        raise VerificationError("a - b = {0} differs from -(h-l)^2".format(difference))
    return difference < 0
