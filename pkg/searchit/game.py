""" The search and pursuit game G(n,t,p,k)

    A hider picks one of n locations. The searcher inspects any set of
    locations whose total search time fits in the budget k. If the hider
    is found at location i, capture happens with probability p_i. The
    payoff to the (maximizing) searcher is the capture probability.

    Locations are numbered 1..n everywhere outside this module's internals.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy

from .lp import solve_zero_sum
from .util import EnumerationLimitError, GameSpecError, max_subsets, set_label, to_rational


@dataclass(frozen=True)
class GameSpec(object):
    """ The game G(n,t,p,k)

        Arguments:
        ----------
        t -- search times, one per location, all positive
        p -- capture probabilities, one per location, in (0, 1]
        k -- total search time available to the searcher
    """
    t: tuple
    p: tuple
    k: Fraction

    def __post_init__(self):
        t = tuple(to_rational(v, "t") for v in self.t)
        p = tuple(to_rational(v, "p") for v in self.p)
        k = to_rational(self.k, "k")
        if len(t) == 0:
            raise GameSpecError("a game needs at least one location")
        if len(t) != len(p):
            raise GameSpecError("got {0:d} search times but {1:d} capture probabilities".format(len(t), len(p)))
        for i, (ti, pi) in enumerate(zip(t, p), start=1):
            if ti <= 0:
                raise GameSpecError("search time t_{0:d} = {1} must be positive".format(i, ti))
            if not 0 < pi <= 1:
                raise GameSpecError("capture probability p_{0:d} = {1} must lie in (0, 1]".format(i, pi))
        if k < 0:
            raise GameSpecError("budget k = {0} must be nonnegative".format(k))
        object.__setattr__(self, 't', t)
        object.__setattr__(self, 'p', p)
        object.__setattr__(self, 'k', k)

    @property
    def n(self):
        return len(self.t)

    def time_of(self, members):
        return sum((self.t[i - 1] for i in members), Fraction(0))

    def with_budget(self, k):
        return GameSpec(self.t, self.p, k)


@dataclass(frozen=True, order=True)
class SearchSet(object):
    """ A set of locations (sorted, 1-based) and its total search time T(A) """
    members: tuple
    total_time: Fraction

    @classmethod
    def of(cls, spec, members):
        members = tuple(sorted(set(members)))
        for i in members:
            if not 1 <= i <= spec.n:
                raise GameSpecError("location {0} is not one of 1..{1:d}".format(i, spec.n))
        return cls(members, spec.time_of(members))

    def __contains__(self, location):
        return location in self.members

    def __len__(self):
        return len(self.members)

    def is_feasible(self, k):
        return self.total_time <= k

    def label(self, names=None):
        return set_label(self.members, names)


@dataclass(frozen=True)
class HiderStrategy(object):
    """ A hiding distribution h over the n locations """
    h: tuple

    def __post_init__(self):
        h = tuple(to_rational(v, "h") for v in self.h)
        if any(v < 0 for v in h):
            raise GameSpecError("hiding probabilities must be nonnegative: {0}".format(h))
        if sum(h) != 1:
            raise GameSpecError("hiding probabilities sum to {0}, not 1".format(sum(h)))
        object.__setattr__(self, 'h', h)

    @classmethod
    def point_mass(cls, n, location):
        return cls(tuple(Fraction(int(i == location)) for i in range(1, n + 1)))

    def __getitem__(self, location):
        return self.h[location - 1]

    def __len__(self):
        return len(self.h)


class PayoffMatrix(object):
    """ The matrix of P(A,i) over a list of search sets (rows) and
        all locations (columns).

        Entries are Fractions stored in a numpy object array so that
        payoffs against mixed strategies are exact dot products.
    """
    def __init__(self, spec, rows):
        self.spec = spec
        self.rows = list(rows)
        self.cols = tuple(range(1, spec.n + 1))
        values = numpy.zeros((len(self.rows), spec.n), dtype=object)
        for r, search_set in enumerate(self.rows):
            for c in range(spec.n):
                values[r, c] = spec.p[c] if (c + 1) in search_set else Fraction(0)
        self.values = values

    @property
    def shape(self):
        return self.values.shape

    def entry(self, search_set, location):
        return self.values[self.rows.index(search_set), location - 1]

    def row_payoffs(self, col_strategy):
        """ payoff of every row against a hider distribution """
        return self.values.dot(numpy.array(list(col_strategy), dtype=object))

    def column_payoffs(self, row_strategy):
        """ payoff of every column against a searcher distribution """
        return numpy.array(list(row_strategy), dtype=object).dot(self.values)

    def __repr__(self):
        return "PayoffMatrix({0:d}x{1:d})".format(*self.shape)


class KnapsackInstance(object):
    """ The searcher's best response problem against a known hider:
        put locations (weight t_i, benefit b_i = h_i p_i) into a
        knapsack of capacity k.
    """
    def __init__(self, weights, benefits, capacity):
        self.weights = tuple(weights)
        self.benefits = tuple(benefits)
        self.capacity = capacity

    @classmethod
    def from_hider(cls, spec, hider):
        if len(hider) != spec.n:
            raise GameSpecError("hider has {0:d} probabilities for {1:d} locations".format(len(hider), spec.n))
        benefits = tuple(hi * pi for hi, pi in zip(hider.h, spec.p))
        return cls(spec.t, benefits, spec.k)

    def benefit(self, search_set):
        return sum((self.benefits[i - 1] for i in search_set.members), Fraction(0))

    def best(self, candidates):
        """ Returns the candidate with the largest benefit. Ties go to the
            lexicographically smallest member list.
        """
        best_set, best_value = None, None
        for search_set in sorted(candidates):
            value = self.benefit(search_set)
            if best_value is None or value > best_value:
                best_set, best_value = search_set, value
        return best_set, best_value


def _extend(spec, prefix, start, used):
    # preorder over increasing indices gives lexicographic order of member tuples
    yield prefix, used
    for i in range(start, spec.n):
        total = used + spec.t[i]
        if total <= spec.k:
            yield from _extend(spec, prefix + (i + 1,), i + 1, total)


def feasible_sets(spec, max_subsets_cap=None):
    """ Every search set A with T(A) <= k, the empty set included, in
        lexicographic order of the sorted members.

        Raises: EnumerationLimitError if there are more sets than the cap

        Arguments:
        ----------
        spec -- the game
        max_subsets_cap -- enumeration cap (see util.max_subsets)
    """
    cap = max_subsets(max_subsets_cap)
    sets = []
    for members, used in _extend(spec, (), 0, Fraction(0)):
        sets.append(SearchSet(members, used))
        if len(sets) > cap:
            raise EnumerationLimitError("instance too large for exhaustive enumeration: more than {0:d} feasible sets".format(cap))
    logging.debug("{0:d} feasible search sets for n={1:d}, k={2}".format(len(sets), spec.n, spec.k))
    return sets


def is_maximal(spec, search_set):
    """ True if no location outside search_set still fits in the budget """
    slack = spec.k - search_set.total_time
    return all(spec.t[i - 1] > slack for i in range(1, spec.n + 1) if i not in search_set)


def maximal_feasible_sets(spec, max_subsets_cap=None):
    """ The feasible sets that are maximal under inclusion. Every other
        feasible set is weakly dominated by one of these. The empty set
        is returned only when no single location fits in the budget.
    """
    rows = [s for s in feasible_sets(spec, max_subsets_cap) if is_maximal(spec, s)]
    logging.debug("{0:d} undominated search sets".format(len(rows)))
    return rows


def build_matrix(spec, rows):
    """ Builds the payoff matrix P(A,i) for the given rows (order kept)

        Raises: GameSpecError if a row is infeasible or does not belong to spec
    """
    for search_set in rows:
        if search_set.total_time != spec.time_of(search_set.members):
            raise GameSpecError("search set {0:s} has inconsistent total time".format(search_set.label()))
        if not search_set.is_feasible(spec.k):
            raise GameSpecError("search set {0:s} needs time {1} > k = {2}".format(search_set.label(), search_set.total_time, spec.k))
        for i in search_set.members:
            if not 1 <= i <= spec.n:
                raise GameSpecError("search set {0:s} names an unknown location".format(search_set.label()))
    return PayoffMatrix(spec, rows)


def best_response_value(spec, hider, max_subsets_cap=None):
    """ The searcher's best reply to a known hiding distribution

        Benefits h_i p_i are nonnegative so some maximal set attains the
        maximum; only maximal sets are examined.

        Returns:
        --------
        (search set, capture probability)
    """
    if not isinstance(hider, HiderStrategy):
        hider = HiderStrategy(tuple(hider))
    knapsack = KnapsackInstance.from_hider(spec, hider)
    return knapsack.best(maximal_feasible_sets(spec, max_subsets_cap))


def searcher_marginals(matrix, row_strategy):
    """ Probability that each location is inspected under a searcher mix """
    marginals = [Fraction(0)] * matrix.spec.n
    for search_set, probability in zip(matrix.rows, row_strategy):
        for i in search_set.members:
            marginals[i - 1] += probability
    return tuple(marginals)


def solve_game(spec, max_subsets_cap=None):
    """ The general pipeline: undominated sets, payoff matrix, exact LP.

        Returns:
        --------
        (PayoffMatrix, MixedSolution)
    """
    matrix = build_matrix(spec, maximal_feasible_sets(spec, max_subsets_cap))
    return matrix, solve_zero_sum(matrix)
