""" Closed form solutions of special families of G(n,t,p,k)

    constant times   -- t_i = 1, k <= n
    arithmetic times -- t_i = i, k = n, p decreasing
    threshold        -- when is the value the smallest possible, p_n
    two types        -- a locations (time 1, capture p), b locations (time tau, capture q)

    Every solution carries full strategies for both players so that it can
    be certified on the explicit game.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from .game import GameSpec, HiderStrategy, SearchSet, solve_game
from .oracle import certify_closed_form
from .util import GameSpecError, to_rational

INTERIOR = 'interior'
CORNER = 'corner'


def constant_times_spec(p, k):
    return GameSpec(tuple([1] * len(p)), tuple(p), k)


def arithmetic_times_spec(p):
    n = len(p)
    return GameSpec(tuple(range(1, n + 1)), tuple(p), n)


def systematic_sets(spec, marginals, size):
    """ A distribution over sets of exactly `size` locations in which
        location i is included with probability marginals[i].

        The marginals (each in [0, 1], summing to size) are laid end to end
        on [0, size); a uniform offset u in [0, 1) picks the locations hit
        by u, u+1, ..., u+size-1. The offsets where the chosen set changes
        split [0, 1) into finitely many intervals, each one a set with
        probability equal to its length.

        Returns:
        --------
        dict SearchSet -> probability
    """
    cumulative = [Fraction(0)]
    for value in marginals:
        cumulative.append(cumulative[-1] + value)
    if cumulative[-1] != size or any(not 0 <= m <= 1 for m in marginals):
        raise GameSpecError("marginals must lie in [0,1] and sum to {0}".format(size))

    cuts = sorted(set([Fraction(0), Fraction(1)] + [c - math.floor(c) for c in cumulative]))
    sets = {}
    for low, high in zip(cuts, cuts[1:]):
        u = (low + high) / 2
        members = []
        for r in range(size):
            point = u + r
            for i in range(len(marginals)):
                if cumulative[i] <= point < cumulative[i + 1]:
                    members.append(i + 1)
                    break
        search_set = SearchSet.of(spec, members)
        sets[search_set] = sets.get(search_set, Fraction(0)) + (high - low)
    return sets


@dataclass(frozen=True)
class ConstantTimeSolution(object):
    lambda_sum: Fraction
    regime: str
    h: HiderStrategy
    value: Fraction
    searcher: dict
    spec: GameSpec


def solve_constant_times(p, k):
    """ The game with all search times equal to 1 and k <= n

        Lambda = sum(1/p_i). If k/Lambda <= min p the hider equalizes,
        h_i = (1/p_i)/Lambda, and the value is k/Lambda. Otherwise the hider
        sits at a location with the smallest capture probability and the
        value is that probability.

        p need not be sorted; the answer is reported in the given order.
    """
    p = tuple(to_rational(v, "p") for v in p)
    k = to_rational(k, "k")
    n = len(p)
    if k.denominator != 1 or k < 1:
        raise GameSpecError("k must be a positive integer, got {0}".format(k))
    if k > n:
        raise GameSpecError("k = {0} exceeds n = {1:d}: every location is searched, use the general solver".format(k, n))
    spec = constant_times_spec(p, k)

    lambda_sum = sum(1 / pi for pi in p)
    p_min = min(p)
    weakest = p.index(p_min) + 1
    size = int(k)
    if k / lambda_sum <= p_min:
        regime = INTERIOR
        value = k / lambda_sum
        h = HiderStrategy(tuple((1 / pi) / lambda_sum for pi in p))
        marginals = [value / pi for pi in p]
    else:
        regime = CORNER
        value = p_min
        h = HiderStrategy.point_mass(n, weakest)
        marginals = [p_min / pi for pi in p]
        remaining = k - sum(marginals)
        for i in range(n):
            extra = min(1 - marginals[i], remaining)
            marginals[i] += extra
            remaining -= extra
    searcher = systematic_sets(spec, marginals, size)
    return ConstantTimeSolution(lambda_sum, regime, h, value, searcher, spec)


@dataclass(frozen=True)
class ArithmeticTimesSolution(object):
    """ verified is True when the constructed strategies pass the
        equilibrium certificate on the explicit game; oracle_value is the
        LP value, filled in only when they do not.
    """
    m: int
    S: Fraction
    hider: HiderStrategy
    searcher_pairs: tuple
    value: Fraction
    even: bool
    strictly_decreasing: bool
    verified: bool
    oracle_value: object
    spec: GameSpec

    @property
    def searcher(self):
        return dict(self.searcher_pairs)


def solve_arithmetic_times(p):
    """ The game with t_i = i, p decreasing and k = n

        For n = 2m+1: S = sum of 1/p_j over j = m+1..n, value 1/S, the hider
        picks j >= m+1 with probability 1/(p_j S) and the searcher picks the
        pair {j, n-j} ({n} for j = n) with the same probability.

        For n = 2m the same construction over j = m+1..2m is returned, but
        it leaves location m uncovered; it is reported with verified=False
        and the LP value whenever the certificate fails.
    """
    p = tuple(to_rational(v, "p") for v in p)
    n = len(p)
    if n == 0:
        raise GameSpecError("a game needs at least one location")
    spec = arithmetic_times_spec(p)
    even = n % 2 == 0
    m = n // 2
    strictly_decreasing = all(a > b for a, b in zip(p, p[1:]))
    if not all(a >= b for a, b in zip(p, p[1:])):
        logging.warning("capture probabilities are not decreasing; the construction may not be optimal")

    support = range(m + 1, n + 1)
    S = sum(1 / p[j - 1] for j in support)
    value = 1 / S
    h = [Fraction(0)] * n
    pairs = []
    for j in support:
        probability = 1 / (p[j - 1] * S)
        h[j - 1] = probability
        members = [j] if j == n else [j, n - j]
        pairs.append((SearchSet.of(spec, members), probability))
    hider = HiderStrategy(tuple(h))

    certificate = certify_closed_form(spec, hider.h, dict(pairs), value)
    oracle_value = None
    if not certificate.ok:
        _, solution = solve_game(spec)
        oracle_value = solution.value
        logging.warning("pairing construction for n={0:d} is not an equilibrium: value {1} vs LP value {2}".format(n, value, oracle_value))
    return ArithmeticTimesSolution(m, S, hider, tuple(sorted(pairs)), value, even,
                                   strictly_decreasing, certificate.ok, oracle_value, spec)


@dataclass(frozen=True)
class ThresholdCheckResult(object):
    """ holds is True when the value of the game is p_n. reduced_value is
        None when no locations remain (it counts as +infinity).
    """
    holds: bool
    reduced_value: object
    p_n: Fraction

    @property
    def value(self):
        """ p_n when the threshold holds; unknown (None) otherwise """
        return self.p_n if self.holds else None


def check_pn_threshold(spec, max_subsets_cap=None):
    """ Decides whether G(n,t,p,k) with t_i = i has value p_n by solving the
        game with location n removed and budget k - n.
    """
    if any(t != i for i, t in enumerate(spec.t, start=1)):
        raise GameSpecError("the threshold test needs t_i = i")
    if spec.k < spec.n:
        raise GameSpecError("k = {0} < n = {1:d}: hiding at n keeps the value below p_n".format(spec.k, spec.n))
    p_n = spec.p[-1]
    if spec.n == 1:
        return ThresholdCheckResult(True, None, p_n)
    reduced = GameSpec(spec.t[:-1], spec.p[:-1], spec.k - spec.n)
    _, solution = solve_game(reduced, max_subsets_cap)
    return ThresholdCheckResult(solution.value >= p_n, solution.value, p_n)


@dataclass(frozen=True)
class TwoTypeSpec(object):
    """ a locations of type 1 (time 1, capture p), b locations of type 2
        (time tau, capture q), integer budget k
    """
    a: int
    b: int
    tau: int
    p: Fraction
    q: Fraction
    k: int

    def __post_init__(self):
        for name in ('a', 'b', 'tau', 'k'):
            value = to_rational(getattr(self, name), name)
            if value.denominator != 1:
                raise GameSpecError("{0:s} must be an integer, got {1}".format(name, value))
            minimum = 0 if name == 'k' else 1
            if value < minimum:
                raise GameSpecError("{0:s} must be at least {1:d}, got {2}".format(name, minimum, value))
            object.__setattr__(self, name, int(value))
        for name in ('p', 'q'):
            value = to_rational(getattr(self, name), name)
            if not 0 < value <= 1:
                raise GameSpecError("{0:s} = {1} must lie in (0, 1]".format(name, value))
            object.__setattr__(self, name, value)

    @property
    def in_regime(self):
        """ both types alone can absorb the whole budget """
        return self.a >= self.k and self.b * self.tau >= self.k

    @property
    def j_hat(self):
        """ mean number of type 2 inspections of an optimal searcher """
        return self.p * self.b * self.k / (self.a * self.q + self.b * self.p * self.tau)

    @property
    def closed_form_applies(self):
        # j_hat < k/tau, but it may still exceed floor(k/tau) when tau does not divide k
        return self.in_regime and self.j_hat <= self.k // self.tau

    def with_budget(self, k):
        return TwoTypeSpec(self.a, self.b, self.tau, self.p, self.q, k)


@dataclass(frozen=True)
class TwoTypeSolution(object):
    y_bar: Fraction
    j_hat: Fraction
    m: int
    value: Fraction
    searcher_mix: dict

    def hider(self, spec):
        """ hiding distribution over the expanded game's locations """
        return tuple([self.y_bar / spec.a] * spec.a + [(1 - self.y_bar) / spec.b] * spec.b)


def expand_two_type(spec):
    return GameSpec(tuple([1] * spec.a + [spec.tau] * spec.b),
                    tuple([spec.p] * spec.a + [spec.q] * spec.b),
                    spec.k)


def two_type_payoff(spec, j, y):
    """ capture probability when the searcher inspects j type 2 locations
        (and k - tau j type 1 locations) and the hider is at a random
        type 1 location with probability y
    """
    y = to_rational(y, "y")
    return y * spec.p * (spec.k - spec.tau * j) / spec.a + (1 - y) * spec.q * j / spec.b


def solve_two_type(spec):
    """ Two location types inside the regime a >= k, b tau >= k

        The hider puts y_bar = aq/(aq+bp tau) on type 1, which makes every
        searcher plan pay pqk/(aq+bp tau). Any searcher mix over the number
        j of type 2 inspections with mean j_hat = pbk/(bp tau+aq) is
        optimal; the one returned is supported on floor and ceil of j_hat.

        Raises: GameSpecError outside the regime, or when j_hat exceeds
                m = floor(k/tau) so that no mix over 0..m has mean j_hat
    """
    if not spec.in_regime:
        raise GameSpecError("outside the two-type regime (a >= k and b*tau >= k); use general solver")
    if not spec.closed_form_applies:
        raise GameSpecError("mean type 2 count {0} exceeds floor(k/tau) = {1:d}; use general solver".format(spec.j_hat, spec.k // spec.tau))
    a, b, tau, p, q, k = spec.a, spec.b, spec.tau, spec.p, spec.q, spec.k
    denominator = a * q + b * p * tau
    y_bar = a * q / denominator
    j_hat = spec.j_hat
    value = p * q * k / denominator
    low = math.floor(j_hat)
    if j_hat == low:
        mix = {low: Fraction(1)}
    else:
        mix = {low: 1 - (j_hat - low), low + 1: j_hat - low}
    return TwoTypeSolution(y_bar, j_hat, k // tau, value, mix)


def _windows(first, count, size):
    """ the `count` cyclic windows of `size` consecutive locations among
        first, first+1, ..., first+count-1
    """
    windows = set()
    for start in range(count):
        windows.add(tuple(sorted(first + (start + r) % count for r in range(size))))
    return sorted(windows)


def two_type_searcher_sets(spec, solution):
    """ Realizes the searcher mix over j on the expanded game: j type 2 and
        k - tau j type 1 locations, each chosen as a uniformly random cyclic
        window, so every location of a type is equally likely inspected.
    """
    expanded = expand_two_type(spec)
    sets = {}
    for j, probability in solution.searcher_mix.items():
        ones = _windows(1, spec.a, spec.k - spec.tau * j)
        twos = _windows(spec.a + 1, spec.b, j)
        share = probability / (len(ones) * len(twos))
        for first in ones:
            for second in twos:
                search_set = SearchSet.of(expanded, first + second)
                sets[search_set] = sets.get(search_set, Fraction(0)) + share
    return sets
