import json
import random
from fractions import Fraction

import pytest

from searchit.game import GameSpec


@pytest.fixture
def unequal_times():
    """ t = (5,3,4,7), p = (.1,.2,.15,.4), k = 7 """
    return GameSpec((5, 3, 4, 7), ("0.1", "0.2", "0.15", "0.4"), 7)


@pytest.fixture
def arithmetic_family():
    """ t_i = i, p = (.5,.4,.3,.2,.1); call with the budget k """
    def build(k):
        return GameSpec((1, 2, 3, 4, 5), ("1/2", "2/5", "3/10", "1/5", "1/10"), k)
    return build


@pytest.fixture
def rng():
    return random.Random(20261018)


def random_game(rng, n_max=5, t_max=4):
    """ a random small game with rational data """
    n = rng.randint(1, n_max)
    t = tuple(rng.randint(1, t_max) for _ in range(n))
    p = tuple(Fraction(rng.randint(1, 10), 10) for _ in range(n))
    k = rng.randint(0, sum(t))
    return GameSpec(t, p, k)


@pytest.fixture
def game_file(tmp_path):
    """ writes a game file and returns its path """
    def write(data, name="game.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data) if not isinstance(data, str) else data, encoding="utf-8")
        return str(path)
    return write
