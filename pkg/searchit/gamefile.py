""" Reading game files

    A game file is a JSON document:

        {
          "locations": [{"time": 5, "capture": ".1"}, ...],
          "budget": 7,
          "mode": "general",
          "two_type": {"a": 4, "b": 2, "tau": 2, "p": "3/10", "q": "1/5", "k": 4},
          "learning": {"low": "1/3", "high": "2/3"}
        }

    Numbers may be JSON numbers or strings "num/den". Decimals are exact:
    0.15 is read as 3/20, never as a binary float. Unknown fields are
    rejected.
"""
import json
from fractions import Fraction

from .closed_forms import TwoTypeSpec, expand_two_type
from .game import GameSpec
from .learning import LearningSpec
from .util import GameFileError, GameSpecError, to_rational

MODES = ('general', 'constant-times', 'arithmetic-times', 'two-type', 'learning')
GAME_FIELDS = ('locations', 'budget', 'mode', 'two_type', 'learning')
LOCATION_FIELDS = ('time', 'capture')
TWO_TYPE_FIELDS = ('a', 'b', 'tau', 'p', 'q', 'k')
LEARNING_FIELDS = ('low', 'high')


class GameFile(object):
    """ A parsed game file. Only the parts the mode needs are filled in. """
    def __init__(self, mode, spec=None, two_type=None, learning=None):
        self.mode = mode
        self.spec = spec
        self.two_type = two_type
        self.learning = learning

    def game(self):
        """ The explicit game G(n,t,p,k) (two-type files are expanded) """
        if self.spec is not None:
            return self.spec
        if self.two_type is not None:
            return expand_two_type(self.two_type)
        raise GameFileError("a {0:s} file describes no search game".format(self.mode), "locations")

    def __repr__(self):
        return "GameFile('{0:s}')".format(self.mode)


def _check_fields(block, allowed, path):
    if not isinstance(block, dict):
        raise GameFileError("expected an object", path)
    for name in block:
        if name not in allowed:
            field = name if path is None else "{0:s}.{1:s}".format(path, name)
            raise GameFileError("unknown field (allowed: {0:s})".format(", ".join(allowed)), field)


def _required(block, name, path):
    if name not in block:
        raise GameFileError("missing field", "{0:s}.{1:s}".format(path, name) if path else name)
    return _number(block[name], "{0:s}.{1:s}".format(path, name) if path else name)


def _number(value, field):
    try:
        return to_rational(value, field)
    except GameSpecError as error:
        raise GameFileError(str(error), field)


def _game_spec(data):
    if 'locations' not in data:
        raise GameFileError("missing field", "locations")
    locations = data['locations']
    if not isinstance(locations, list) or len(locations) == 0:
        raise GameFileError("expected a nonempty list", "locations")
    times, captures = [], []
    for index, location in enumerate(locations):
        path = "locations[{0:d}]".format(index)
        _check_fields(location, LOCATION_FIELDS, path)
        times.append(_required(location, 'time', path))
        captures.append(_required(location, 'capture', path))
    budget = _required(data, 'budget', None)
    try:
        return GameSpec(tuple(times), tuple(captures), budget)
    except GameSpecError as error:
        raise GameFileError(str(error), "locations")


def _two_type_spec(data):
    block = data['two_type']
    _check_fields(block, TWO_TYPE_FIELDS, 'two_type')
    values = dict((name, _required(block, name, 'two_type')) for name in TWO_TYPE_FIELDS)
    try:
        return TwoTypeSpec(**values)
    except GameSpecError as error:
        raise GameFileError(str(error), 'two_type')


def _learning_spec(data):
    block = data['learning']
    _check_fields(block, LEARNING_FIELDS, 'learning')
    try:
        return LearningSpec(_required(block, 'low', 'learning'), _required(block, 'high', 'learning'))
    except GameFileError:
        raise
    except GameSpecError as error:
        raise GameFileError(str(error), 'learning')


def parse_game_file(text, mode=None):
    """ Parses the text of a game file

        Raises: GameFileError with the offending field or line/column

        Arguments:
        ----------
        text -- JSON document
        mode -- overrides the mode named in the file. Without either,
                a file holding only a learning block is a learning game
                and everything else is a general game.
    """
    try:
        data = json.loads(text, parse_float=Fraction)
    except ValueError as error:
        if isinstance(error, json.JSONDecodeError):
            raise GameFileError("line {0:d}, column {1:d}: {2:s}".format(error.lineno, error.colno, error.msg))
        raise GameFileError(str(error))
    _check_fields(data, GAME_FIELDS, None)

    if mode is None:
        mode = data.get('mode')
    if mode is None:
        only_learning = 'learning' in data and 'locations' not in data and 'two_type' not in data
        mode = 'learning' if only_learning else 'general'
    if mode not in MODES:
        raise GameFileError("unknown mode '{0}' (use one of {1:s})".format(mode, ", ".join(MODES)), "mode")

    if mode == 'learning':
        if 'learning' not in data:
            raise GameFileError("missing field", "learning")
        return GameFile(mode, learning=_learning_spec(data))
    if mode == 'two-type':
        if 'two_type' not in data:
            raise GameFileError("missing field", "two_type")
        return GameFile(mode, two_type=_two_type_spec(data))
    if mode == 'general' and 'locations' not in data and 'two_type' in data:
        return GameFile(mode, two_type=_two_type_spec(data))
    return GameFile(mode, spec=_game_spec(data))


def read_game_file(filename, mode=None):
    """ Reads a UTF-8 game file from disk """
    try:
        with open(filename, "r", encoding="utf-8") as game_file:
            text = game_file.read()
    except IOError as error:
        raise GameFileError("could not read '{0:s}': {1:s}".format(filename, error.strerror or str(error)))
    except UnicodeDecodeError as error:
        raise GameFileError("'{0:s}' is not valid UTF-8 (byte {1:d})".format(filename, error.start))
    return parse_game_file(text, mode)
