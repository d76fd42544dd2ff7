import json
import logging
import time
from fractions import Fraction

import numpy

from .game import SearchSet
from .oracle import certificate_matrix, verify_equilibrium
from .util import GameFileError, decimal_str, fraction_str, to_rational


def _render(value):
    """ JSON friendly copy of value with every rational as a canonical string """
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (Fraction, int)):
        return fraction_str(value)
    if isinstance(value, dict):
        return dict((str(key), _render(item)) for key, item in value.items())
    if isinstance(value, (list, tuple)):
        return [_render(item) for item in value]
    return str(value)


class ResultDocument(object):
    """ The outcome of a solve, ready to be written as JSON or as a table

        Arguments:
        ----------
        mode -- the solver mode that produced it
        value -- value of the game
        hider -- list of (label, probability)
        searcher -- list of (label, members, probability); members is
                    None for strategies that are not search sets
        provenance -- 'lp', 'closed-form' or 'both'
        certificate -- oracle.Certificate of the reported strategies
        details -- mode specific extras (optional)
    """
    def __init__(self, mode, value, hider, searcher, provenance, certificate, details=None):
        self.mode = mode
        self.value = value
        self.hider = list(hider)
        self.searcher = list(searcher)
        self.provenance = provenance
        self.certificate = certificate
        self.details = details if details is not None else {}
        self.seconds = None

    def to_dict(self):
        document = {
            'mode': self.mode,
            'provenance': self.provenance,
            'value': {'fraction': fraction_str(self.value), 'decimal': decimal_str(self.value)},
            'hider': [{'label': label, 'probability': fraction_str(p)} for label, p in self.hider],
            'searcher': [{'label': label,
                          'members': None if members is None else list(members),
                          'probability': fraction_str(p)} for label, members, p in self.searcher],
            'certificate': {'ok': self.certificate.ok,
                            'hider_slack': fraction_str(min(self.certificate.hider_slack)),
                            'searcher_slack': fraction_str(min(self.certificate.searcher_slack))},
            'details': _render(self.details),
        }
        if self.seconds is not None:
            document['timing'] = {'seconds': round(float(self.seconds), 6)}
        return document

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def table(self):
        lines = []
        lines.append("mode         {0:s}".format(self.mode))
        lines.append("value        {0:s} ({1:s})".format(fraction_str(self.value), decimal_str(self.value)))
        lines.append("provenance   {0:s}".format(self.provenance))
        lines.append("certificate  {0:s}".format("ok" if self.certificate.ok else "FAILED"))
        lines.append("")
        lines.append("hider")
        for label, p in self.hider:
            lines.append("  {0:<10s} {1:>12s}  {2:s}".format(label, fraction_str(p), decimal_str(p)))
        lines.append("searcher")
        for label, _, p in self.searcher:
            lines.append("  {0:<10s} {1:>12s}  {2:s}".format(label, fraction_str(p), decimal_str(p)))
        details = _render(self.details)
        if details:
            lines.append("details")
            for key in details:
                lines.append("  {0:s}: {1}".format(key, json.dumps(details[key])))
        if self.seconds is not None:
            lines.append("time         {0:.3f}s".format(float(self.seconds)))
        return "\n".join(lines) + "\n"


def document_field(document, *path):
    item = document
    try:
        for key in path:
            item = item[key]
    except (KeyError, IndexError, TypeError):
        raise GameFileError("missing or malformed field", ".".join(str(key) for key in path))
    return item


class Solver(object):
    """ Solver is the base class for every way of solving a game file

        Subclasses set `mode` and implement `_solve`, which returns a
        ResultDocument. Settings are keyword arguments:

        max_subsets -- enumeration cap (None: SEARCHIT_MAX_SUBSETS or default)
        time_labels -- label locations by their search time
        timing -- record the wall time of the solve in the document
    """
    def __init__(self, game_file, **kwargs):
        self.game_file = game_file
        self.max_subsets = kwargs.get('max_subsets', None)
        self.time_labels = kwargs.get('time_labels', False)
        self.timing = kwargs.get('timing', False)

    def get_mode(self):
        if not hasattr(self, 'mode'):
            raise NotImplementedError
        return self.mode

    def get_game(self):
        return self.game_file.game()

    def location_names(self, spec):
        if not self.time_labels:
            return None
        return dict((i, fraction_str(t)) for i, t in enumerate(spec.t, start=1))

    def solve(self):
        """ Solves the game file and returns a ResultDocument """
        start = numpy.asarray(time.time(), dtype=numpy.float64)
        document = self._solve()
        end = numpy.asarray(time.time(), dtype=numpy.float64)
        logging.info("Solved {0:s} game in {1:.3f}s.".format(self.get_mode(), float(end - start)))
        if self.timing:
            document.seconds = end - start
        return document

    def _solve(self):
        raise NotImplementedError

    def game_document(self, spec, value, hider, searcher_sets, provenance, certificate, details=None):
        """ ResultDocument of a solution of G(n,t,p,k)

            Arguments:
            ----------
            spec -- the game
            value -- its value
            hider -- hiding probabilities, one per location
            searcher_sets -- dict SearchSet -> probability (zeros are left out)
        """
        names = self.location_names(spec)
        hider_entries = [(str(i) if names is None else names[i], p) for i, p in enumerate(hider, start=1)]
        searcher_entries = [(search_set.label(names), search_set.members, p)
                            for search_set, p in sorted(searcher_sets.items()) if p != 0]
        return ResultDocument(self.get_mode(), value, hider_entries, searcher_entries,
                              provenance, certificate, details)

    def verify(self, document):
        """ Certifies a ResultDocument (as read back from JSON) on this game

            Raises: GameFileError if the document is malformed,
                    GameSpecError if it does not fit the game

            Returns:
            --------
            (Certificate, row labels, column labels)
        """
        spec = self.get_game()
        value = to_rational(document_field(document, 'value', 'fraction'), "value")
        hider = [document_field(entry, 'probability') for entry in document_field(document, 'hider')]
        searcher_sets = {}
        for index, entry in enumerate(document_field(document, 'searcher')):
            members = document_field(document, 'searcher', index, 'members')
            if not isinstance(members, list):
                raise GameFileError("expected a list of locations", "searcher.{0:d}.members".format(index))
            if not all(isinstance(i, int) and not isinstance(i, bool) for i in members):
                raise GameFileError("expected integer locations", "searcher.{0:d}.members".format(index))
            search_set = SearchSet.of(spec, members)
            probability = to_rational(document_field(entry, 'probability'), "probability")
            searcher_sets[search_set] = searcher_sets.get(search_set, Fraction(0)) + probability
        matrix = certificate_matrix(spec, searcher_sets, self.max_subsets)
        searcher = [searcher_sets.get(search_set, Fraction(0)) for search_set in matrix.rows]
        certificate = verify_equilibrium(matrix, hider, searcher, value)
        rows = [search_set.label() for search_set in matrix.rows]
        cols = [str(i) for i in matrix.cols]
        return certificate, rows, cols

    def __str__(self):
        return "{0:s}({1!r})".format(type(self).__name__, self.game_file)
