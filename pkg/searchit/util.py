import numbers
import os
from decimal import Decimal
from fractions import Fraction

import numpy

# default cap on the number of feasible search sets
DEFAULT_MAX_SUBSETS = 2 ** 22
DEFAULT_WORKERS = 1


class SearchItError(Exception):
    """ Base class of all errors raised by SearchIt """
    pass


class GameSpecError(SearchItError, ValueError):
    """ Exception cast if a game, a strategy or an argument is invalid """
    pass


class GameFileError(GameSpecError):
    """ Exception cast if a game file can not be parsed

        Arguments:
        ----------
        message -- what is wrong
        field -- dotted path of the offending field (optional)
    """
    def __init__(self, message, field=None):
        self.field = field
        if field is not None:
            message = "{0:s}: {1:s}".format(field, message)
        GameSpecError.__init__(self, message)


class EnumerationLimitError(SearchItError):
    """ Exception cast if an instance is too large for exhaustive enumeration """
    pass


class InfeasibleProgramError(SearchItError):
    """ Exception cast if a linear program has no feasible point """
    pass


class VerificationError(SearchItError):
    """ Exception cast if two independent computations disagree """
    pass


def to_rational(value, name="value"):
    """ Converts value to an exact Fraction

        Decimal input is exact: ".15" and 0.15 both become 3/20.
        Strings may also be written as "num/den".

        Raises: GameSpecError if value is not a number

        Arguments:
        ----------
        value -- int, Fraction, Decimal, float or string
        name -- name used in error messages
    """
    if isinstance(value, bool):
        raise GameSpecError("{0:s} must be a number, not a boolean".format(name))
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, Decimal):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            numerator, _, denominator = text.partition("/")
            try:
                den = int(denominator)
            except ValueError:
                raise GameSpecError("{0:s} has malformed fraction '{1:s}'".format(name, value))
            if den <= 0:
                raise GameSpecError("{0:s} needs a positive denominator in '{1:s}'".format(name, value))
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise GameSpecError("{0:s} is not a rational number: '{1:s}'".format(name, value))
    raise GameSpecError("{0:s} has unsupported type {1:s}".format(name, type(value).__name__))


def fraction_str(value):
    """ Canonical rendering of a rational: reduced, positive denominator """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "{0:d}/{1:d}".format(value.numerator, value.denominator)


def decimal_str(value, digits=6):
    """ Display-only decimal rendering. Never read back. """
    value = Fraction(value)
    return "{0:.{1:d}f}".format(value.numerator / value.denominator, digits)


def set_label(members, names=None):
    """ Renders a search set as {1,3}. names optionally maps a
        1-based location index to the label to print instead.
    """
    if names is None:
        labels = [str(i) for i in members]
    else:
        labels = [str(names[i]) for i in members]
    return "{" + ",".join(labels) + "}"


def max_subsets(override=None):
    """ Returns the enumeration cap

        Arguments:
        ----------
        override -- explicit cap. If None the SEARCHIT_MAX_SUBSETS
                    environment variable is used, then the default.
    """
    if override is not None:
        cap = override
    else:
        cap = os.environ.get('SEARCHIT_MAX_SUBSETS', DEFAULT_MAX_SUBSETS)
    try:
        cap = int(cap)
    except ValueError:
        raise GameSpecError("enumeration cap must be an integer, got '{0}'".format(cap))
    if cap < 1:
        raise GameSpecError("enumeration cap must be positive, got {0:d}".format(cap))
    return cap


def workers(override=None):
    """ Returns the number of sweep workers (SEARCHIT_WORKERS, default 1) """
    count = override if override is not None else os.environ.get('SEARCHIT_WORKERS', DEFAULT_WORKERS)
    try:
        count = int(count)
    except ValueError:
        raise GameSpecError("worker count must be an integer, got '{0}'".format(count))
    if count < 1:
        raise GameSpecError("worker count must be positive, got {0:d}".format(count))
    return count


def as_matrix(matrix):
    """ Returns a numpy object array of Fractions for a PayoffMatrix or
        any rectangular sequence of rationals.
    """
    values = getattr(matrix, 'values', None)
    if isinstance(values, numpy.ndarray):
        return values
    rows = [list(row) for row in matrix]
    if len(rows) == 0 or len(rows[0]) == 0:
        raise GameSpecError("a matrix game needs at least one row and one column")
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise GameSpecError("matrix rows have different lengths")
    values = numpy.zeros((len(rows), width), dtype=object)
    for i, row in enumerate(rows):
        for j, entry in enumerate(row):
            values[i, j] = to_rational(entry, "matrix entry")
    return values
