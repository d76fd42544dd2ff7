""" searchit command line interface

    searchit solve game.json [--mode MODE] [--format json|table|both]
    searchit sweep game.json --k-from 5 --k-to 10 [--workers N]
    searchit learning --low 1/3 --high 2/3
    searchit verify game.json solution.json
    searchit examples

    Exit codes: 0 ok, 1 certificate failure, 2 invalid input,
    3 instance too large, 4 internal verification failure.
"""
import argparse
import json
import logging
import os
import sys
from fractions import Fraction

from .closed_forms import (TwoTypeSpec, check_pn_threshold, expand_two_type, solve_arithmetic_times,
                           solve_constant_times, solve_two_type)
from .game import GameSpec, best_response_value, solve_game
from .gamefile import MODES, GameFile, read_game_file
from .learning import LearningSpec, posterior_after_escape, solve_learning
from .oracle import sweep_k, sweep_two_type
from .solvers import GameSolver
from .strings import version_str
from .util import (EnumerationLimitError, GameFileError, GameSpecError, SearchItError,
                   VerificationError, decimal_str, fraction_str, to_rational)

EXIT_OK = 0
EXIT_CERTIFICATE = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_INTERNAL = 4


def _emit(args, text_table, json_text):
    """ tables go to standard output, JSON to --output or standard output """
    if args.format in ('table', 'both'):
        sys.stdout.write(text_table)
    if args.format in ('json', 'both'):
        if args.output is not None:
            with open(args.output, "w", encoding="utf-8") as output:
                output.write(json_text)
        else:
            sys.stdout.write(json_text)


def cmd_solve(args):
    game_file = read_game_file(args.file, args.mode)
    solver = GameSolver(game_file, max_subsets=args.max_subsets,
                        time_labels=args.paper_names, timing=args.timing)
    document = solver.solve()
    _emit(args, document.table(), document.to_json())
    return EXIT_OK if document.certificate.ok else EXIT_CERTIFICATE


def _hider_range(ranges):
    """ 'unique' or the per-location [min,max] over all optimal hiders """
    if ranges.unique:
        return "unique"
    return " ".join("[{0:s},{1:s}]".format(fraction_str(low), fraction_str(high)) for low, high in ranges.ranges)


def _sweep_rows(game_file, args):
    if args.k_from < 0 or args.k_from > args.k_to:
        raise GameSpecError("invalid k range {0:d}..{1:d}".format(args.k_from, args.k_to))
    k_values = range(args.k_from, args.k_to + 1)
    if game_file.two_type is not None:
        rows = sweep_two_type(game_file.two_type, k_values, args.workers, args.max_subsets)
        header = "{0:>4s} {1:>14s} {2:>10s} {3:>14s} {4:>14s}".format("k", "value", "decimal", "type 1 mass", "closed form")
        lines = [header]
        records = []
        for row in rows:
            closed = "-" if row.closed_form_value is None else fraction_str(row.closed_form_value)
            lines.append("{0:>4d} {1:>14s} {2:>10s} {3:>14s} {4:>14s}".format(
                row.k, fraction_str(row.value), decimal_str(row.value), fraction_str(row.type_one_mass), closed))
            records.append({'k': row.k, 'value': fraction_str(row.value),
                            'type_one_mass': fraction_str(row.type_one_mass),
                            'closed_form_value': None if row.closed_form_value is None else closed})
        return lines, records

    rows = sweep_k(game_file.game(), k_values, args.workers, args.max_subsets)
    n = game_file.game().n
    header = "{0:>4s} ".format("k") + " ".join("{0:>8s}".format("h_{0:d}".format(i)) for i in range(1, n + 1))
    lines = [header + " {0:>10s} {1:>10s}  hider range".format("value", "decimal")]
    records = []
    for row in rows:
        hider = " ".join("{0:>8s}".format(fraction_str(h)) for h in row.hider)
        lines.append("{0:>4s} {1:s} {2:>10s} {3:>10s}  {4:s}".format(
            fraction_str(row.k), hider, fraction_str(row.value), decimal_str(row.value), _hider_range(row.hider_ranges)))
        records.append({'k': fraction_str(row.k), 'value': fraction_str(row.value),
                        'hider': [fraction_str(h) for h in row.hider],
                        'hider_unique': row.hider_ranges.unique,
                        'hider_range': [[fraction_str(low), fraction_str(high)] for low, high in row.hider_ranges.ranges],
                        'searcher': [{'label': s.label(), 'members': list(s.members), 'probability': fraction_str(p)}
                                     for s, p in sorted(row.searcher.items())]})
    return lines, records


def cmd_sweep(args):
    game_file = read_game_file(args.file, args.mode)
    lines, records = _sweep_rows(game_file, args)
    _emit(args, "\n".join(lines) + "\n", json.dumps(records, indent=2) + "\n")
    return EXIT_OK


def cmd_learning(args):
    game_file = GameFile('learning', learning=LearningSpec(args.low, args.high))
    document = GameSolver(game_file, timing=args.timing).solve()
    _emit(args, document.table(), document.to_json())
    return EXIT_OK if document.certificate.ok else EXIT_CERTIFICATE


def cmd_verify(args):
    game_file = read_game_file(args.file, args.mode)
    try:
        with open(args.solution, "r", encoding="utf-8") as solution_file:
            document = json.load(solution_file)
    except IOError as error:
        raise GameFileError("could not read '{0:s}': {1:s}".format(args.solution, error.strerror or str(error)))
    except ValueError as error:
        raise GameFileError("solution file is not valid JSON: {0:s}".format(str(error)))

    solver = GameSolver(game_file, max_subsets=args.max_subsets)
    certificate, rows, cols = solver.verify(document)
    if certificate.ok:
        sys.stdout.write("certificate ok: value {0:s} is guaranteed by both strategies\n".format(fraction_str(certificate.claimed_value)))
        return EXIT_OK
    row, row_slack = certificate.worst_row()
    col, col_slack = certificate.worst_column()
    if row_slack < 0:
        sys.stdout.write("certificate FAILED: row {0:s} pays {1:s} more than the value against the hider\n".format(rows[row], fraction_str(-row_slack)))
    if col_slack < 0:
        sys.stdout.write("certificate FAILED: column {0:s} has searcher slack {1:s}\n".format(cols[col], fraction_str(col_slack)))
    return EXIT_CERTIFICATE


def _arithmetic_family(k):
    return GameSpec((1, 2, 3, 4, 5), ("1/2", "2/5", "3/10", "1/5", "1/10"), k)


def _check_search_times():
    spec = GameSpec((5, 3, 4, 7), ("1/10", "1/5", "3/20", "2/5"), 7)
    _, solution = solve_game(spec)
    hider = (Fraction(12, 23), Fraction(0), Fraction(8, 23), Fraction(3, 23))
    _, reply = best_response_value(spec, hider)
    return solution.value == Fraction(6, 115) and reply == Fraction(6, 115), "value {0:s}".format(fraction_str(solution.value))


def _check_value_table():
    expected = [Fraction(3, 55), Fraction(3, 55), Fraction(1, 15), Fraction(1, 15), Fraction(18, 185), Fraction(1, 10)]
    rows = sweep_k(_arithmetic_family(5), range(5, 11))
    values = [row.value for row in rows]
    return values == expected, "values " + ", ".join(fraction_str(v) for v in values)


def _check_threshold():
    holds = check_pn_threshold(_arithmetic_family(10)).holds
    below = check_pn_threshold(_arithmetic_family(9)).holds
    return holds and not below, "k=10 {0}, k=9 {1}".format(holds, below)


def _check_arithmetic_times():
    solution = solve_arithmetic_times(("1/2", "2/5", "3/10", "1/5", "1/10"))
    return solution.verified and solution.value == Fraction(3, 55), "value {0:s}".format(fraction_str(solution.value))


def _check_constant_times():
    solution = solve_constant_times(("1/5", "3/10", "1/2"), 1)
    return solution.value == Fraction(3, 31), "value {0:s}".format(fraction_str(solution.value))


def _check_two_types():
    spec = TwoTypeSpec(4, 2, 2, "3/10", "1/5", 4)
    closed = solve_two_type(spec)
    _, solution = solve_game(expand_two_type(spec))
    ok = closed.value == solution.value == Fraction(3, 25)
    return ok, "closed form {0:s}, LP {1:s}".format(fraction_str(closed.value), fraction_str(solution.value))


def _check_learning():
    spec = LearningSpec("1/3", "2/3")
    solution = solve_learning(spec)
    posterior = posterior_after_escape(spec, solution)
    ok = (solution.value_A == Fraction(21, 68) and solution.prob_rs == Fraction(9, 17)
          and posterior.implied_capture_x == Fraction(4, 9) and posterior.q_low_capture == Fraction(2, 3))
    return ok, "value {0:s}, rs {1:s}".format(fraction_str(solution.value_A), fraction_str(solution.prob_rs))


EXAMPLES = (
    ("unequal search times (t=5,3,4,7, k=7)", _check_search_times),
    ("value table for t_i = i, k = 5..10", _check_value_table),
    ("threshold p_n reached at k = 10", _check_threshold),
    ("arithmetic times, n = 5", _check_arithmetic_times),
    ("constant times, p = (.2,.3,.5), k = 1", _check_constant_times),
    ("two types, a=4 b=2 tau=2 k=4", _check_two_types),
    ("learning game, l=1/3 h=2/3", _check_learning),
    )


def cmd_examples(args):
    failures = 0
    for name, check in EXAMPLES:
        passed, detail = check()
        if not passed:
            failures += 1
        sys.stdout.write("{0:s} {1:s}: {2:s}\n".format("PASS" if passed else "FAIL", name, detail))
    return EXIT_OK if failures == 0 else EXIT_CERTIFICATE


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("'{0:s}' is not an integer".format(text))
    if value < 1:
        raise argparse.ArgumentTypeError("'{0:s}' must be positive".format(text))
    return value


def _rational(text):
    try:
        return to_rational(text, "probability")
    except GameSpecError as error:
        raise argparse.ArgumentTypeError(str(error))


def build_parser():
    parser = argparse.ArgumentParser(prog="searchit", description="exact solutions of search games with search times and capture probabilities")
    parser.add_argument('--version', action='version', version="%(prog)s " + version_str)
    parser.add_argument('--log-level', default=os.environ.get('SEARCHIT_LOG_LEVEL', 'WARNING'),
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], type=str.upper,
                        help="logging level (default: SEARCHIT_LOG_LEVEL or WARNING)")
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument('--format', choices=['json', 'table', 'both'], default='table')
    output.add_argument('--output', default=None, help="write JSON to this file instead of standard output")
    output.add_argument('--timing', action='store_true', help="include wall time in the result")

    game = argparse.ArgumentParser(add_help=False)
    game.add_argument('file', help="game file (JSON)")
    game.add_argument('--mode', choices=MODES, default=None, help="overrides the mode of the game file")
    game.add_argument('--max-subsets', type=_positive_int, default=None,
                      help="enumeration cap (default: SEARCHIT_MAX_SUBSETS or 2**22)")

    solve = subparsers.add_parser('solve', parents=[game, output], help="solve a game file")
    solve.add_argument('--paper-names', action='store_true', help="label locations by their search time")
    solve.set_defaults(function=cmd_solve)

    sweep = subparsers.add_parser('sweep', parents=[game, output], help="solve a game file for a range of budgets")
    sweep.add_argument('--k-from', type=int, required=True)
    sweep.add_argument('--k-to', type=int, required=True)
    sweep.add_argument('--workers', type=_positive_int, default=None,
                       help="worker processes (default: SEARCHIT_WORKERS or 1)")
    sweep.set_defaults(function=cmd_sweep)

    learning = subparsers.add_parser('learning', parents=[output], help="solve the two period learning game")
    learning.add_argument('--low', type=_rational, required=True, help="low escape probability l")
    learning.add_argument('--high', type=_rational, required=True, help="high escape probability h")
    learning.set_defaults(function=cmd_learning)

    verify = subparsers.add_parser('verify', help="certify a solution file against a game file")
    verify.add_argument('file', help="game file (JSON)")
    verify.add_argument('solution', help="result document (JSON) written by solve")
    verify.add_argument('--mode', choices=MODES, default=None)
    verify.add_argument('--max-subsets', type=_positive_int, default=None)
    verify.set_defaults(function=cmd_verify)

    examples = subparsers.add_parser('examples', help="reproduce the worked examples")
    examples.set_defaults(function=cmd_examples)
    return parser


def main(argv=None):
    """ Runs the command line interface and returns the exit code """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return EXIT_INPUT if error.code else EXIT_OK
    logging.basicConfig(level=getattr(logging, args.log_level, logging.WARNING), format="%(levelname)s: %(message)s")

    try:
        return args.function(args)
    except GameSpecError as error:
        logging.error(str(error))
        return EXIT_INPUT
    except EnumerationLimitError as error:
        logging.error(str(error))
        return EXIT_RESOURCE
    except VerificationError as error:
        logging.error("internal verification failed: {0:s}".format(str(error)))
        return EXIT_INTERNAL
    except SearchItError as error:
        logging.error(str(error))
        return EXIT_INTERNAL
