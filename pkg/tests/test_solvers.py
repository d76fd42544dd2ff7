from fractions import Fraction

import pytest

from searchit.game import GameSpec
from searchit.gamefile import GameFile
from searchit.learning import LearningSpec
from searchit.solver import Solver
from searchit.solvers import (ConstantTimesSolver, GameSolver, GeneralSolver, LearningSolver, solver_matrix)
from searchit.util import GameFileError, GameSpecError


def unequal_file(mode='general'):
    return GameFile(mode, spec=GameSpec((5, 3, 4, 7), ("1/10", "1/5", "3/20", "2/5"), 7))


def test_factory_picks_the_mode_of_the_file():
    assert isinstance(GameSolver(unequal_file()), GeneralSolver)
    assert isinstance(GameSolver(unequal_file(), mode='constant-times'), ConstantTimesSolver)
    assert isinstance(GameSolver(GameFile('learning', learning=LearningSpec(0, 0))), LearningSolver)
    assert sorted(solver_matrix) == ['arithmetic-times', 'constant-times', 'general', 'learning', 'two-type']


def test_factory_rejects_unknown_modes():
    with pytest.raises(GameSpecError):
        GameSolver(unequal_file(), mode='heuristic')


def test_base_class_has_no_mode():
    solver = Solver(unequal_file())
    with pytest.raises(NotImplementedError):
        solver.get_mode()


def test_keyword_settings():
    solver = GameSolver(unequal_file(), max_subsets=10, time_labels=True)
    assert solver.max_subsets == 10
    assert solver.location_names(solver.get_game()) == {1: "5", 2: "3", 3: "4", 4: "7"}
    assert not GameSolver(unequal_file()).timing


def test_general_document():
    document = GameSolver(unequal_file()).solve()
    assert document.value == Fraction(6, 115)
    assert document.details['undominated_sets'] == 3
    assert document.details['inspection_probability'] == (Fraction(12, 23), Fraction(8, 23), Fraction(8, 23), Fraction(3, 23))
    assert document.seconds is None
    assert document.to_dict()['certificate'] == {'ok': True, 'hider_slack': '0', 'searcher_slack': '0'}


def test_timing_is_recorded_on_request():
    document = GameSolver(unequal_file(), timing=True).solve()
    assert document.seconds >= 0
    assert "time" in document.table()


def test_constant_times_needs_equal_times():
    with pytest.raises(GameSpecError):
        GameSolver(unequal_file(), mode='constant-times').solve()


def test_two_type_needs_its_block():
    with pytest.raises(GameFileError):
        GameSolver(unequal_file(), mode='two-type').solve()


def test_malformed_documents():
    solver = GameSolver(unequal_file())
    with pytest.raises(GameFileError):
        solver.verify({'hider': []})
    with pytest.raises(GameFileError):
        solver.verify({'value': {'fraction': '6/115'}, 'hider': [], 'searcher': [{'members': 'all', 'probability': '1'}]})
