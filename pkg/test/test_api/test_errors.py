import pickle

import pytest

from specocc.api import errors


ERRORS = [
    (errors.InvalidInputError('nan'), errors.EXIT_NUMERIC),
    (errors.SymmetryViolationError(1.0), errors.EXIT_NUMERIC),
    (errors.DimensionError((4, 1), (5, 1)), errors.EXIT_NUMERIC),
    (errors.ContractViolationError('map'), errors.EXIT_NUMERIC),
    (errors.NonFiniteParameterError('bias'), errors.EXIT_NUMERIC),
    (errors.DomainError('input', 'frequency'), errors.EXIT_CONFIG),
    (errors.ConfigError('window'), errors.EXIT_CONFIG),
    (errors.InvalidSpecError('bands'), errors.EXIT_CONFIG),
    (errors.InvalidPolicyError('topk'), errors.EXIT_CONFIG),
    (errors.ShapeInconsistencyError('weights'), errors.EXIT_CONFIG),
    (errors.ModelParseError('json'), errors.EXIT_IO),
    (errors.MissingPathError('/nope', 'model'), errors.EXIT_IO),
    (errors.RaggedRowError('f.txt', 3, 'ragged'), errors.EXIT_IO),
    (errors.NonNumericFieldError('f.txt', 3, 'abc'), errors.EXIT_IO),
    (errors.UnknownLabelError('f.txt', 3, 'x'), errors.EXIT_IO),
    (errors.NothingToPlotError('empty'), errors.EXIT_IO),
    (errors.IncompleteGridError([('ds', 'random')]), errors.EXIT_GRID),
]


@pytest.mark.parametrize('error, code', ERRORS)
def test_exit_codes(error, code):
    assert isinstance(error, errors.SpecoccError)
    assert error.exit_code == code


def test_messages():
    assert 'f.txt:3' in str(errors.RaggedRowError('f.txt', 3, 'ragged'))
    assert 'ds/random' in str(errors.IncompleteGridError([('ds', 'random')]))
    assert '/nope' in str(errors.MissingPathError('/nope', 'model'))


@pytest.mark.parametrize('error, code', ERRORS)
def test_errors_survive_pickling(error, code):
    # worker processes send their errors back pickled
    copy = pickle.loads(pickle.dumps(error))
    assert type(copy) is type(error)
    assert str(copy) == str(error)
    assert copy.exit_code == code
    assert copy.__dict__ == error.__dict__
