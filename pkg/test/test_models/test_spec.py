import json

import numpy as np
import pytest

from specocc.api import TimeSeries
from specocc.api.errors import MissingPathError
from specocc.api.errors import ModelParseError
from specocc.api.errors import NonFiniteParameterError
from specocc.models import ModelSpec
from specocc.models import load_model
from specocc.models import save_model
from test.helpers import band_oracle
from test.helpers import linear_oracle


def test_linear_document_example(tmpdir):
    path = str(tmpdir.join('model.json'))
    with open(path, 'w') as f:
        json.dump({'kind': 'linear', 'num_classes': 2, 'input_length': 4,
                   'input_channels': 1,
                   'weights': [[1.0, 0.0, 0.0, 0.0], [0.0, 0.0, 0.0, 0.0]],
                   'bias': [0.0, 0.0]}, f)
    oracle = load_model(path)
    scores = oracle.predict(TimeSeries([1.0, 0.0, 0.0, 0.0]))
    assert np.allclose(scores, np.exp([1, 0]) / np.sum(np.exp([1, 0])))


@pytest.mark.parametrize('oracle', [linear_oracle(8, 2, 3),
                                    band_oracle(32, 2, 4)])
def test_save_load_predictions_identical(tmpdir, oracle):
    path = str(tmpdir.join('model.json'))
    save_model(oracle, path)
    loaded = load_model(path)
    x = TimeSeries(np.random.default_rng(0).normal(
        size=(oracle.expected_length, oracle.expected_channels)))
    assert np.array_equal(loaded.predict(x), oracle.predict(x))
    assert ModelSpec.from_oracle(loaded).to_dict() == \
        ModelSpec.from_oracle(oracle).to_dict()


def test_missing_model():
    with pytest.raises(MissingPathError):
        load_model('/this/path/does/not/exist.json')


@pytest.mark.parametrize('content', [
    '{not json',
    '[1, 2]',
    '{"kind": "svm", "num_classes": 2, "input_length": 4, '
    '"input_channels": 1}',
    '{"kind": "linear", "num_classes": 2, "input_length": 4, '
    '"input_channels": 1, "weights": [[0, 0, 0, 0], [0, 0, 0, 0]]}',
    '{"kind": "linear", "input_length": 4, "input_channels": 1}',
    '{"kind": "linear", "num_classes": 2, "input_length": 2, '
    '"input_channels": 1, "weights": [[0, 0], [0]], "bias": [0, 0]}',
    '{"kind": "linear", "num_classes": 2, "input_length": 2, '
    '"input_channels": 1, "weights": "abc", "bias": [0, 0]}',
    '{"kind": "mlp", "num_classes": 2, "input_length": 2, '
    '"input_channels": 1, "layers": ['
    '{"weights": [[0, 0], [0]], "bias": [0, 0]}]}',
])
def test_invalid_documents(tmpdir, content):
    path = str(tmpdir.join('model.json'))
    with open(path, 'w') as f:
        f.write(content)
    with pytest.raises(ModelParseError):
        load_model(path)


def test_nan_parameter(tmpdir):
    path = str(tmpdir.join('model.json'))
    with open(path, 'w') as f:
        f.write('{"kind": "linear", "num_classes": 2, "input_length": 1, '
                '"input_channels": 1, "weights": [[NaN], [0]], '
                '"bias": [0, 0]}')
    with pytest.raises(NonFiniteParameterError):
        load_model(path)
