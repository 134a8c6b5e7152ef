import json

import numpy as np
import pytest

from specocc.api import TimeSeries
from specocc.api.errors import DimensionError
from specocc.api.errors import DomainError
from specocc.api.errors import InvalidInputError
from specocc.api.errors import ModelParseError
from specocc.attribution import AttributionMap
from specocc.attribution import FREQUENCY
from specocc.attribution import INPUT
from specocc.attribution import attributed_signal
from specocc.attribution import load_map
from specocc.attribution import normalize
from specocc.attribution import normalize_scores
from specocc.attribution import random_attribution
from specocc.attribution import save_map


@pytest.mark.parametrize('scores, expected', [
    ([1.0, 2.0, 3.0], [0.0, 0.5, 1.0]),
    ([-2.0, 0.0, 2.0], [0.0, 0.5, 1.0]),
    ([4.0, 4.0, 4.0], [1.0, 1.0, 1.0]),
])
def test_normalize_scores(scores, expected):
    normalized = normalize_scores(np.reshape(scores, (-1, 1)))
    assert np.allclose(normalized[:, 0], expected)


def test_normalize_is_per_channel():
    scores = np.array([[0.0, 10.0], [1.0, 30.0], [2.0, 20.0]])
    amap = normalize(AttributionMap(scores, INPUT, 1, 'occlusion'))
    assert np.allclose(amap.scores, [[0.0, 0.0], [0.5, 1.0], [1.0, 0.5]])
    assert amap.is_normalized()
    assert amap.target_class == 1
    assert amap.method == 'occlusion'


def test_frequency_map_rows():
    AttributionMap(np.zeros((5, 1)), FREQUENCY, 0, 'frequency', length=9)
    AttributionMap(np.zeros((5, 1)), FREQUENCY, 0, 'frequency', length=8)
    with pytest.raises(DimensionError):
        AttributionMap(np.zeros((5, 1)), FREQUENCY, 0, 'frequency',
                       length=10)


def test_invalid_maps():
    with pytest.raises(InvalidInputError):
        AttributionMap([[np.nan]], INPUT, 0, 'occlusion')
    with pytest.raises(InvalidInputError):
        AttributionMap([[1.0]], 'time', 0, 'occlusion')


def test_check_domain_and_signal():
    amap = AttributionMap(np.zeros((8, 2)), INPUT, 0, 'occlusion')
    amap.check_signal(TimeSeries(np.zeros((8, 2))))
    with pytest.raises(DimensionError):
        amap.check_signal(TimeSeries(np.zeros((8, 1))))
    with pytest.raises(DomainError):
        amap.check_domain(FREQUENCY)


def test_save_load(tmpdir):
    path = str(tmpdir.join('map.json'))
    scores = np.random.default_rng(0).normal(size=(9, 2))
    amap = AttributionMap(scores, FREQUENCY, 1, 'frequency', length=17,
                          config={'window': 1})
    save_map(amap, path, sample_id=4)
    with open(path) as f:
        document = json.load(f)
    assert document['sample_id'] == 4
    assert document['rows'] == 9
    loaded = load_map(path)
    assert np.array_equal(loaded.scores, scores)
    assert loaded.length == 17
    assert loaded.domain == FREQUENCY
    assert loaded.config == {'window': 1}


def test_load_garbage(tmpdir):
    path = str(tmpdir.join('map.json'))
    with open(path, 'w') as f:
        f.write('{"scores": ')
    with pytest.raises(ModelParseError):
        load_map(path)
    with open(path, 'w') as f:
        f.write('{"scores": [[1.0]]}')
    with pytest.raises(ModelParseError):
        load_map(path)


def test_random_attribution_is_reproducible():
    x = TimeSeries(np.zeros((50, 2)))
    a = random_attribution(x, 7)
    b = random_attribution(x, 7)
    c = random_attribution(x, 8)
    assert np.array_equal(a.scores, b.scores)
    assert not np.array_equal(a.scores, c.scores)
    assert a.method == 'random'


def test_random_attribution_is_uniform():
    x = TimeSeries(np.zeros((100000, 1)))
    amap = random_attribution(x, 0)
    assert abs(amap.scores.mean() - 0.5) < 0.01
    assert amap.scores.min() >= 0.0
    assert amap.scores.max() < 1.0


def test_random_frequency_attribution():
    amap = random_attribution(TimeSeries(np.zeros(64)), 3, domain=FREQUENCY)
    assert amap.scores.shape == (33, 1)
    assert amap.domain == FREQUENCY


def test_attributed_signal():
    x = TimeSeries([2.0, 4.0, 6.0])
    amap = AttributionMap([0.0, 5.0, 10.0], INPUT, 0, 'occlusion')
    assert np.allclose(attributed_signal(x, amap)[:, 0], [0.0, 2.0, 6.0])
