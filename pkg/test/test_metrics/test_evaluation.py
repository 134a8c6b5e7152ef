import numpy as np
import pytest

from specocc.api import TimeSeries
from specocc.api.errors import ConfigError
from specocc.api.errors import DomainError
from specocc.attribution import FREQUENCY
from specocc.attribution import INPUT
from specocc.attribution import METHODS
from specocc.attribution import OcclusionConfig
from specocc.data import generate_synthetic
from specocc.metrics import EvaluationSettings
from specocc.metrics import attribute
from specocc.metrics import evaluate_sample
from specocc.metrics import reports_to_frame
from specocc.metrics.evaluation import sample_seed
from test.helpers import ConstantOracle
from test.helpers import sine


FAST = dict(n_perturb=2, steps=5)


def test_sample_seed():
    assert sample_seed(0, 1) == sample_seed(0, 1)
    assert sample_seed(0, 1) != sample_seed(0, 2)
    assert sample_seed(0, 1, 1) != sample_seed(0, 1, 2)


@pytest.mark.parametrize('kwargs', [
    {'metrics': ['accuracy']}, {'sigma': 0}, {'radius': -1},
    {'n_perturb': 0}, {'steps': 1}, {'deletion_space': 'time'}])
def test_invalid_settings(kwargs):
    with pytest.raises(ConfigError):
        EvaluationSettings(**kwargs)


def test_settings_dict():
    settings = EvaluationSettings(sigma=0.2, seed=4)
    assert EvaluationSettings.from_dict(settings.to_dict()).to_dict() == \
        settings.to_dict()


@pytest.mark.parametrize('method', METHODS)
def test_attribute(synthetic, method):
    dataset, oracle = synthetic
    _, x, label = next(iter(dataset))
    input_map, native_map = attribute(method, oracle, x, seed=1)
    assert input_map.domain == INPUT
    assert input_map.scores.shape == x.shape
    assert input_map.target_class == label
    if method in ('frequency', 'random'):
        assert native_map.domain == FREQUENCY
    with pytest.raises(ConfigError):
        attribute('saliency', oracle, x)


def test_constant_oracle():
    oracle = ConstantOracle([0.5, 0.0], 16)
    x = TimeSeries(sine(16, 2))
    settings = EvaluationSettings(**FAST)
    reports = evaluate_sample(oracle, x, METHODS, settings=settings,
                              dataset='toy', sample_id=3)
    assert len(set(r.auc for r in reports)) == 1
    for report in reports:
        assert report.sample_id == 3
        assert report.target_class == 0
        assert report.sensitivity == 0.0
        if report.method == 'occlusion':
            assert report.continuity == 0.0


def test_row_count(synthetic):
    dataset, oracle = synthetic
    settings = EvaluationSettings(**FAST)
    reports = []
    for sample_id, x, _ in dataset.subset([0, 1, 2]):
        reports.extend(evaluate_sample(oracle, x, METHODS, settings=settings,
                                       sample_id=sample_id))
    assert len(reports_to_frame(reports)) == 3 * len(METHODS) * 4


def test_reports_are_reproducible(synthetic):
    dataset, oracle = synthetic
    _, x, _ = next(iter(dataset))
    settings = EvaluationSettings(seed=3, **FAST)
    a = evaluate_sample(oracle, x, METHODS, settings=settings)
    b = evaluate_sample(oracle, x, METHODS, settings=settings)
    assert [r.values for r in a] == [r.values for r in b]


def test_frequency_deletion_space(synthetic):
    dataset, oracle = synthetic
    _, x, _ = next(iter(dataset))
    settings = EvaluationSettings(metrics=['auc'], deletion_space=FREQUENCY,
                                  steps=5)
    reports = evaluate_sample(oracle, x, ['frequency', 'random'],
                              settings=settings)
    assert all(r.curve.space == FREQUENCY for r in reports)
    with pytest.raises(DomainError):
        evaluate_sample(oracle, x, ['occlusion'], settings=settings)


def test_attribution_deletion_space(synthetic):
    dataset, oracle = synthetic
    _, x, _ = next(iter(dataset))
    settings = EvaluationSettings(metrics=['auc'], steps=5,
                                  deletion_space='attribution')
    reports = evaluate_sample(oracle, x, METHODS, settings=settings)
    spaces = dict((r.method, r.curve.space) for r in reports)
    assert spaces == {'occlusion': INPUT, 'frequency': FREQUENCY,
                      'combined': INPUT, 'random': INPUT}


@pytest.fixture(scope='module')
def noisy_reports():
    dataset, spec = generate_synthetic([3, 9], length=64, count=100,
                                       noise=0.5, seed=7)
    oracle = spec.build()
    settings = EvaluationSettings(metrics=['auc', 'continuity'], steps=20,
                                  seed=7)
    reports = []
    for sample_id, x, _ in dataset:
        reports.extend(evaluate_sample(oracle, x, METHODS,
                                       OcclusionConfig(1),
                                       settings=settings,
                                       sample_id=sample_id))
    return reports_to_frame(reports)


def method_means(frame, metric):
    subset = frame[frame['metric'] == metric]
    return subset.groupby('method')['value'].mean()


def test_input_deletion_ordering(noisy_reports):
    means = method_means(noisy_reports, 'auc')
    assert means['occlusion'] < means['random']
    assert means['combined'] < means['random']
    # occlusion of single steps is already the greedy deletion order, the
    # frequency stage can only tie with it on average
    assert means['combined'] <= means['occlusion'] + 0.02


def test_continuity_ordering(noisy_reports):
    means = method_means(noisy_reports, 'continuity')
    assert means['random'] > means['combined']
    assert np.isfinite(means['frequency'])
