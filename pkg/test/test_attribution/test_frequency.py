import math

import numpy as np
import pytest

from specocc.api import TimeSeries
from specocc.api import num_frequencies
from specocc.api.errors import ConfigError
from specocc.api.errors import ContractViolationError
from specocc.api.errors import DomainError
from specocc.api.errors import InvalidPolicyError
from specocc.attribution import AttributionMap
from specocc.attribution import FREQUENCY
from specocc.attribution import MaskPolicy
from specocc.attribution import OcclusionConfig
from specocc.attribution import frequency_attribution
from specocc.attribution import normalize
from specocc.attribution import occlusion_attribution
from specocc.attribution import optimize_signal
from specocc.attribution import project_to_input_space
from specocc.attribution import signal_change
from specocc.data import generate_synthetic
from test.helpers import ConstantOracle
from test.helpers import band_oracle
from test.helpers import linear_oracle
from test.helpers import sine


@pytest.mark.parametrize('window', [1, 2, 8])
def test_forward_pass_budget(window):
    oracle = band_oracle(128)
    x = TimeSeries(sine(128, 5) + sine(128, 20))
    frequency_attribution(oracle, x, OcclusionConfig(window))
    windows = int(math.ceil((65 - window) / float(window))) + 1
    assert oracle.forward_pass_count == 1 + windows


def test_shape_and_domain():
    oracle = linear_oracle(63, channels=2)
    x = TimeSeries(np.random.default_rng(0).normal(size=(63, 2)))
    amap = frequency_attribution(oracle, x)
    assert amap.domain == FREQUENCY
    assert amap.scores.shape == (num_frequencies(63), 2)
    assert amap.length == 63
    assert amap.method == 'frequency'


@pytest.mark.parametrize('length', [64, 65])
def test_argmax_in_rule_band(length):
    oracle = band_oracle(length, 5, 5)
    x = TimeSeries(sine(length, 5) + sine(length, 12, 0.8, 1.0))
    amap = frequency_attribution(oracle, x)
    assert amap.target_class == 1
    assert np.argmax(amap.scores[:, 0]) == 5


def test_shift_invariance():
    oracle = band_oracle(64, 5, 5)
    x = sine(64, 5, phase=0.4) + 0.3 * sine(64, 17)
    for shift in (0, 1, 7, 31):
        amap = frequency_attribution(oracle, TimeSeries(np.roll(x, shift)))
        assert np.argmax(amap.scores[:, 0]) == 5


def test_constant_oracle_gives_zero_map():
    oracle = ConstantOracle([0.0, 2.0], 32)
    amap = frequency_attribution(oracle, TimeSeries(sine(32, 3)))
    assert np.all(amap.scores == 0.0)


def test_ground_truth_recovery_noiseless():
    dataset, spec = generate_synthetic([3, 9], length=64, count=200, seed=1)
    oracle = spec.build()
    hits = 0
    for _, x, label in dataset:
        amap = frequency_attribution(oracle, x)
        hits += np.argmax(amap.scores[:, 0]) == [3, 9][label]
    assert hits >= 0.99 * len(dataset)


def test_ground_truth_recovery_noisy():
    noise = 0.5 * math.sqrt(0.5)  # half the std of a unit sinusoid
    dataset, spec = generate_synthetic([3, 9], length=64, count=200,
                                       noise=noise, seed=2)
    oracle = spec.build()
    hits = 0
    for _, x, label in dataset:
        amap = frequency_attribution(oracle, x)
        hits += np.argmax(amap.scores[:, 0]) == [3, 9][label]
    assert hits >= 0.9 * len(dataset)


def test_projection():
    oracle = band_oracle(64, 5, 5)
    x = TimeSeries(sine(64, 5) + sine(64, 12))
    a_freq = normalize(frequency_attribution(oracle, x))
    projected = project_to_input_space(x, a_freq)
    assert projected.domain == 'input'
    assert projected.scores.shape == (64, 1)
    # |x - inverse(X * a)| == |inverse(X * (1 - a))|
    weights = 1.0 - a_freq.scores[:, 0]
    full = np.concatenate([weights, weights[1:32][::-1]])
    expected = np.abs(np.fft.ifft(np.fft.fft(x.values[:, 0]) * full).real)
    assert np.allclose(projected.scores[:, 0], expected, atol=1e-12)


def test_projection_contract():
    x = TimeSeries(sine(16, 2))
    raw = AttributionMap(np.full((9, 1), 2.0), FREQUENCY, 0, 'frequency',
                         length=16)
    with pytest.raises(ContractViolationError):
        project_to_input_space(x, raw)
    input_map = AttributionMap(np.zeros((16, 1)), 'input', 0, 'occlusion')
    with pytest.raises(DomainError):
        project_to_input_space(x, input_map)


def test_projection_of_all_ones_map_is_zero():
    x = TimeSeries(sine(16, 2) + 1.0)
    ones = AttributionMap(np.ones((9, 1)), FREQUENCY, 0, 'frequency',
                          length=16)
    assert np.allclose(project_to_input_space(x, ones).scores, 0.0)


def test_optimize_all_pass_is_identity():
    oracle = band_oracle(64)
    x = TimeSeries(np.random.default_rng(0).normal(size=64))
    a_freq = frequency_attribution(oracle, x)
    assert optimize_signal(x, a_freq, MaskPolicy.parse('all')) == x


def test_optimize_topk_keeps_relevant_component():
    oracle = band_oracle(64, 5, 5)
    x = TimeSeries(sine(64, 5) + sine(64, 12))
    a_freq = frequency_attribution(oracle, x)
    optimized = optimize_signal(x, a_freq, MaskPolicy.parse('topk:1'))
    assert np.allclose(optimized.values[:, 0], sine(64, 5), atol=1e-9)
    assert np.argmax(oracle.predict(optimized)) == \
        np.argmax(oracle.predict(x))
    change = signal_change(x, optimized)
    assert np.allclose(change[:, 0], np.abs(sine(64, 12)), atol=1e-9)


def test_optimize_threshold_zero_removes_irrelevant_bins():
    x = TimeSeries(sine(16, 2) + sine(16, 5))
    scores = np.zeros((9, 1))
    scores[2] = 1.0
    a_freq = AttributionMap(scores, FREQUENCY, 0, 'frequency', length=16)
    optimized = optimize_signal(x, a_freq, MaskPolicy.parse('threshold:0'))
    assert np.allclose(optimized.values[:, 0], sine(16, 2), atol=1e-9)


def test_optimize_topk_too_large():
    x = TimeSeries(sine(16, 2))
    a_freq = AttributionMap(np.zeros((9, 1)), FREQUENCY, 0, 'frequency',
                            length=16)
    with pytest.raises(InvalidPolicyError):
        optimize_signal(x, a_freq, MaskPolicy.parse('topk:10'))


@pytest.mark.parametrize('text', ['topk:0', 'threshold:1.5', 'hard',
                                  'topk:abc', 'soft:1'])
def test_invalid_policies(text):
    with pytest.raises(InvalidPolicyError):
        MaskPolicy.parse(text)


@pytest.mark.parametrize('text', ['soft', 'all', 'topk:3', 'threshold:0.5'])
def test_policy_strings(text):
    assert str(MaskPolicy.parse(text)) == text


def test_frequency_window_larger_than_bins():
    with pytest.raises(ConfigError):
        frequency_attribution(band_oracle(16), TimeSeries(sine(16, 5)),
                              OcclusionConfig(10))


def test_occlusion_and_frequency_share_target():
    oracle = linear_oracle(16, num_classes=3)
    x = TimeSeries(np.random.default_rng(4).normal(size=16))
    cfg = OcclusionConfig(target=2)
    assert frequency_attribution(oracle, x, cfg).target_class == 2
    assert occlusion_attribution(oracle, x, cfg).target_class == 2


def test_frequency_stride_larger_than_window():
    oracle = band_oracle(16)
    amap = frequency_attribution(oracle, TimeSeries(sine(16, 5)),
                                 OcclusionConfig(2, stride=5))
    assert np.all(np.isfinite(amap.scores))
    # windows cover bins 0-1, 5-6 and 7-8
    assert np.all(amap.scores[2:5, 0] == 0.0)
    assert amap.scores[5, 0] > 0.5


def test_threshold_zero_keeps_positive_relevance_everywhere():
    x = TimeSeries(sine(16, 2) + sine(16, 5) + 0.3)
    scores = np.full((9, 1), 0.5)
    scores[2] = 1.0
    a_freq = AttributionMap(scores, FREQUENCY, 0, 'frequency', length=16)
    optimized = optimize_signal(x, a_freq, MaskPolicy.parse('threshold:0'))
    identity = optimize_signal(x, a_freq, MaskPolicy.parse('all'))
    assert np.array_equal(optimized.values, identity.values)
    assert np.array_equal(optimized.values, x.values)


def test_threshold_is_relative_to_the_channel_peak():
    scores = np.array([[0.1, 2.0], [0.4, 1.0], [0.8, -1.0], [0.0, 0.9]])
    weights = MaskPolicy.parse('threshold:0.5').keep_weights(scores)
    assert weights[:, 0].tolist() == [0.0, 0.0, 1.0, 0.0]
    assert weights[:, 1].tolist() == [1.0, 0.0, 0.0, 0.0]


def test_absent_frequencies_have_exactly_zero_relevance():
    # a constant signal only carries energy on the DC bin
    x = TimeSeries(np.full(16, 0.7))
    amap = frequency_attribution(linear_oracle(16), x, OcclusionConfig(1))
    assert np.all(amap.scores[1:, 0] == 0.0)
