import numpy as np
import pytest

from specocc.api import Spectrum
from specocc.api import TimeSeries
from specocc.api import band_component
from specocc.api import channelwise_fft
from specocc.api import dft_forward
from specocc.api import dft_inverse
from specocc.api import expand_bins
from specocc.api import num_frequencies
from specocc.api import suppress_bins
from specocc.api.errors import InvalidInputError
from specocc.api.errors import SymmetryViolationError
from test.helpers import sine

LENGTHS = [1, 2, 7, 50, 64, 96, 128, 182, 1000]


def naive_dft(x):
    t = len(x)
    n = np.arange(t)
    return np.array([np.sum(x * np.exp(-2j * np.pi * k * n / t))
                     for k in range(t)])


@pytest.mark.parametrize('length', [1, 2, 3, 7, 8, 50, 64, 96])
def test_forward_matches_definition(length):
    x = np.random.default_rng(length).normal(size=length)
    assert np.allclose(dft_forward(x).bins, naive_dft(x), atol=1e-9)


def test_forward_examples():
    assert np.allclose(dft_forward([1.0, 0.0, 0.0, 0.0]).bins, [1, 1, 1, 1])
    assert np.allclose(dft_forward([1.0, 1.0, 1.0, 1.0]).bins, [4, 0, 0, 0])
    assert np.allclose(dft_forward([5.0]).bins, [5.0])


def test_round_trip_and_parseval():
    rng = np.random.default_rng(0)
    for i in range(200):
        length = LENGTHS[i % len(LENGTHS)]
        x = rng.normal(size=length)
        spectrum = dft_forward(x)
        assert spectrum.is_conjugate_symmetric()
        assert np.max(np.abs(dft_inverse(spectrum) - x)) < 1e-9
        energy = np.sum(x ** 2)
        assert abs(np.sum(np.abs(spectrum.bins) ** 2) / length - energy) <= \
            1e-9 * energy


def test_forward_rejects_non_finite():
    with pytest.raises(InvalidInputError):
        dft_forward([0.0, np.nan, 1.0])
    with pytest.raises(InvalidInputError):
        dft_forward([np.inf])
    with pytest.raises(InvalidInputError):
        dft_forward([])


def test_inverse_rejects_asymmetric_spectrum():
    with pytest.raises(SymmetryViolationError):
        dft_inverse(Spectrum([0.0, 1j, 0.0, 0.0]))


@pytest.mark.parametrize('length, expected', [
    (1, 1), (2, 2), (7, 4), (8, 5), (128, 65), (182, 92)])
def test_num_frequencies(length, expected):
    assert num_frequencies(length) == expected


def test_expand_bins():
    assert list(expand_bins([0, 1, 2, 3], 7)) == [0, 1, 2, 3, 3, 2, 1]
    assert list(expand_bins([0, 1, 2, 3, 4], 8)) == [0, 1, 2, 3, 4, 3, 2, 1]
    assert list(expand_bins([5], 1)) == [5]
    with pytest.raises(InvalidInputError):
        expand_bins([0, 1], 8)


def test_time_series_shape():
    x = TimeSeries([1.0, 2.0, 3.0])
    assert x.shape == (3, 1)
    assert x.length == 3
    assert x.channels == 1
    x = TimeSeries(np.zeros((5, 2)))
    assert x.length == 5 and x.channels == 2
    assert list(x.channel(1)) == [0.0] * 5


def test_time_series_is_immutable():
    source = np.zeros(4)
    x = TimeSeries(source)
    source[0] = 1.0
    assert x.values[0, 0] == 0.0
    with pytest.raises(ValueError):
        x.values[0, 0] = 1.0


@pytest.mark.parametrize('values', [
    [], [[np.nan]], [1.0, np.inf], np.zeros((2, 2, 2))])
def test_time_series_rejects_invalid_values(values):
    with pytest.raises(InvalidInputError):
        TimeSeries(values)


def test_time_series_replace():
    x = TimeSeries(np.zeros((3, 2)))
    assert x.replace(np.ones((3, 2))) == TimeSeries(np.ones((3, 2)))
    with pytest.raises(InvalidInputError):
        x.replace(np.ones((2, 2)))


def test_channelwise_fft_preserves_channel_order():
    x = TimeSeries(np.stack([sine(16, 2), sine(16, 5)], axis=1))
    spectra = channelwise_fft(x)
    assert len(spectra) == 2
    assert np.argmax(np.abs(spectra[0].bins[:9])) == 2
    assert np.argmax(np.abs(spectra[1].bins[:9])) == 5


def test_suppress_bins_keep_all_is_identity():
    x = np.random.default_rng(3).normal(size=33)
    assert np.array_equal(suppress_bins(x, np.ones(17)), x)


@pytest.mark.parametrize('length', [32, 33])
def test_suppress_bins_removes_one_component(length):
    x = sine(length, 3) + sine(length, 7, phase=0.3)
    keep = np.ones(num_frequencies(length))
    keep[3] = 0.0
    assert np.allclose(suppress_bins(x, keep), sine(length, 7, phase=0.3),
                       atol=1e-9)


def test_band_component():
    x = sine(40, 4) + 0.5 * sine(40, 11)
    weights = np.zeros(21)
    weights[11] = 1.0
    assert np.allclose(band_component(x, weights), 0.5 * sine(40, 11),
                       atol=1e-9)
