"""
Functions and classes shared by the test modules.
"""
import numpy as np

from specocc.api import TimeSeries
from specocc.models import ClassifierOracle
from specocc.models import LinearOracle
from specocc.models import make_bandpower_oracle


class ConstantOracle(ClassifierOracle):
    """
    Oracle ignoring its input.
    """
    kind = 'constant'

    def __init__(self, logits, input_length, input_channels=1):
        super(ConstantOracle, self).__init__(len(logits), input_length,
                                             input_channels)
        self.constant = np.asarray(logits, dtype=float)

    def _logits(self, values):
        return self.constant.copy()

    def parameters(self):
        return {'logits': self.constant.tolist()}


def sine(length, k, amplitude=1.0, phase=0.0):
    """ Sinusoid sitting exactly on bin ``k`` """
    steps = np.arange(length)
    return amplitude * np.cos(2 * np.pi * k * steps / length + phase)


def series(*channels):
    """ Builds a time series from channel vectors """
    return TimeSeries(np.stack(channels, axis=1))


def linear_oracle(length, channels=1, num_classes=2, seed=0):
    """ Random linear classifier """
    rng = np.random.default_rng(seed)
    weights = rng.normal(size=(num_classes, length * channels))
    bias = rng.normal(size=num_classes)
    return LinearOracle(weights, bias, num_classes, length, channels)


def band_oracle(length, bin_low=5, bin_high=5, threshold=0.5, channels=1):
    """
    Band power classifier voting for class 1 when its band carries more
    than ``threshold`` of energy (class 0 otherwise).
    """
    return make_bandpower_oracle(
        {1: [(0, bin_low, bin_high, threshold)]}, length,
        input_channels=channels)


def write_lines(path, lines):
    with open(str(path), 'w') as f:
        f.write('\n'.join(lines) + '\n')
    return str(path)
