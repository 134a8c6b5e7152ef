# -*- coding: utf-8 -*-
"""
This module generates synthetic datasets with a known ground truth: every
class owns a band of frequency bins, the samples of a class are sums of
sinusoids sitting on the bins of its band (random phases) plus gaussian
noise, and a band power classifier watching the bands classifies the
noiseless samples perfectly.

Synthetic spec document (json)::

    {
        "bands": [[3, 3], [9, 9]],    # inclusive bin range of every class
        "length": 128,
        "channels": 1,
        "count": 100,
        "noise": 0.0,
        "amplitude": 1.0,
        "seed": 0
    }

"""
import json
import logging
import os

import numpy as np

from specocc.api.errors import ConfigError
from specocc.api.errors import InvalidSpecError
from specocc.api.errors import MissingPathError
from specocc.data.dataset import Dataset
from specocc.models.bandpower import BandRule
from specocc.models.bandpower import DEFAULT_SHARPNESS
from specocc.models.spec import ModelSpec


def _logger():
    """ Returns the module's logger """
    return logging.getLogger(__name__)


#: Share of the in-band energy a class rule requires (per bin).
THRESHOLD_RATIO = 0.25


def _as_band(band):
    if isinstance(band, (int, np.integer)):
        return int(band), int(band)
    low, high = band
    return int(low), int(high)


class SyntheticSpec(object):
    """
    Description of a synthetic dataset.
    """
    def __init__(self, bands, length=128, channels=1, count=100, noise=0.0,
                 seed=0, amplitude=1.0, sharpness=DEFAULT_SHARPNESS,
                 name='synthetic'):
        """
        :param bands: one band per class, either a bin or an inclusive
            ``(bin_low, bin_high)`` range
        :param length: number of time steps
        :param channels: number of channels (every channel carries the
            class band)
        :param count: number of samples
        :param noise: standard deviation of the additive gaussian noise
        :param seed: random seed
        :param amplitude: amplitude of every sinusoid
        :param sharpness: logit gain of the matching classifier
        :param name: dataset name
        """
        self.bands = [_as_band(band) for band in bands]
        self.length = int(length)
        self.channels = int(channels)
        self.count = int(count)
        self.noise = float(noise)
        self.seed = int(seed)
        self.amplitude = float(amplitude)
        self.sharpness = float(sharpness)
        self.name = name
        self.validate()

    def validate(self):
        """
        :raises: InvalidSpecError for empty, out of range or overlapping
            bands and negative noise
        """
        if len(self.bands) < 2:
            raise InvalidSpecError('a synthetic dataset needs at least 2 '
                                   'classes')
        if self.noise < 0:
            raise InvalidSpecError('noise must be >= 0')
        if self.count < 1 or self.channels < 1:
            raise InvalidSpecError('count and channels must be >= 1')
        for low, high in self.bands:
            # DC and Nyquist bins have no phase freedom
            if not 1 <= low <= high or 2 * high >= self.length:
                raise InvalidSpecError(
                    'band [%d, %d] must satisfy 1 <= low <= high < %g' %
                    (low, high, self.length / 2.0))
        ordered = sorted(self.bands)
        for (_, high), (low, _) in zip(ordered, ordered[1:]):
            if low <= high:
                raise InvalidSpecError('overlapping bands: %r' % ordered)

    def rules(self):
        """ The band rules of the matching classifier """
        rules = []
        for klass, (low, high) in enumerate(self.bands):
            threshold = THRESHOLD_RATIO * self.amplitude ** 2
            for channel in range(self.channels):
                rules.append(BandRule(klass, channel, low, high, threshold))
        return rules

    def model_spec(self):
        """
        :rtype: specocc.models.ModelSpec
        """
        return ModelSpec('bandpower', len(self.bands), self.length,
                         self.channels, {
                             'sharpness': self.sharpness,
                             'rules': [r.to_dict() for r in self.rules()]})

    def to_dict(self):
        return {'bands': [list(band) for band in self.bands],
                'length': self.length, 'channels': self.channels,
                'count': self.count, 'noise': self.noise, 'seed': self.seed,
                'amplitude': self.amplitude, 'sharpness': self.sharpness,
                'name': self.name}

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(**data)
        except TypeError as e:
            raise ConfigError('invalid synthetic spec: %s' % e)

    @classmethod
    def load(cls, path):
        if not os.path.isfile(path):
            raise MissingPathError(path, 'synthetic spec')
        with open(path, 'r') as f:
            try:
                return cls.from_dict(json.load(f))
            except ValueError as e:
                raise ConfigError('%s: %s' % (path, e))

    def save(self, path):
        with open(path, 'w') as f:
            json.dump(self.to_dict(), f, sort_keys=True, indent=1)
            f.write('\n')

    def generate(self):
        """
        Generates the dataset.

        :returns: ``(Dataset, ModelSpec)``
        """
        rng = np.random.default_rng(self.seed)
        steps = np.arange(self.length)
        classes = len(self.bands)
        labels = np.arange(self.count) % classes
        samples = []
        for label in labels:
            low, high = self.bands[label]
            values = np.zeros((self.length, self.channels))
            for channel in range(self.channels):
                for k in range(low, high + 1):
                    phase = rng.uniform(0.0, 2 * np.pi)
                    values[:, channel] += self.amplitude * np.cos(
                        2 * np.pi * k * steps / self.length + phase)
            if self.noise > 0:
                values += rng.normal(0.0, self.noise, values.shape)
            samples.append(values)
        dataset = Dataset(samples, labels, self.name, 'test',
                          label_names=[str(c) for c in range(classes)])
        _logger().info('generated %r (bands=%r, noise=%g, seed=%d)',
                       dataset, self.bands, self.noise, self.seed)
        return dataset, self.model_spec()


def parse_bands(text):
    """
    Parses a band list: comma separated bins or inclusive ``low-high``
    ranges, one per class, e.g. ``"3,9"`` or ``"2-4,10-12"``.

    :raises: InvalidSpecError
    """
    if not isinstance(text, str):
        return [_as_band(band) for band in text]
    bands = []
    for field in text.split(','):
        try:
            bounds = [int(b) for b in field.strip().split('-')]
            bands.append(_as_band(bounds[0] if len(bounds) == 1 else bounds))
        except ValueError:
            raise InvalidSpecError('invalid band %r' % field)
    return bands


def generate_synthetic(bands, length=128, channels=1, count=100, noise=0.0,
                       seed=0, **kwargs):
    """
    Generates a synthetic dataset and the spec of the band power classifier
    that classifies it.

    :param bands: one band per class (bin or inclusive bin range)
    :param length: number of time steps
    :param channels: number of channels
    :param count: number of samples (labels are assigned round robin)
    :param noise: gaussian noise standard deviation
    :param seed: random seed
    :param kwargs: other :class:`SyntheticSpec` parameters
    :returns: ``(Dataset, ModelSpec)``
    :raises: InvalidSpecError if bands overlap
    """
    return SyntheticSpec(bands, length, channels, count, noise, seed,
                         **kwargs).generate()
