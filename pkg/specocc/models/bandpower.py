# -*- coding: utf-8 -*-
"""
This module contains the band power classifier, a synthetic oracle whose
decision depends only on the spectral energy found in a known set of
frequency bands. The bins listed by its rules are, by construction, the
ground truth relevant frequencies of the model.
"""
import logging

import numpy as np

from specocc.api.errors import InvalidSpecError
from specocc.api.errors import ShapeInconsistencyError
from specocc.api.signal import dft_forward
from specocc.api.signal import num_frequencies
from specocc.models.oracle import ClassifierOracle
from specocc.models.oracle import check_finite


def _logger():
    return logging.getLogger(__name__)


#: Default logit gain applied to ``energy - threshold``.
DEFAULT_SHARPNESS = 10.0


def one_sided_amplitudes(spectrum):
    """
    Returns the one sided amplitude of every independent bin: a sinusoid of
    amplitude ``A`` sitting exactly on bin ``k`` yields ``A`` at ``k``.

    :param spectrum: full spectrum of a real signal
    :type spectrum: specocc.api.Spectrum
    """
    t = spectrum.origin_length
    f = num_frequencies(t)
    amplitudes = np.abs(spectrum.bins[:f]) / t
    scale = np.full(f, 2.0)
    scale[0] = 1.0
    if t % 2 == 0:
        scale[-1] = 1.0
    return amplitudes * scale


def band_energy(signal, bin_low, bin_high, spectrum=None):
    """
    Returns the energy of a real signal in the inclusive bin range
    ``[bin_low, bin_high]``: the sum of the squared one sided amplitudes.

    :param signal: real vector
    :param bin_low: first bin of the band
    :param bin_high: last bin of the band
    :param spectrum: precomputed spectrum (optional)
    """
    if spectrum is None:
        spectrum = dft_forward(signal)
    amplitudes = one_sided_amplitudes(spectrum)
    return float(np.sum(amplitudes[bin_low:bin_high + 1] ** 2))


class BandRule(object):
    """
    A band rule votes for ``target_class`` with the logit
    ``sharpness * (energy(channel, [bin_low, bin_high]) - threshold)``.
    """
    def __init__(self, target_class, channel, bin_low, bin_high, threshold):
        self.target_class = int(target_class)
        self.channel = int(channel)
        self.bin_low = int(bin_low)
        self.bin_high = int(bin_high)
        self.threshold = float(threshold)

    @property
    def bins(self):
        """ The bins of the band """
        return range(self.bin_low, self.bin_high + 1)

    def to_dict(self):
        return {'class': self.target_class, 'channel': self.channel,
                'bin_low': self.bin_low, 'bin_high': self.bin_high,
                'threshold': self.threshold}

    def __eq__(self, other):
        return isinstance(other, BandRule) and \
            self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return 'BandRule(class=%d, channel=%d, bins=[%d, %d], ' \
               'threshold=%r)' % (self.target_class, self.channel,
                                  self.bin_low, self.bin_high,
                                  self.threshold)


class BandpowerOracle(ClassifierOracle):
    """
    Classifies a time series by the spectral energy found in per-class
    bands.

    The logit of a class is the sum of its rule votes; classes without any
    rule keep a logit of zero, so such a class (the default class) wins when
    no rule band carries more energy than its threshold.
    """
    kind = 'bandpower'

    def __init__(self, rules, num_classes, input_length, input_channels=1,
                 sharpness=DEFAULT_SHARPNESS):
        """
        :param rules: list of :class:`BandRule`
        :param num_classes: number of classes
        :param input_length: number of time steps
        :param input_channels: number of channels
        :param sharpness: logit gain
        """
        super(BandpowerOracle, self).__init__(
            num_classes, input_length, input_channels)
        self.rules = list(rules)
        if not self.rules:
            raise InvalidSpecError('a bandpower model needs at least one rule')
        self.sharpness = float(sharpness)
        check_finite('sharpness', np.array([self.sharpness]))
        check_finite('threshold', np.array([r.threshold for r in self.rules]))
        max_bin = self.expected_length // 2
        for rule in self.rules:
            if not 0 <= rule.target_class < self.num_classes:
                raise ShapeInconsistencyError(
                    '%r: class out of range [0, %d)' %
                    (rule, self.num_classes))
            if not 0 <= rule.channel < self.expected_channels:
                raise ShapeInconsistencyError(
                    '%r: channel out of range [0, %d)' %
                    (rule, self.expected_channels))
            if not 0 <= rule.bin_low <= rule.bin_high <= max_bin:
                raise ShapeInconsistencyError(
                    '%r: bins must satisfy 0 <= low <= high <= %d' %
                    (rule, max_bin))
        _logger().debug('bandpower oracle: %d rules over %d classes',
                        len(self.rules), self.num_classes)

    def _logits(self, values):
        logits = np.zeros(self.num_classes)
        spectra = {}
        for rule in self.rules:
            if rule.channel not in spectra:
                spectra[rule.channel] = dft_forward(values[:, rule.channel])
            energy = band_energy(None, rule.bin_low, rule.bin_high,
                                 spectrum=spectra[rule.channel])
            logits[rule.target_class] += self.sharpness * (
                energy - rule.threshold)
        return logits

    def relevant_bins(self, target_class=None):
        """
        Returns the ground truth relevant bins as a ``{channel: set(bins)}``
        dict.

        :param target_class: restrict to the rules of one class (optional)
        """
        relevant = {}
        for rule in self.rules:
            if target_class is None or rule.target_class == target_class:
                relevant.setdefault(rule.channel, set()).update(rule.bins)
        return relevant

    def parameters(self):
        return {'sharpness': self.sharpness,
                'rules': [rule.to_dict() for rule in self.rules]}


def make_bandpower_oracle(rules, input_length, input_channels=1,
                          num_classes=None, sharpness=DEFAULT_SHARPNESS):
    """
    Builds a band power oracle from per-class rules.

    Example::

        # class 1 wins when bin 5 carries more than 0.5 of energy
        oracle = make_bandpower_oracle({1: [(0, 5, 5, 0.5)]}, 64)

    :param rules: either a ``{class: [(channel, bin_low, bin_high,
        threshold), ...]}`` dict or a list of :class:`BandRule`
    :param input_length: number of time steps
    :param input_channels: number of channels
    :param num_classes: number of classes, defaults to the highest rule
        class + 1 (at least 2)
    :param sharpness: logit gain
    :rtype: BandpowerOracle
    :raises: InvalidSpecError if the rule set is empty.
    """
    if isinstance(rules, dict):
        rules = [BandRule(klass, *rule) for klass in sorted(rules)
                 for rule in rules[klass]]
    else:
        rules = list(rules)
    if not rules:
        raise InvalidSpecError('empty band rule set')
    if num_classes is None:
        num_classes = max(2, max(r.target_class for r in rules) + 1)
    return BandpowerOracle(rules, num_classes, input_length,
                           input_channels=input_channels, sharpness=sharpness)
