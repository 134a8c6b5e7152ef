# -*- coding: utf-8 -*-
"""
This module contains the configuration objects of the attribution methods:
the occlusion configuration and the mask policies used to optimize a
signal from a frequency attribution.
"""
import numpy as np

from specocc.api.errors import ConfigError
from specocc.api.errors import InvalidPolicyError
from specocc.attribution.maps import normalize_scores


class OcclusionConfig(object):
    """
    Parameters of an occlusion sweep.

    The same configuration is used for input space occlusion (window over
    time steps) and frequency occlusion (window over independent bins).
    """
    #: Occluded input positions are set to zero.
    ZERO = 'zero'
    #: Occluded input positions are set to the mean of their channel.
    CHANNEL_MEAN = 'channel-mean'

    BASELINES = (ZERO, CHANNEL_MEAN)

    @property
    def stride(self):
        """ Step between two windows, defaults to the window size. """
        return self.window if self._stride is None else self._stride

    def __init__(self, window=1, stride=None, baseline=ZERO, target=None):
        """
        :param window: number of contiguous positions/bins occluded per
            forward pass
        :param stride: step between windows (default: ``window``)
        :param baseline: fill policy for occluded input positions
        :param target: tracked class, None to use the class predicted for
            the unmodified input.
        """
        self.window = int(window)
        self._stride = None if stride is None else int(stride)
        self.baseline = baseline
        self.target = None if target is None else int(target)
        if self.window < 1:
            raise ConfigError('window must be >= 1, got %d' % self.window)
        if self.stride < 1:
            raise ConfigError('stride must be >= 1, got %d' % self.stride)
        if baseline not in self.BASELINES:
            raise ConfigError('unknown baseline %r, expected one of %s' %
                              (baseline, ', '.join(self.BASELINES)))

    def validate(self, units):
        """
        Checks the window fits the number of occludable units (time steps
        or independent bins).

        :raises: ConfigError
        """
        if self.window > units:
            raise ConfigError('window %d larger than the %d occludable units'
                              % (self.window, units))

    def with_target(self, target):
        """ Returns a copy tracking the given class. """
        return OcclusionConfig(self.window, self._stride, self.baseline,
                               target)

    def to_dict(self):
        return {'window': self.window, 'stride': self.stride,
                'baseline': self.baseline, 'target': self.target}

    @classmethod
    def from_dict(cls, data):
        return cls(data.get('window', 1), data.get('stride'),
                   data.get('baseline', cls.ZERO), data.get('target'))

    def __repr__(self):
        return 'OcclusionConfig(%r)' % self.to_dict()


class MaskPolicy(object):
    """
    Turns a frequency attribution into keep weights in [0, 1] over the
    independent bins of every channel:

        - soft: the per-channel min-max normalized relevance
        - topk: 1 for the k most relevant bins of a channel, 0 elsewhere
          (ties broken by ascending bin index)
        - threshold: 1 where the relevance is strictly above the threshold
          times the largest positive relevance of the channel, 0 elsewhere
          (threshold 0 keeps exactly the bins with a positive relevance)
        - all: 1 everywhere (identity optimisation)

    A policy is written ``soft``, ``all``, ``topk:K`` or ``threshold:T`` on
    the command line.
    """
    SOFT = 'soft'
    TOPK = 'topk'
    THRESHOLD = 'threshold'
    ALL = 'all'

    def __init__(self, kind=SOFT, k=None, threshold=None):
        self.kind = kind
        self.k = k
        self.threshold = threshold
        if kind == self.TOPK:
            if k is None or int(k) < 1:
                raise InvalidPolicyError('topk needs k >= 1, got %r' % (k, ))
            self.k = int(k)
        elif kind == self.THRESHOLD:
            if threshold is None or not 0.0 <= float(threshold) <= 1.0:
                raise InvalidPolicyError(
                    'threshold must lie in [0, 1], got %r' % (threshold, ))
            self.threshold = float(threshold)
        elif kind not in (self.SOFT, self.ALL):
            raise InvalidPolicyError('unknown mask policy %r' % (kind, ))

    @classmethod
    def parse(cls, text):
        """
        Parses a policy string (``soft``, ``all``, ``topk:3``,
        ``threshold:0.5``).

        :raises: InvalidPolicyError
        """
        kind, _, arg = text.strip().partition(':')
        try:
            if kind == cls.TOPK:
                return cls(kind, k=int(arg))
            if kind == cls.THRESHOLD:
                return cls(kind, threshold=float(arg))
        except ValueError:
            raise InvalidPolicyError('invalid mask policy %r' % (text, ))
        if arg:
            raise InvalidPolicyError('invalid mask policy %r' % (text, ))
        return cls(kind)

    def keep_weights(self, scores):
        """
        Computes the keep weights of a frequency relevance matrix.

        :param scores: ``(bins, channels)`` relevance matrix
        :returns: ``(bins, channels)`` weights in [0, 1]
        :raises: InvalidPolicyError if k exceeds the number of bins.
        """
        scores = np.asarray(scores, dtype=float)
        if self.kind == self.ALL:
            return np.ones_like(scores)
        if self.kind == self.SOFT:
            return normalize_scores(scores)
        if self.kind == self.THRESHOLD:
            peak = np.maximum(scores.max(axis=0), 0.0)
            return (scores > self.threshold * peak).astype(float)
        if self.k > scores.shape[0]:
            raise InvalidPolicyError('topk: k=%d exceeds the %d bins' %
                                     (self.k, scores.shape[0]))
        weights = np.zeros_like(scores)
        for channel in range(scores.shape[1]):
            order = np.argsort(-scores[:, channel], kind='stable')
            weights[order[:self.k], channel] = 1.0
        return weights

    def __str__(self):
        if self.kind == self.TOPK:
            return '%s:%d' % (self.kind, self.k)
        if self.kind == self.THRESHOLD:
            return '%s:%r' % (self.kind, self.threshold)
        return self.kind

    def __repr__(self):
        return 'MaskPolicy(%r)' % str(self)
