# -*- coding: utf-8 -*-
"""
This module contains the black-box classifier abstraction.

A classifier oracle maps a :class:`specocc.api.TimeSeries` to a vector of
softmax normalized class scores and counts every forward pass it performs.
Attribution methods only ever see this interface, which makes them
independent of the model architecture.
"""
import logging
import threading

import numpy as np

from specocc.api.errors import DimensionError
from specocc.api.errors import InvalidSpecError
from specocc.api.errors import NonFiniteParameterError
from specocc.api.signal import TimeSeries


def _logger():
    """ Returns the module's logger """
    return logging.getLogger(__name__)


def softmax(logits):
    """
    Numerically stable softmax.

    :param logits: vector of class logits
    :returns: vector of probabilities summing to one
    """
    logits = np.asarray(logits, dtype=float)
    exp = np.exp(logits - np.max(logits))
    return exp / np.sum(exp)


class ClassifierOracle(object):
    """
    Base class of the black-box classifiers.

    Subclasses must implement ``_logits(values)`` (``values`` being the
    validated ``(length, channels)`` array) and ``parameters()`` (the kind
    specific parameters of the model document).

    The forward pass counter is protected by a lock so that concurrent
    calls never lose increments. When an oracle is shipped to another
    process (it is picklable), the counts of the copy must be merged back
    with :meth:`add_forward_passes`.
    """
    #: Model kind identifier, as written in the model document.
    kind = None

    #: True if :meth:`logits` gives access to the pre-softmax scores
    exposes_logits = True

    @property
    def forward_pass_count(self):
        """ Number of forward passes performed so far. """
        with self._lock:
            return self._count

    def __init__(self, num_classes, expected_length, expected_channels):
        if int(num_classes) < 2:
            raise InvalidSpecError('a classifier needs at least two classes')
        if int(expected_length) < 1 or int(expected_channels) < 1:
            raise InvalidSpecError('input dimensions must be positive')
        self.num_classes = int(num_classes)
        self.expected_length = int(expected_length)
        self.expected_channels = int(expected_channels)
        self._lock = threading.Lock()
        self._count = 0

    def __getstate__(self):
        state = self.__dict__.copy()
        del state['_lock']
        return state

    def __setstate__(self, state):
        self.__dict__.update(state)
        self._lock = threading.Lock()

    def _values(self, x):
        if not isinstance(x, TimeSeries):
            x = TimeSeries(x)
        expected = (self.expected_length, self.expected_channels)
        if x.shape != expected:
            raise DimensionError(expected, x.shape)
        return x.values

    def _count_pass(self):
        with self._lock:
            self._count += 1

    def add_forward_passes(self, count):
        """
        Adds forward passes performed elsewhere (e.g. by a copy of the
        oracle living in a worker process).
        """
        with self._lock:
            self._count += int(count)

    def reset_forward_passes(self):
        """ Resets the forward pass counter to zero. """
        with self._lock:
            self._count = 0

    def logits(self, x):
        """
        Returns the pre-softmax class scores of ``x``. Counts as one forward
        pass.

        :param x: input time series
        :type x: specocc.api.TimeSeries
        :raises: DimensionError if x does not match the model input shape.
        """
        values = self._values(x)
        self._count_pass()
        return np.asarray(self._logits(values), dtype=float)

    def predict(self, x):
        """
        Returns the softmax class scores of ``x``. Counts as one forward
        pass.

        :param x: input time series
        :type x: specocc.api.TimeSeries
        :returns: vector of ``num_classes`` probabilities
        :raises: DimensionError if x does not match the model input shape.
        """
        values = self._values(x)
        self._count_pass()
        scores = softmax(self._logits(values))
        _logger().log(5, '%s forward pass -> %r', self.kind, scores)
        return scores

    def target_score(self, x, target, use_logits=False):
        """
        Returns the score of a single class, either the probability or the
        logit.

        :param x: input time series
        :param target: class index
        :param use_logits: True to return the pre-softmax score (only if the
            oracle exposes its logits)
        """
        if use_logits and self.exposes_logits:
            return float(self.logits(x)[target])
        return float(self.predict(x)[target])

    def _logits(self, values):
        raise NotImplementedError()

    def parameters(self):
        """
        Returns the kind specific parameters of the model document.
        """
        raise NotImplementedError()

    def __repr__(self):
        return '%s(num_classes=%d, input=(%d, %d))' % (
            self.__class__.__name__, self.num_classes, self.expected_length,
            self.expected_channels)


def check_finite(name, array):
    """
    Raises NonFiniteParameterError if ``array`` contains NaN/Inf values.
    """
    if not np.all(np.isfinite(array)):
        raise NonFiniteParameterError(name)
