# -*- coding: utf-8 -*-
"""
This module contains the deletion test.

Units (time steps or independent bins, per channel) are removed in
decreasing order of relevance and the target class score is recorded after
every step. The faster the score collapses, the better the attribution;
the area under the curve summarizes the collapse (lower is better).
"""
import logging

import numpy as np

from specocc.api.errors import ConfigError
from specocc.api.signal import TimeSeries
from specocc.api.signal import suppress_bins
from specocc.attribution.config import OcclusionConfig
from specocc.attribution.maps import INPUT


def _logger():
    """ Returns the module's logger """
    return logging.getLogger(__name__)


#: Default number of evenly spaced deletion fractions.
DEFAULT_STEPS = 50


class DeletionCurve(object):
    """
    Target class probability as a function of the deleted fraction.
    """
    def __init__(self, fractions, scores, space, target_class=None):
        """
        :param fractions: strictly increasing fractions, starting at 0
        :param scores: target class probabilities (same length)
        :param space: :data:`specocc.attribution.INPUT` or
            :data:`specocc.attribution.FREQUENCY`
        :param target_class: tracked class
        """
        self.fractions = np.asarray(fractions, dtype=float)
        self.scores = np.asarray(scores, dtype=float)
        self.space = space
        self.target_class = target_class
        if self.fractions.shape != self.scores.shape:
            raise ConfigError('fractions and scores must have the same size')

    def __len__(self):
        return len(self.fractions)

    def __repr__(self):
        return 'DeletionCurve(space=%r, steps=%d)' % (self.space, len(self))


def deletion_fractions(units, steps=DEFAULT_STEPS):
    """
    Returns the deletion fractions: ``steps`` evenly spaced values in
    [0, 1], or one step per unit when ``steps`` is None.

    :raises: ConfigError if steps < 2
    """
    if steps is None:
        return np.arange(units + 1) / float(units)
    if int(steps) < 2:
        raise ConfigError('a deletion curve needs at least 2 steps')
    return np.linspace(0.0, 1.0, int(steps))


def deletion_curve(oracle, x, amap, space=None, steps=DEFAULT_STEPS,
                   baseline=OcclusionConfig.ZERO):
    """
    Runs a deletion test.

    Input space: deleted time steps are set to the baseline (zero or the
    channel mean of the unmodified input). Frequency space: deleted bins
    and their mirrors are zeroed, then the channel is transformed back.
    Ties in relevance are broken by ascending unit index.

    :param oracle: black-box classifier
    :param x: the explained time series
    :param amap: attribution map of ``x``, in the domain ``space``
    :param space: deletion space, defaults to the map domain
    :param steps: number of fractions (None for one step per unit)
    :param baseline: input space fill policy
    :rtype: DeletionCurve
    :raises: DomainError if the map does not live in ``space``
    """
    if not isinstance(x, TimeSeries):
        x = TimeSeries(x)
    space = space or amap.domain
    amap.check_domain(space)
    amap.check_signal(x)
    target = amap.target_class
    rows, channels = amap.scores.shape
    units = rows * channels
    order = np.argsort(-amap.scores.ravel(), kind='stable')
    fractions = deletion_fractions(units, steps)
    counts = np.rint(fractions * units).astype(int)
    values = x.values
    if baseline == OcclusionConfig.CHANNEL_MEAN:
        fill = values.mean(axis=0)
    else:
        fill = np.zeros(channels)
    cache = {}
    scores = []
    for count in counts:
        if count not in cache:
            deleted = np.zeros(units, dtype=bool)
            deleted[order[:count]] = True
            deleted = deleted.reshape(rows, channels)
            if not count:
                modified = x
            elif space == INPUT:
                modified = TimeSeries(np.where(deleted, fill, values))
            else:
                modified = np.empty(x.shape)
                for channel in range(channels):
                    keep = 1.0 - deleted[:, channel]
                    modified[:, channel] = suppress_bins(
                        values[:, channel], keep)
                modified = TimeSeries(modified)
            cache[count] = float(oracle.predict(modified)[target])
        scores.append(cache[count])
    _logger().log(5, 'deletion curve (%s): %r', space, scores)
    return DeletionCurve(fractions, scores, space, target_class=target)


def auc(curve):
    """
    Trapezoidal area under a deletion curve, in [0, 1].

    :type curve: DeletionCurve
    """
    widths = np.diff(curve.fractions)
    heights = (curve.scores[1:] + curve.scores[:-1]) / 2.0
    return float(np.sum(widths * heights))
