# -*- coding: utf-8 -*-
"""
This module contains the traditional (input space) occlusion.

The relevance of a window is the drop of the target class score when the
window is replaced by the baseline::

    drop(i) = score(target | x) - score(target | x with window i occluded)

Positions covered by several windows receive the mean of the drops,
positions skipped by a stride larger than the window receive 0.
"""
import logging

import numpy as np

from specocc.api.signal import TimeSeries
from specocc.attribution.config import OcclusionConfig
from specocc.attribution.maps import AttributionMap
from specocc.attribution.maps import INPUT


def _logger():
    """ Returns the module's logger """
    return logging.getLogger(__name__)


def window_starts(units, window, stride):
    """
    Returns the start index of every occlusion window.

    Windows start every ``stride`` units and the last window is aligned on
    the end, which yields ``ceil((units - window) / stride) + 1`` windows.

    :param units: number of occludable units
    :param window: window size
    :param stride: step between windows
    """
    starts = list(range(0, units - window, stride))
    starts.append(units - window)
    return starts


def resolve_target(cfg, reference):
    """
    Returns the tracked class: the configured one or the argmax of the
    reference prediction.
    """
    if cfg.target is not None:
        return cfg.target
    return int(np.argmax(reference))


def mean_of_windows(drops, units, window):
    """
    Spreads window drops over the units they cover and averages. Units no
    window covers (stride larger than the window) get a relevance of 0.

    :param drops: list of ``(start, drop)``
    :param units: number of units
    :param window: window size
    """
    totals = np.zeros(units)
    counts = np.zeros(units)
    for start, drop in drops:
        totals[start:start + window] += drop
        counts[start:start + window] += 1
    means = np.zeros(units)
    covered = counts > 0
    means[covered] = totals[covered] / counts[covered]
    return means


def occlusion_attribution(oracle, x, cfg=None):
    """
    Computes the input space occlusion map of ``x``.

    Consumes exactly ``1 + (ceil((t - w) / stride) + 1) * s`` forward passes.

    :param oracle: black-box classifier
    :type oracle: specocc.models.ClassifierOracle
    :param x: the time series to explain
    :type x: specocc.api.TimeSeries
    :param cfg: occlusion configuration
    :type cfg: specocc.attribution.OcclusionConfig
    :rtype: specocc.attribution.AttributionMap
    :raises: DimensionError, ConfigError (window larger than t)
    """
    cfg = cfg or OcclusionConfig()
    if not isinstance(x, TimeSeries):
        x = TimeSeries(x)
    cfg.validate(x.length)
    reference = oracle.predict(x)
    target = resolve_target(cfg, reference)
    reference_score = reference[target]
    values = x.values
    window = cfg.window
    starts = window_starts(x.length, window, cfg.stride)
    scores = np.zeros(x.shape)
    for channel in range(x.channels):
        if cfg.baseline == OcclusionConfig.CHANNEL_MEAN:
            fill = float(np.mean(values[:, channel]))
        else:
            fill = 0.0
        drops = []
        for start in starts:
            occluded = values.copy()
            occluded[start:start + window, channel] = fill
            score = oracle.predict(TimeSeries(occluded))[target]
            drops.append((start, reference_score - score))
        scores[:, channel] = mean_of_windows(drops, x.length, window)
    _logger().debug('occlusion: %d windows x %d channels, target %d',
                    len(starts), x.channels, target)
    return AttributionMap(scores, INPUT, target, 'occlusion',
                          length=x.length, config=cfg.with_target(
                              target).to_dict())
