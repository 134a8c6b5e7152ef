# -*- coding: utf-8 -*-
"""
This module contains the frequency occlusion and its companions:

    - :func:`frequency_attribution` occludes windows of independent bins
      (together with their mirror bins, so the occluded signal stays real)
      and records the drop of the target class score.
    - :func:`project_to_input_space` turns a normalized frequency map into
      an input space map: ``|x - inverse(forward(x) * a_freq)|``.
    - :func:`optimize_signal` returns the optimized input
      ``inverse(forward(x) * mask(a_freq))``.

"""
import logging

import numpy as np

from specocc.api.errors import SymmetryViolationError
from specocc.api.signal import TimeSeries
from specocc.api.signal import band_component
from specocc.api.signal import channelwise_fft
from specocc.api.signal import num_frequencies
from specocc.api.signal import suppress_bins
from specocc.attribution.config import MaskPolicy
from specocc.attribution.config import OcclusionConfig
from specocc.attribution.maps import AttributionMap
from specocc.attribution.maps import FREQUENCY
from specocc.attribution.maps import INPUT
from specocc.attribution.maps import require_normalized
from specocc.attribution.occlusion import mean_of_windows
from specocc.attribution.occlusion import resolve_target
from specocc.attribution.occlusion import window_starts


def _logger():
    """ Returns the module's logger """
    return logging.getLogger(__name__)


def frequency_attribution(oracle, x, cfg=None):
    """
    Computes the frequency space occlusion map of ``x``.

    The window of the configuration is interpreted over the
    ``f = t // 2 + 1`` independent bins. Consumes exactly
    ``1 + (ceil((f - w) / stride) + 1) * s`` forward passes.

    :param oracle: black-box classifier
    :type oracle: specocc.models.ClassifierOracle
    :param x: the time series to explain
    :type x: specocc.api.TimeSeries
    :param cfg: occlusion configuration (baseline is ignored, occluded
        bins are zeroed)
    :rtype: specocc.attribution.AttributionMap
    """
    cfg = cfg or OcclusionConfig()
    if not isinstance(x, TimeSeries):
        x = TimeSeries(x)
    f = num_frequencies(x.length)
    cfg.validate(f)
    reference = oracle.predict(x)
    target = resolve_target(cfg, reference)
    reference_score = reference[target]
    values = x.values
    spectra = channelwise_fft(x)
    window = cfg.window
    starts = window_starts(f, window, cfg.stride)
    scores = np.zeros((f, x.channels))
    for channel in range(x.channels):
        drops = []
        for start in starts:
            keep = np.ones(f)
            keep[start:start + window] = 0.0
            occluded = values.copy()
            try:
                occluded[:, channel] = suppress_bins(
                    values[:, channel], keep, spectrum=spectra[channel])
            except SymmetryViolationError:
                # mirror bins are zeroed jointly, the inverse must be real
                _logger().exception('frequency occlusion produced a complex '
                                    'signal (bins %d:%d)', start,
                                    start + window)
                raise RuntimeError('internal defect: non real occlusion')
            score = oracle.predict(TimeSeries(occluded))[target]
            drops.append((start, reference_score - score))
        scores[:, channel] = mean_of_windows(drops, f, window)
    _logger().debug('frequency occlusion: %d windows x %d channels, '
                    'target %d', len(starts), x.channels, target)
    return AttributionMap(scores, FREQUENCY, target, 'frequency',
                          length=x.length,
                          config=cfg.with_target(target).to_dict())


def project_to_input_space(x, a_freq):
    """
    Back-projects a normalized frequency map to the input space.

    Every bin (and its mirror) of every channel is scaled by its relevance,
    the result is transformed back and subtracted from ``x``; the absolute
    value of the difference is the input space relevance.

    :param x: the explained time series
    :param a_freq: frequency map of ``x``, normalized to [0, 1]
    :rtype: specocc.attribution.AttributionMap
    :raises: DomainError, DimensionError, ContractViolationError (map not
        normalized)
    """
    if not isinstance(x, TimeSeries):
        x = TimeSeries(x)
    a_freq.check_domain(FREQUENCY)
    a_freq.check_signal(x)
    require_normalized(a_freq)
    values = x.values
    scores = np.zeros(x.shape)
    for channel in range(x.channels):
        # x - inverse(X * a) == inverse(X * (1 - a))
        scores[:, channel] = np.abs(band_component(
            values[:, channel], 1.0 - a_freq.scores[:, channel]))
    return AttributionMap(scores, INPUT, a_freq.target_class, a_freq.method,
                          length=x.length, config=a_freq.config)


def optimize_signal(x, a_freq, mask=None):
    """
    Returns the optimized input: ``x`` with every bin scaled by the keep
    weight the mask policy derives from the frequency map.

    :param x: the explained time series
    :param a_freq: frequency map of ``x``
    :param mask: mask policy (default: soft)
    :type mask: specocc.attribution.MaskPolicy
    :rtype: specocc.api.TimeSeries
    :raises: DomainError, DimensionError, InvalidPolicyError
    """
    if not isinstance(x, TimeSeries):
        x = TimeSeries(x)
    mask = mask or MaskPolicy()
    a_freq.check_domain(FREQUENCY)
    a_freq.check_signal(x)
    keep = mask.keep_weights(a_freq.scores)
    values = x.values
    optimized = np.empty(x.shape)
    for channel in range(x.channels):
        optimized[:, channel] = suppress_bins(values[:, channel],
                                              keep[:, channel])
    return TimeSeries(optimized)


def signal_change(x, optimized):
    """
    Returns ``|x - optimized|``, the intensity of the change an optimization
    applied to every time step.

    :rtype: numpy.ndarray
    """
    return np.abs(x.values - optimized.values)
