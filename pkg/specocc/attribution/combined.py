# -*- coding: utf-8 -*-
"""
This module contains the combined attribution: the frequency attribution
first removes irrelevant frequencies from the input, then the traditional
occlusion is computed on the optimized signal.
"""
from specocc.api.signal import TimeSeries
from specocc.attribution.config import MaskPolicy
from specocc.attribution.config import OcclusionConfig
from specocc.attribution.frequency import frequency_attribution
from specocc.attribution.frequency import optimize_signal
from specocc.attribution.maps import AttributionMap
from specocc.attribution.occlusion import occlusion_attribution


def combined_attribution(oracle, x, cfg=None, mask=None, frequency_cfg=None):
    """
    Occlusion of the frequency optimized input.

    Both stages track the same class: the configured target or the class
    predicted for the unmodified input.

    :param oracle: black-box classifier
    :param x: the time series to explain
    :param cfg: input space occlusion configuration
    :param mask: mask policy used to optimize the signal (default: soft)
    :param frequency_cfg: configuration of the frequency stage (default:
        ``cfg``)
    :rtype: specocc.attribution.AttributionMap
    """
    if not isinstance(x, TimeSeries):
        x = TimeSeries(x)
    cfg = cfg or OcclusionConfig()
    mask = mask or MaskPolicy()
    a_freq = frequency_attribution(oracle, x, frequency_cfg or cfg)
    optimized = optimize_signal(x, a_freq, mask)
    amap = occlusion_attribution(oracle, optimized,
                                 cfg.with_target(a_freq.target_class))
    config = dict(amap.config)
    config['mask'] = str(mask)
    return AttributionMap(amap.scores, amap.domain, amap.target_class,
                          'combined', length=amap.length, config=config)
