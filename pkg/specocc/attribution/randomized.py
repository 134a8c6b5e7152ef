# -*- coding: utf-8 -*-
"""
This module contains the random baseline attribution.
"""
import numpy as np

from specocc.api.signal import TimeSeries
from specocc.api.signal import num_frequencies
from specocc.attribution.maps import AttributionMap
from specocc.attribution.maps import INPUT


def random_attribution(x, seed, domain=INPUT, target_class=0):
    """
    Returns uniform random scores in [0, 1), reproducible from ``seed``.

    :param x: the time series to "explain" (only its shape is used)
    :param seed: random seed
    :param domain: :data:`specocc.attribution.INPUT` or
        :data:`specocc.attribution.FREQUENCY`
    :param target_class: class recorded on the map
    """
    if not isinstance(x, TimeSeries):
        x = TimeSeries(x)
    rows = x.length if domain == INPUT else num_frequencies(x.length)
    rng = np.random.default_rng(seed)
    scores = rng.random((rows, x.channels))
    return AttributionMap(scores, domain, target_class, 'random',
                          length=x.length, config={'seed': seed})
