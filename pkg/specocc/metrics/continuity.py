"""
This module contains the continuity metric.
"""
import numpy as np

from specocc.attribution.maps import INPUT


def continuity(amap):
    """
    Total variation of an input space map along the time axis, summed over
    channels. Lower values mean smoother maps.

    :raises: DomainError for frequency space maps.
    """
    amap.check_domain(INPUT)
    return float(np.sum(np.abs(np.diff(amap.scores, axis=0))))
