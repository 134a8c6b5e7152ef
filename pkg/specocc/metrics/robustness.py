# -*- coding: utf-8 -*-
"""
This module contains the robustness metrics of an explanation:

    - infidelity: expected squared gap between the score change an
      explanation predicts for a perturbation and the actual score change
    - sensitivity: largest relative change of the explanation under small
      input perturbations (the attribution is recomputed per perturbation)

Both are Monte Carlo estimates drawn from ``numpy.random.default_rng(seed)``
in a fixed order, so the first ``n`` draws of a run with ``2n`` draws are
the draws of the run with ``n`` draws.
"""
import logging

import numpy as np

from specocc.api.signal import TimeSeries
from specocc.attribution.maps import INPUT


def _logger():
    """ Returns the module's logger """
    return logging.getLogger(__name__)


#: Default relative standard deviation of the infidelity perturbations.
DEFAULT_SIGMA = 0.1
#: Default number of Monte Carlo draws.
DEFAULT_SAMPLES = 16
#: Default L-inf radius of the sensitivity perturbations.
DEFAULT_RADIUS = 0.05

#: Below this norm a map is considered null and sensitivity is absolute.
ZERO_NORM = 1e-12


def perturbation_scale(x, sigma, relative=True):
    """
    Returns the per-channel standard deviation of the infidelity noise:
    ``sigma * std(channel)`` when relative (``sigma`` for constant
    channels), ``sigma`` otherwise.
    """
    scale = np.full(x.channels, float(sigma))
    if relative:
        std = x.values.std(axis=0)
        scale = np.where(std > 0, sigma * std, sigma)
    return scale


def infidelity(oracle, x, amap, sigma=DEFAULT_SIGMA, n=DEFAULT_SAMPLES,
               seed=0, relative=True, use_logits=True):
    """
    Estimates ``E[(I . a - (f(x) - f(x - I)))^2]`` with ``I`` elementwise
    gaussian noise and ``f`` the target class score.

    :param oracle: black-box classifier
    :param x: the explained time series
    :param amap: input space map of ``x``
    :param sigma: noise standard deviation (relative to the channel
        standard deviation unless ``relative`` is False)
    :param n: number of draws
    :param seed: random seed
    :param relative: scale sigma by the channel standard deviation
    :param use_logits: evaluate ``f`` on the pre-softmax score when the
        oracle exposes its logits
    :returns: non negative estimate
    """
    if not isinstance(x, TimeSeries):
        x = TimeSeries(x)
    amap.check_domain(INPUT)
    amap.check_signal(x)
    target = amap.target_class
    rng = np.random.default_rng(seed)
    scale = perturbation_scale(x, sigma, relative)
    reference = oracle.target_score(x, target, use_logits)
    total = 0.0
    for _ in range(int(n)):
        noise = rng.standard_normal(x.shape) * scale
        perturbed = oracle.target_score(TimeSeries(x.values - noise), target,
                                        use_logits)
        predicted = float(np.sum(noise * amap.scores))
        total += (predicted - (reference - perturbed)) ** 2
    return total / int(n)


def sensitivity(attribution_fn, oracle, x, radius=DEFAULT_RADIUS,
                n=DEFAULT_SAMPLES, seed=0):
    """
    Estimates ``max ||a(x + d) - a(x)|| / ||a(x)||`` over ``n`` uniform
    perturbations ``||d||_inf <= radius`` (absolute norm when ``a(x)`` is
    null).

    :param attribution_fn: callable ``(oracle, x) -> AttributionMap``
    :param oracle: black-box classifier
    :param x: the explained time series
    :param radius: perturbation radius
    :param n: number of perturbations
    :param seed: random seed
    """
    if not isinstance(x, TimeSeries):
        x = TimeSeries(x)
    rng = np.random.default_rng(seed)
    base = attribution_fn(oracle, x).scores
    norm = float(np.linalg.norm(base))
    worst = 0.0
    for _ in range(int(n)):
        delta = rng.uniform(-radius, radius, size=x.shape)
        perturbed = attribution_fn(oracle, TimeSeries(x.values + delta))
        distance = float(np.linalg.norm(perturbed.scores - base))
        if norm >= ZERO_NORM:
            distance /= norm
        worst = max(worst, distance)
    return worst
