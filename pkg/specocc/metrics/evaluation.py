# -*- coding: utf-8 -*-
"""
This module evaluates the attribution methods on one sample: it computes
the map of every method and derives the requested metrics from it.

Every method is evaluated through its input space map (frequency maps are
normalized then back-projected). The deletion test may also run in the
frequency space, or in the space the method natively attributes.
"""
import logging

import numpy as np

from specocc.api.errors import ConfigError
from specocc.api.errors import DomainError
from specocc.api.signal import TimeSeries
from specocc.attribution.combined import combined_attribution
from specocc.attribution.config import MaskPolicy
from specocc.attribution.config import OcclusionConfig
from specocc.attribution.frequency import frequency_attribution
from specocc.attribution.frequency import project_to_input_space
from specocc.attribution.maps import FREQUENCY
from specocc.attribution.maps import INPUT
from specocc.attribution.maps import METHODS
from specocc.attribution.maps import normalize
from specocc.attribution.occlusion import occlusion_attribution
from specocc.attribution.randomized import random_attribution
from specocc.metrics.continuity import continuity
from specocc.metrics.deletion import DEFAULT_STEPS
from specocc.metrics.deletion import auc
from specocc.metrics.deletion import deletion_curve
from specocc.metrics.report import METRICS
from specocc.metrics.report import MetricReport
from specocc.metrics.robustness import DEFAULT_RADIUS
from specocc.metrics.robustness import DEFAULT_SAMPLES
from specocc.metrics.robustness import DEFAULT_SIGMA
from specocc.metrics.robustness import infidelity
from specocc.metrics.robustness import sensitivity


def _logger():
    """ Returns the module's logger """
    return logging.getLogger(__name__)


#: Deletion in the space a method natively attributes.
ATTRIBUTION_SPACE = 'attribution'

DELETION_SPACES = (INPUT, FREQUENCY, ATTRIBUTION_SPACE)


def sample_seed(seed, sample_id, salt=0):
    """
    Derives the seed of one sample from the run seed, so results do not
    depend on the order (or the process) samples are evaluated in.
    """
    sequence = np.random.SeedSequence([int(seed), int(sample_id), int(salt)])
    return int(sequence.generate_state(1)[0])


class EvaluationSettings(object):
    """
    Metric parameters of an evaluation run.
    """
    def __init__(self, metrics=METRICS, sigma=DEFAULT_SIGMA,
                 n_perturb=DEFAULT_SAMPLES, radius=DEFAULT_RADIUS,
                 steps=DEFAULT_STEPS, seed=0, deletion_space=INPUT,
                 baseline=OcclusionConfig.ZERO):
        self.metrics = tuple(metrics)
        self.sigma = float(sigma)
        self.n_perturb = int(n_perturb)
        self.radius = float(radius)
        self.steps = None if steps is None else int(steps)
        self.seed = int(seed)
        self.deletion_space = deletion_space
        self.baseline = baseline
        self.validate()

    def validate(self):
        """
        :raises: ConfigError
        """
        for metric in self.metrics:
            if metric not in METRICS:
                raise ConfigError('unknown metric %r, expected one of %s' %
                                  (metric, ', '.join(METRICS)))
        if self.sigma <= 0:
            raise ConfigError('sigma must be > 0')
        if self.radius <= 0:
            raise ConfigError('radius must be > 0')
        if self.n_perturb < 1:
            raise ConfigError('n-perturb must be >= 1')
        if self.steps is not None and self.steps < 2:
            raise ConfigError('steps must be >= 2')
        if self.deletion_space not in DELETION_SPACES:
            raise ConfigError('unknown deletion space %r' %
                              self.deletion_space)

    def to_dict(self):
        return {'metrics': list(self.metrics), 'sigma': self.sigma,
                'n_perturb': self.n_perturb, 'radius': self.radius,
                'steps': self.steps, 'seed': self.seed,
                'deletion_space': self.deletion_space,
                'baseline': self.baseline}

    @classmethod
    def from_dict(cls, data):
        return cls(**data)


def attribute(method, oracle, x, cfg=None, mask=None, seed=0, target=None):
    """
    Computes the map of one method.

    :param method: one of :data:`specocc.attribution.METHODS`
    :param oracle: black-box classifier
    :param x: the time series to explain
    :param cfg: occlusion configuration
    :param mask: mask policy (combined method)
    :param seed: seed of the random method
    :param target: tracked class, None for the predicted class
    :returns: ``(input space map, native map)``; the native map of the
        frequency and random methods lives in the frequency space.
    """
    cfg = cfg or OcclusionConfig()
    if target is not None:
        cfg = cfg.with_target(target)
    if method == 'occlusion':
        amap = occlusion_attribution(oracle, x, cfg)
        return amap, amap
    if method == 'frequency':
        a_freq = frequency_attribution(oracle, x, cfg)
        return project_to_input_space(x, normalize(a_freq)), a_freq
    if method == 'combined':
        amap = combined_attribution(oracle, x, cfg, mask or MaskPolicy())
        return amap, amap
    if method == 'random':
        if target is None:
            target = cfg.target
        if target is None:
            target = int(np.argmax(oracle.predict(x)))
        return (random_attribution(x, seed, INPUT, target),
                random_attribution(x, seed, FREQUENCY, target))
    raise ConfigError('unknown method %r, expected one of %s' %
                      (method, ', '.join(METHODS)))


def deletion_map(method, input_map, native_map, space):
    """
    Returns the map and space the deletion test of a method runs with.

    :raises: DomainError if a frequency space deletion is requested for a
        method without frequency map.
    """
    if space == INPUT:
        return input_map, INPUT
    if space == ATTRIBUTION_SPACE:
        space = native_map.domain if method == 'frequency' else INPUT
        return (native_map if space == FREQUENCY else input_map), space
    if native_map.domain != FREQUENCY:
        raise DomainError(FREQUENCY, native_map.domain)
    return native_map, FREQUENCY


def evaluate_sample(oracle, x, methods, cfg=None, mask=None, settings=None,
                    dataset='', sample_id=0):
    """
    Evaluates every method on one sample.

    :param oracle: black-box classifier
    :param x: the sample
    :param methods: method tags
    :param cfg: occlusion configuration
    :param mask: mask policy of the combined method
    :param settings: :class:`EvaluationSettings`
    :param dataset: dataset name (reported)
    :param sample_id: index of the sample in its dataset
    :returns: one :class:`specocc.metrics.MetricReport` per method
    """
    if not isinstance(x, TimeSeries):
        x = TimeSeries(x)
    cfg = cfg or OcclusionConfig()
    mask = mask or MaskPolicy()
    settings = settings or EvaluationSettings()
    seed = sample_seed(settings.seed, sample_id)
    reports = []
    for method in methods:
        input_map, native_map = attribute(method, oracle, x, cfg, mask, seed)
        target = input_map.target_class
        values = {}
        curve = None
        if 'auc' in settings.metrics:
            amap, space = deletion_map(method, input_map, native_map,
                                       settings.deletion_space)
            curve = deletion_curve(oracle, x, amap, space, settings.steps,
                                   settings.baseline)
            values['auc'] = auc(curve)
        if 'infidelity' in settings.metrics:
            values['infidelity'] = infidelity(
                oracle, x, input_map, settings.sigma, settings.n_perturb,
                seed=sample_seed(settings.seed, sample_id, 1))
        if 'sensitivity' in settings.metrics:
            def explain(o, perturbed):
                return attribute(method, o, perturbed, cfg, mask, seed,
                                 target)[0]
            values['sensitivity'] = sensitivity(
                explain, oracle, x, settings.radius, settings.n_perturb,
                seed=sample_seed(settings.seed, sample_id, 2))
        if 'continuity' in settings.metrics:
            values['continuity'] = continuity(normalize(input_map))
        config = settings.to_dict()
        config['attribution'] = input_map.config
        reports.append(MetricReport(dataset, sample_id, method, target,
                                    values, curve=curve, config=config))
        _logger().debug('%s sample %d %s: %r', dataset, sample_id, method,
                        values)
    return reports
