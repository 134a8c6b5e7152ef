# -*- coding: utf-8 -*-
"""
This module contains the worker functions run by the worker pool.

A worker receives one single argument (the request data dict) and returns
a dict of results. All the workers share the same request data layout:

    - 'model': model document (see :mod:`specocc.models.spec`)
    - 'sample': ``(length, channels)`` values, as nested lists
    - 'sample_id', 'label', 'dataset': identification of the sample
    - 'occlusion': occlusion config dict, 'mask': mask policy string
    - worker specific fields ('methods', 'settings', 'seed')

Every worker rebuilds its own oracle from the model document and reports
the number of forward passes it consumed as 'forward_passes'.
"""
import logging

import numpy as np

from specocc.api.signal import TimeSeries
from specocc.attribution.config import MaskPolicy
from specocc.attribution.config import OcclusionConfig
from specocc.attribution.frequency import frequency_attribution
from specocc.attribution.frequency import optimize_signal
from specocc.attribution.frequency import signal_change
from specocc.metrics.evaluation import EvaluationSettings
from specocc.metrics.evaluation import attribute
from specocc.metrics.evaluation import evaluate_sample
from specocc.metrics.evaluation import sample_seed
from specocc.metrics.similarity import class_similarity_matrix
from specocc.metrics.similarity import similarity_rows
from specocc.models.spec import ModelSpec


def _logger():
    """ Returns the module's logger """
    return logging.getLogger(__name__)


def request_data(spec, sample, sample_id, label, dataset, cfg=None,
                 mask=None, **extra):
    """
    Builds the data of a worker request.

    :param spec: :class:`specocc.models.ModelSpec`
    :param sample: :class:`specocc.api.TimeSeries`
    :param sample_id: id of the sample in its dataset
    :param label: true class of the sample
    :param dataset: dataset name
    :param cfg: :class:`specocc.attribution.OcclusionConfig`
    :param mask: :class:`specocc.attribution.MaskPolicy`
    :param extra: worker specific fields
    """
    data = {'model': spec.to_dict(), 'sample': sample.values.tolist(),
            'sample_id': int(sample_id), 'label': int(label),
            'dataset': dataset,
            'occlusion': (cfg or OcclusionConfig()).to_dict(),
            'mask': str(mask or MaskPolicy())}
    data.update(extra)
    return data


def _context(data):
    oracle = ModelSpec.from_dict(data['model']).build()
    sample = TimeSeries(np.array(data['sample'], dtype=float))
    cfg = OcclusionConfig.from_dict(data['occlusion'])
    return oracle, sample, cfg, MaskPolicy.parse(data['mask'])


def attribute_worker(data):
    """
    Computes the map of every requested method.

    Extra fields: 'methods', 'seed' (run seed).

    :returns: ``{'maps': [map dict, ...], 'forward_passes': n}``, maps in
        method order; frequency maps are returned in the frequency space.
    """
    oracle, x, cfg, mask = _context(data)
    seed = sample_seed(data['seed'], data['sample_id'])
    maps = []
    for method in data['methods']:
        input_map, native_map = attribute(method, oracle, x, cfg, mask, seed)
        amap = native_map if method == 'frequency' else input_map
        maps.append(amap.to_dict())
    _logger().debug('sample %d: %d maps, %d forward passes',
                    data['sample_id'], len(maps), oracle.forward_pass_count)
    return {'maps': maps, 'forward_passes': oracle.forward_pass_count}


def optimize_worker(data):
    """
    Optimizes a sample toward its predicted class.

    :returns: ``{'optimized': values, 'target_class': k, 'change': float,
        'forward_passes': n}``
    """
    oracle, x, cfg, mask = _context(data)
    a_freq = frequency_attribution(oracle, x, cfg)
    optimized = optimize_signal(x, a_freq, mask)
    change = float(np.sum(signal_change(x, optimized)))
    return {'optimized': optimized.values.tolist(),
            'target_class': a_freq.target_class, 'change': change,
            'forward_passes': oracle.forward_pass_count}


def evaluate_worker(data):
    """
    Evaluates every requested method on a sample.

    Extra fields: 'methods', 'settings' (evaluation settings dict).

    :returns: ``{'reports': [report dict, ...], 'predicted': k,
        'forward_passes': n}``
    """
    oracle, x, cfg, mask = _context(data)
    settings = EvaluationSettings.from_dict(data['settings'])
    predicted = int(np.argmax(oracle.predict(x)))
    reports = evaluate_sample(oracle, x, data['methods'], cfg, mask,
                              settings, data['dataset'], data['sample_id'])
    return {'reports': [report.to_dict() for report in reports],
            'predicted': predicted,
            'forward_passes': oracle.forward_pass_count}


def similarity_worker(data):
    """
    Optimizes a sample toward every class and compares the results with
    the sample.

    :returns: ``{'rows': [...], 'forward_passes': n}``
    """
    oracle, x, cfg, mask = _context(data)
    entries = class_similarity_matrix(oracle, x, mask, cfg)
    rows = similarity_rows(entries, data['label'], data['sample_id'])
    for row in rows:
        row['dataset'] = data['dataset']
    return {'rows': rows, 'forward_passes': oracle.forward_pass_count}
