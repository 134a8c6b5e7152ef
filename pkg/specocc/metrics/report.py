# -*- coding: utf-8 -*-
"""
This module contains the metric report and its tabular (csv) form.

A report file has one row per (sample, method, metric)::

    schema_version,dataset,sample_id,method,target_class,metric,value

and a curve file one row per (sample, method, deletion step)::

    schema_version,dataset,sample_id,method,space,fraction,score

Values are written with their shortest round-trip representation, read
them back with :func:`read_frame` to get the exact same floats.
"""
import logging
import os

import numpy as np
import pandas as pd

from specocc.api.errors import ContractViolationError
from specocc.api.errors import MissingPathError
from specocc.metrics.deletion import DeletionCurve


def _logger():
    """ Returns the module's logger """
    return logging.getLogger(__name__)


#: Version of the csv column layout.
SCHEMA_VERSION = 1

#: Metric names, in report order.
METRICS = ('auc', 'infidelity', 'sensitivity', 'continuity')

REPORT_COLUMNS = ('schema_version', 'dataset', 'sample_id', 'method',
                  'target_class', 'metric', 'value')

CURVE_COLUMNS = ('schema_version', 'dataset', 'sample_id', 'method', 'space',
                 'fraction', 'score')


class MetricReport(object):
    """
    The metric values of one (sample, method) pair, the deletion curve the
    auc was computed from and the parameters needed to reproduce them.
    """
    def __init__(self, dataset, sample_id, method, target_class, values,
                 curve=None, config=None):
        """
        :param dataset: dataset name
        :param sample_id: index of the sample in its dataset
        :param method: attribution method tag
        :param target_class: explained class
        :param values: ``{metric: value}`` dict (only the computed metrics)
        :param curve: :class:`specocc.metrics.DeletionCurve` (optional)
        :param config: configuration snapshot (sigma, n, radius, seed,...)
        """
        self.dataset = dataset
        self.sample_id = int(sample_id)
        self.method = method
        self.target_class = int(target_class)
        self.values = dict(values)
        self.curve = curve
        self.config = dict(config or {})
        for metric, value in self.values.items():
            if metric not in METRICS:
                raise ContractViolationError('unknown metric %r' % metric)
            if not np.isfinite(value):
                raise ContractViolationError(
                    '%s of sample %d (%s) is not finite' %
                    (metric, self.sample_id, method))

    def __getattr__(self, name):
        if name in METRICS:
            return self.values.get(name)
        raise AttributeError(name)

    def rows(self):
        """ Report rows, in metric order """
        return [(SCHEMA_VERSION, self.dataset, self.sample_id, self.method,
                 self.target_class, metric, self.values[metric])
                for metric in METRICS if metric in self.values]

    def curve_rows(self):
        if self.curve is None:
            return []
        return [(SCHEMA_VERSION, self.dataset, self.sample_id, self.method,
                 self.curve.space, float(f), float(s))
                for f, s in zip(self.curve.fractions, self.curve.scores)]

    def to_dict(self):
        document = {
            'dataset': self.dataset, 'sample_id': self.sample_id,
            'method': self.method, 'target_class': self.target_class,
            'values': self.values, 'config': self.config, 'curve': None}
        if self.curve is not None:
            document['curve'] = {
                'fractions': self.curve.fractions.tolist(),
                'scores': self.curve.scores.tolist(),
                'space': self.curve.space}
        return document

    @classmethod
    def from_dict(cls, document):
        curve = document.get('curve')
        if curve is not None:
            curve = DeletionCurve(curve['fractions'], curve['scores'],
                                  curve['space'], document['target_class'])
        return cls(document['dataset'], document['sample_id'],
                   document['method'], document['target_class'],
                   document['values'], curve=curve,
                   config=document.get('config'))

    def __repr__(self):
        return 'MetricReport(%s, sample=%d, %s, %r)' % (
            self.dataset, self.sample_id, self.method, self.values)


def reports_to_frame(reports):
    """
    Returns the long format frame of a list of reports.

    :rtype: pandas.DataFrame
    """
    rows = [row for report in reports for row in report.rows()]
    return pd.DataFrame(rows, columns=list(REPORT_COLUMNS))


def curves_to_frame(reports):
    """
    Returns the deletion curves of a list of reports as a long format
    frame.
    """
    rows = [row for report in reports for row in report.curve_rows()]
    return pd.DataFrame(rows, columns=list(CURVE_COLUMNS))


def summarize(frame):
    """
    Per (dataset, method, metric) mean, standard deviation and count.
    """
    summary = frame.groupby(['dataset', 'method', 'metric'], sort=True)[
        'value'].agg(['mean', 'std', 'count']).reset_index()
    return summary.fillna({'std': 0.0})


def mean_curves(frame):
    """
    Averages the deletion curves of every (dataset, method, space) over the
    samples.
    """
    return frame.groupby(['dataset', 'method', 'space', 'fraction'],
                         sort=True)['score'].mean().reset_index()


def write_frame(frame, path):
    """
    Writes a frame as csv (no index column, shortest float repr).
    """
    frame.to_csv(path, index=False, lineterminator='\n')
    _logger().debug('%d rows written to %s', len(frame), path)


def read_frame(path):
    """
    Reads a csv file written by :func:`write_frame`.

    :raises: MissingPathError
    """
    if not os.path.isfile(path):
        raise MissingPathError(path, 'report')
    return pd.read_csv(path, float_precision='round_trip')
