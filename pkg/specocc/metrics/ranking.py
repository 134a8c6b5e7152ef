# -*- coding: utf-8 -*-
"""
This module ranks the attribution methods per dataset and metric, then
averages the ranks over the datasets (rank 1 is the best method).
"""
import logging

import pandas as pd

from specocc.api.errors import IncompleteGridError


def _logger():
    """ Returns the module's logger """
    return logging.getLogger(__name__)


#: Metrics where a higher value is better. All the others: lower is better.
HIGHER_IS_BETTER = frozenset()


def check_grid(frame, metric=None):
    """
    Checks every (dataset, method) pair has at least one value.

    :param frame: long format report frame
    :param metric: restrict the check to one metric
    :raises: IncompleteGridError
    """
    subset = frame if metric is None else frame[frame['metric'] == metric]
    present = set(zip(subset['dataset'], subset['method']))
    datasets = sorted(set(frame['dataset']))
    methods = sorted(set(frame['method']))
    missing = [(d, m) for d in datasets for m in methods
               if (d, m) not in present]
    if missing:
        raise IncompleteGridError(missing)


def rank_table(frame, metric):
    """
    Returns the ``dataset x method`` rank table of one metric. Ties share
    the mean of the ranks they span.

    :param frame: long format report frame (see
        :func:`specocc.metrics.report.reports_to_frame`)
    :param metric: metric name
    :raises: IncompleteGridError
    """
    subset = frame[frame['metric'] == metric]
    means = subset.pivot_table(index='dataset', columns='method',
                               values='value', aggfunc='mean')
    missing = [(d, m) for d in means.index for m in means.columns
               if pd.isnull(means.loc[d, m])]
    if missing:
        raise IncompleteGridError(missing)
    return means.rank(axis=1, method='average',
                      ascending=metric not in HIGHER_IS_BETTER)


def average_rank_table(frame, metrics=None):
    """
    Returns the average rank of every method (rows) for every metric
    (columns).

    :param frame: long format report frame
    :param metrics: metrics to rank, defaults to every metric of the frame
    :raises: IncompleteGridError if a (dataset, method) pair has no value
        for one of the metrics
    """
    if metrics is None:
        metrics = sorted(set(frame['metric']))
    for metric in metrics:
        check_grid(frame, metric)
    columns = dict((metric, rank_table(frame, metric).mean(axis=0))
                   for metric in metrics)
    table = pd.DataFrame(columns, columns=list(metrics))
    table.index.name = 'method'
    _logger().debug('average ranks:\n%s', table)
    return table
