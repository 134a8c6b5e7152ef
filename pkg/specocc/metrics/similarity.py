# -*- coding: utf-8 -*-
"""
This module contains the class similarity analysis: a sample is optimized
toward every class in turn and each optimized signal is compared with the
unmodified sample. Optimizing toward the true class should change the
sample less than optimizing toward any other class.
"""
import logging

import numpy as np
import pandas as pd

from specocc.api.signal import TimeSeries
from specocc.attribution.config import MaskPolicy
from specocc.attribution.config import OcclusionConfig
from specocc.attribution.frequency import frequency_attribution
from specocc.attribution.frequency import optimize_signal


def _logger():
    """ Returns the module's logger """
    return logging.getLogger(__name__)


#: Similarity measures, in report order.
MEASURES = ('l2', 'cosine', 'cross_correlation')

_ZERO_NORM = 1e-12


def l2_distance(a, b):
    """ Euclidean distance between two ``(length, channels)`` arrays """
    return float(np.linalg.norm(np.asarray(a) - np.asarray(b)))


def cosine_similarity(a, b):
    """
    Cosine similarity of two flattened arrays; 0 when either is null.
    """
    a = np.ravel(a)
    b = np.ravel(b)
    norms = np.linalg.norm(a) * np.linalg.norm(b)
    if norms < _ZERO_NORM:
        return 0.0
    return float(np.dot(a, b) / norms)


def cross_correlation(a, b):
    """
    Maximum over circular lags of the normalized cross-correlation of two
    ``(length, channels)`` arrays, averaged over channels. A channel with a
    null norm contributes 0.
    """
    a = np.asarray(a, dtype=float).reshape(len(a), -1)
    b = np.asarray(b, dtype=float).reshape(len(b), -1)
    values = []
    for channel in range(a.shape[1]):
        u = a[:, channel]
        v = b[:, channel]
        norms = np.linalg.norm(u) * np.linalg.norm(v)
        if norms < _ZERO_NORM:
            values.append(0.0)
            continue
        lags = np.fft.ifft(np.fft.fft(u) * np.conj(np.fft.fft(v))).real
        values.append(float(np.max(lags) / norms))
    return float(np.mean(values))


class SimilarityEntry(object):
    """
    Similarity between a sample and its optimization toward one class.
    """
    def __init__(self, target_class, l2, cosine, xcorr):
        self.target_class = target_class
        self.l2 = l2
        self.cosine = cosine
        self.cross_correlation = xcorr

    def to_dict(self):
        return {'target_class': self.target_class, 'l2': self.l2,
                'cosine': self.cosine,
                'cross_correlation': self.cross_correlation}

    def __repr__(self):
        return 'SimilarityEntry(%r)' % self.to_dict()


def compare(x, optimized, target_class):
    """
    Compares a sample with one of its optimized versions.

    :rtype: SimilarityEntry
    """
    return SimilarityEntry(target_class,
                           l2_distance(x.values, optimized.values),
                           cosine_similarity(x.values, optimized.values),
                           cross_correlation(x.values, optimized.values))


def class_similarity_matrix(oracle, x, mask=None, cfg=None):
    """
    Optimizes ``x`` toward every class of the oracle and compares each
    optimized signal with ``x``.

    :param oracle: black-box classifier
    :param x: the sample
    :param mask: mask policy used to optimize the sample
    :param cfg: frequency occlusion configuration (its target is replaced)
    :returns: one :class:`SimilarityEntry` per class, in class order
    """
    if not isinstance(x, TimeSeries):
        x = TimeSeries(x)
    mask = mask or MaskPolicy()
    cfg = cfg or OcclusionConfig()
    entries = []
    for target in range(oracle.num_classes):
        a_freq = frequency_attribution(oracle, x, cfg.with_target(target))
        entries.append(compare(x, optimize_signal(x, a_freq, mask), target))
    return entries


def similarity_rows(entries, true_class, sample_id=None):
    """
    Flattens the entries of one sample into report rows.
    """
    rows = []
    for entry in entries:
        row = entry.to_dict()
        row.update({'sample_id': sample_id, 'true_class': int(true_class)})
        rows.append(row)
    return rows


def pivot_similarity(rows):
    """
    Averages per-sample similarity rows into one ``true class x target
    class`` table per measure.

    :param rows: rows produced by :func:`similarity_rows`
    :returns: ``{measure: pandas.DataFrame}``
    """
    frame = pd.DataFrame(rows)
    return dict((measure, frame.pivot_table(
        index='true_class', columns='target_class', values=measure,
        aggfunc='mean')) for measure in MEASURES)


def class_similarity_table(oracle, dataset, mask=None, cfg=None):
    """
    Runs :func:`class_similarity_matrix` on every sample of a dataset and
    averages the results per (true class, target class).

    :param oracle: black-box classifier
    :param dataset: :class:`specocc.data.Dataset`
    :param mask: mask policy used to optimize the samples
    :param cfg: frequency occlusion configuration
    :returns: ``{measure: pandas.DataFrame}``
    """
    rows = []
    for sample_id, x, label in dataset:
        entries = class_similarity_matrix(oracle, x, mask, cfg)
        rows.extend(similarity_rows(entries, label, sample_id))
    return pivot_similarity(rows)
