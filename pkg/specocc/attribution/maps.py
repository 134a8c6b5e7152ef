# -*- coding: utf-8 -*-
"""
This module contains the attribution map container, its normalization and
its persistence.

Map document format (json)::

    {
        "method": "frequency",
        "domain": "frequency",
        "target_class": 1,
        "length": 128,
        "channels": 1,
        "rows": 65,
        "scores": [[...], ...],   # row-major, rows x channels
        "config": {...},          # occlusion config, mask, seed,...
        "sample_id": 3
    }

"""
import json
import logging

import numpy as np

from specocc.api.errors import ContractViolationError
from specocc.api.errors import DimensionError
from specocc.api.errors import DomainError
from specocc.api.errors import InvalidInputError
from specocc.api.errors import ModelParseError
from specocc.api.signal import num_frequencies


def _logger():
    return logging.getLogger(__name__)


#: Scores indexed by [time step][channel]
INPUT = 'input'
#: Scores indexed by [independent bin][channel]
FREQUENCY = 'frequency'

DOMAINS = (INPUT, FREQUENCY)

METHODS = ('occlusion', 'frequency', 'combined', 'random')


class AttributionMap(object):
    """
    Relevance scores of one input for one target class.

    Input space maps have ``length`` rows, frequency space maps have
    ``length // 2 + 1`` rows (one per independent bin); both have one column
    per channel.
    """

    @property
    def rows(self):
        return self.scores.shape[0]

    @property
    def channels(self):
        return self.scores.shape[1]

    def __init__(self, scores, domain, target_class, method, length=None,
                 config=None):
        """
        :param scores: ``(rows, channels)`` relevance matrix
        :param domain: :data:`INPUT` or :data:`FREQUENCY`
        :param target_class: explained class
        :param method: method tag (occlusion, frequency, combined, random)
        :param length: length of the explained signal (required to size
            frequency maps of odd length signals, defaults to ``rows`` for
            input maps and ``2 * (rows - 1)`` for frequency maps)
        :param config: dict describing how the map was produced
        """
        scores = np.array(scores, dtype=float)
        if scores.ndim == 1:
            scores = scores.reshape(-1, 1)
        if scores.ndim != 2 or not scores.size:
            raise InvalidInputError('scores must be a (rows, channels) matrix')
        if not np.all(np.isfinite(scores)):
            raise InvalidInputError('attribution scores must be finite')
        if domain not in DOMAINS:
            raise InvalidInputError('unknown attribution domain %r' % domain)
        if length is None:
            length = scores.shape[0] if domain == INPUT else \
                2 * (scores.shape[0] - 1) or 1
        expected_rows = length if domain == INPUT else num_frequencies(length)
        if scores.shape[0] != expected_rows:
            raise DimensionError(expected_rows, scores.shape[0])
        self.scores = scores
        self.domain = domain
        self.target_class = int(target_class)
        self.method = method
        self.length = int(length)
        self.config = dict(config or {})

    def check_domain(self, domain):
        """
        :raises: DomainError if the map does not live in ``domain``
        """
        if self.domain != domain:
            raise DomainError(domain, self.domain)

    def check_signal(self, x):
        """
        :raises: DimensionError if the map was not computed for a signal
            shaped like ``x``
        """
        if (self.length, self.channels) != x.shape:
            raise DimensionError((self.length, self.channels), x.shape)

    def is_normalized(self):
        return bool(np.all(self.scores >= 0.0) and np.all(self.scores <= 1.0))

    def replace(self, scores=None, method=None):
        """ Returns a copy with new scores and/or method tag. """
        return AttributionMap(
            self.scores if scores is None else scores, self.domain,
            self.target_class, method or self.method, length=self.length,
            config=self.config)

    def to_dict(self):
        return {
            'method': self.method, 'domain': self.domain,
            'target_class': self.target_class, 'length': self.length,
            'channels': self.channels, 'rows': self.rows,
            'scores': self.scores.tolist(), 'config': self.config}

    @classmethod
    def from_dict(cls, document):
        try:
            amap = cls(document['scores'], document['domain'],
                       document['target_class'], document['method'],
                       length=document['length'],
                       config=document.get('config'))
        except (KeyError, TypeError) as e:
            raise ModelParseError('invalid attribution document: %s' % e)
        if amap.channels != document.get('channels', amap.channels):
            raise DimensionError(document['channels'], amap.channels)
        return amap

    def __repr__(self):
        return 'AttributionMap(method=%r, domain=%r, target=%d, shape=%r)' % (
            self.method, self.domain, self.target_class, self.scores.shape)


def normalize_scores(scores):
    """
    Per-channel (per column) min-max rescaling into [0, 1]. Constant
    columns map to ones.

    :param scores: ``(rows, channels)`` matrix
    """
    scores = np.asarray(scores, dtype=float)
    low = scores.min(axis=0)
    span = scores.max(axis=0) - low
    normalized = np.ones_like(scores)
    varying = span > 0
    normalized[:, varying] = (scores[:, varying] - low[varying]) / \
        span[varying]
    return normalized


def normalize(amap):
    """
    Returns the per-channel min-max normalized version of a map.

    :type amap: AttributionMap
    :rtype: AttributionMap
    """
    return amap.replace(scores=normalize_scores(amap.scores))


def require_normalized(amap):
    """
    :raises: ContractViolationError if the scores are not in [0, 1]
    """
    if not amap.is_normalized():
        raise ContractViolationError(
            '%s map must be normalized to [0, 1] (see normalize)' %
            amap.method)


def attributed_signal(x, amap):
    """
    Returns the input multiplied by its normalized input space attribution,
    the form used to display an attribution on top of a signal.

    :param x: the explained time series
    :param amap: input space map of ``x``
    :returns: ``(length, channels)`` array
    """
    amap.check_domain(INPUT)
    amap.check_signal(x)
    return x.values * normalize_scores(amap.scores)


def save_map(amap, path, **extra):
    """
    Writes an attribution map document.

    :param amap: the map to save
    :param path: destination path
    :param extra: extra top level fields (e.g. ``sample_id``)
    """
    document = amap.to_dict()
    document.update(extra)
    with open(path, 'w') as f:
        json.dump(document, f, sort_keys=True, allow_nan=False)
        f.write('\n')


def load_map(path):
    """
    Reads an attribution map document.

    :rtype: AttributionMap
    """
    with open(path, 'r') as f:
        try:
            document = json.load(f)
        except ValueError as e:
            raise ModelParseError('%s: %s' % (path, e))
    return AttributionMap.from_dict(document)
