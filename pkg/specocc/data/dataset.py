# -*- coding: utf-8 -*-
"""
This module contains the dataset container and the delimited text formats.

Delimited format (univariate): one sample per line, the label first, then
the ``t`` values. Fields are separated by commas or by whitespace::

    1,0.5,0.25,0.0,-0.25
    2,0.1,0.2,0.3,0.4

Multivariate delimited format: same layout preceded by a ``#shape t s``
header line; every row holds ``t * s`` values, step-major (the ``s``
channel values of step 0, then the ``s`` values of step 1,...)::

    #shape 3 2
    a,0.0,1.0,0.5,1.5,1.0,2.0

"""
import logging
import os

import numpy as np

from specocc.api.errors import ConfigError
from specocc.api.errors import DatasetFormatError
from specocc.api.errors import InvalidInputError
from specocc.api.errors import MissingPathError
from specocc.api.errors import NonNumericFieldError
from specocc.api.errors import RaggedRowError
from specocc.api.errors import UnknownLabelError
from specocc.api.signal import TimeSeries


def _logger():
    """ Returns the module's logger """
    return logging.getLogger(__name__)


DELIMITED = 'delimited'
MULTIVARIATE = 'multivariate-delimited'

FORMATS = (DELIMITED, MULTIVARIATE)

SPLITS = ('train', 'val', 'test')

_HEADER = '#shape'


class Dataset(object):
    """
    A labelled set of time series sharing the same dimensions.

    Iterating over a dataset yields ``(sample_id, sample, label)`` tuples;
    sample ids are the positions of the samples in the file they were
    loaded from and survive :func:`subsample`.
    """

    @property
    def length(self):
        return self.samples[0].length

    @property
    def channels(self):
        return self.samples[0].channels

    @property
    def num_classes(self):
        return len(self.label_names)

    def __init__(self, samples, labels, name='dataset', split='test',
                 ids=None, label_names=None):
        """
        :param samples: list of :class:`specocc.api.TimeSeries`
        :param labels: class ids in ``[0, c)``
        :param name: dataset name
        :param split: one of train, val, test
        :param ids: sample ids (default: positions)
        :param label_names: original label of every class id (default: the
            class ids as strings)
        """
        self.samples = [s if isinstance(s, TimeSeries) else TimeSeries(s)
                        for s in samples]
        self.labels = np.asarray(labels, dtype=int)
        if not self.samples:
            raise InvalidInputError('a dataset needs at least one sample')
        if len(self.labels) != len(self.samples):
            raise InvalidInputError('%d labels for %d samples' %
                                    (len(self.labels), len(self.samples)))
        shapes = set(s.shape for s in self.samples)
        if len(shapes) != 1:
            raise InvalidInputError('samples have different dimensions: %r'
                                    % sorted(shapes))
        if split not in SPLITS:
            raise ConfigError('unknown split %r' % split)
        if label_names is None:
            label_names = [str(i) for i in range(int(self.labels.max()) + 1)]
        if self.labels.min() < 0 or self.labels.max() >= len(label_names):
            raise InvalidInputError('labels must lie in [0, %d)' %
                                    len(label_names))
        self.label_names = list(label_names)
        self.ids = list(range(len(self.samples))) if ids is None else \
            [int(i) for i in ids]
        self.name = name
        self.split = split

    def __len__(self):
        return len(self.samples)

    def __iter__(self):
        return iter(zip(self.ids, self.samples,
                        (int(label) for label in self.labels)))

    def subset(self, positions):
        """
        Returns the dataset made of the samples at the given positions.
        """
        return Dataset([self.samples[i] for i in positions],
                       self.labels[list(positions)], self.name, self.split,
                       ids=[self.ids[i] for i in positions],
                       label_names=self.label_names)

    def values(self):
        """ Returns the ``(n, length, channels)`` sample array """
        return np.stack([s.values for s in self.samples])

    def __repr__(self):
        return 'Dataset(%r, n=%d, t=%d, s=%d, c=%d)' % (
            self.name, len(self), self.length, self.channels,
            self.num_classes)


def _split_fields(line):
    if ',' in line:
        return [field.strip() for field in line.split(',')]
    return line.split()


def _label_key(label):
    try:
        return 0, float(label), label
    except ValueError:
        return 1, 0.0, label


def _parse_header(path, lineno, line):
    fields = line.split()
    try:
        if len(fields) != 3:
            raise ValueError(line)
        length, channels = int(fields[1]), int(fields[2])
    except ValueError:
        raise DatasetFormatError(path, lineno, 'invalid shape header %r' %
                                 line)
    if length < 1 or channels < 1:
        raise DatasetFormatError(path, lineno, 'invalid shape %d x %d' %
                                 (length, channels))
    return length, channels


def load_dataset(path, fmt=DELIMITED, name=None, split='test',
                 label_names=None, znorm=False):
    """
    Loads a delimited dataset file.

    :param path: file path
    :param fmt: :data:`DELIMITED` or :data:`MULTIVARIATE`
    :param name: dataset name, defaults to the file name without extension
    :param split: split the file holds
    :param label_names: known labels (e.g. the labels of the training set);
        a label missing from the list raises an UnknownLabelError. When
        None, the labels found in the file are sorted (numerically when
        they all are numbers) and remapped to ``[0, c)``.
    :param znorm: z-normalize every channel of every sample
    :rtype: Dataset
    :raises: MissingPathError, RaggedRowError, NonNumericFieldError,
        UnknownLabelError, DatasetFormatError
    """
    if fmt not in FORMATS:
        raise ConfigError('unknown dataset format %r' % fmt)
    if not os.path.isfile(path):
        raise MissingPathError(path, 'dataset')
    shape = None
    width = None
    raw_labels = []
    rows = []
    with open(path, 'r') as f:
        for lineno, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            if line.startswith(_HEADER):
                shape = _parse_header(path, lineno, line)
                width = shape[0] * shape[1]
                continue
            if line.startswith('#'):
                continue
            if fmt == MULTIVARIATE and shape is None:
                raise DatasetFormatError(path, lineno,
                                         'missing %s header' % _HEADER)
            fields = _split_fields(line)
            try:
                values = [float(v) for v in fields[1:]]
            except ValueError as e:
                raise NonNumericFieldError(path, lineno, str(e))
            if not np.all(np.isfinite(values)):
                raise NonNumericFieldError(path, lineno, 'non finite value')
            if width is None:
                width = len(values)
            if len(values) != width or not values:
                raise RaggedRowError(path, lineno, '%d values, expected %d' %
                                     (len(values), width))
            raw_labels.append((lineno, fields[0]))
            rows.append(values)
    if not rows:
        raise DatasetFormatError(path, 0, 'no sample found')
    if label_names is None:
        label_names = sorted(set(label for _, label in raw_labels),
                             key=_label_key)
    index = dict((label, i) for i, label in enumerate(label_names))
    labels = []
    for lineno, label in raw_labels:
        if label not in index:
            raise UnknownLabelError(path, lineno, 'unknown label %r' % label)
        labels.append(index[label])
    channels = shape[1] if fmt == MULTIVARIATE else 1
    samples = [np.reshape(row, (-1, channels)) for row in rows]
    if name is None:
        name = os.path.splitext(os.path.basename(path))[0]
    ds = Dataset(samples, labels, name, split, label_names=label_names)
    _logger().info('loaded %r from %s', ds, path)
    return znormalize(ds) if znorm else ds


def save_dataset(ds, path, fmt=None):
    """
    Writes a dataset in the delimited format (comma separated, shortest
    round-trip float representation).

    :param ds: the dataset
    :param path: destination path
    :param fmt: format, defaults to :data:`DELIMITED` for univariate
        datasets and :data:`MULTIVARIATE` otherwise.
    """
    if fmt is None:
        fmt = DELIMITED if ds.channels == 1 else MULTIVARIATE
    if fmt == DELIMITED and ds.channels != 1:
        raise ConfigError('the delimited format is univariate, use %s' %
                          MULTIVARIATE)
    with open(path, 'w') as f:
        if fmt == MULTIVARIATE:
            f.write('%s %d %d\n' % (_HEADER, ds.length, ds.channels))
        for _, sample, label in ds:
            fields = [ds.label_names[label]] + [
                repr(float(v)) for v in sample.values.ravel()]
            f.write(','.join(fields) + '\n')


def znormalize(ds):
    """
    Returns a copy where every channel of every sample has a zero mean and
    a unit standard deviation (constant channels are only centered).
    """
    samples = []
    for sample in ds.samples:
        values = sample.values - sample.values.mean(axis=0)
        std = values.std(axis=0)
        samples.append(values / np.where(std > 0, std, 1.0))
    return Dataset(samples, ds.labels, ds.name, ds.split, ids=ds.ids,
                   label_names=ds.label_names)


def subsample(ds, n, seed):
    """
    Draws ``n`` samples without replacement, stratified by label: the
    count of every class is its proportional share, the remainder going
    to the classes with the largest fractional parts (ties: lowest class
    id first).

    :param ds: source dataset
    :param n: number of samples, ``1 <= n <= len(ds)``
    :param seed: random seed
    :returns: the subset, sorted by sample id
    :raises: ConfigError if n is out of range
    """
    if not 1 <= n <= len(ds):
        raise ConfigError('cannot draw %d samples out of %d' % (n, len(ds)))
    rng = np.random.default_rng(seed)
    classes, sizes = np.unique(ds.labels, return_counts=True)
    shares = sizes * n / float(len(ds))
    counts = np.floor(shares).astype(int)
    remainder = n - counts.sum()
    order = np.argsort(-(shares - counts), kind='stable')
    counts[order[:remainder]] += 1
    positions = []
    for klass, count in zip(classes, counts):
        members = np.flatnonzero(ds.labels == klass)
        positions.extend(rng.choice(members, size=count, replace=False))
    positions = sorted(int(p) for p in positions)
    _logger().debug('subsample of %s: %r', ds.name, positions)
    return ds.subset(positions)
