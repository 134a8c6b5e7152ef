# -*- coding: utf-8 -*-
"""
This module contains the run configuration of the command line front end.

A run configuration can be stored as a json document (``--config``); the
command line flags override the values of the document, the defaults of
:data:`DEFAULTS` fill the rest.
"""
import json
import logging
import os

from specocc.api.errors import ConfigError
from specocc.api.errors import MissingPathError
from specocc.attribution.config import MaskPolicy
from specocc.attribution.config import OcclusionConfig
from specocc.attribution.maps import METHODS
from specocc.data.dataset import DELIMITED
from specocc.data.dataset import FORMATS
from specocc.metrics.evaluation import EvaluationSettings


def _logger():
    """ Returns the module's logger """
    return logging.getLogger(__name__)


DEFAULTS = {
    'dataset': [],
    'format': DELIMITED,
    'model': None,
    'methods': list(METHODS),
    'window': 1,
    'stride': None,
    'baseline': OcclusionConfig.ZERO,
    'mask': MaskPolicy.SOFT,
    'metrics': ['auc', 'infidelity', 'sensitivity', 'continuity'],
    'sigma': 0.1,
    'n_perturb': 16,
    'radius': 0.05,
    'steps': 50,
    'deletion_space': 'input',
    'samples': 100,
    'seed': None,
    'out': 'specocc-out',
    'workers': None,
    'znorm': False,
    'input': None,
    'synthetic': None,
    'bands': '3,9',
    'length': 128,
    'channels': 1,
    'count': 100,
    'noise': 0.0,
    'amplitude': 1.0,
}


def _as_list(value):
    if value is None:
        return []
    if isinstance(value, str):
        return [v.strip() for v in value.split(',') if v.strip()]
    return list(value)


class RunConfig(object):
    """
    Everything a command needs to run reproducibly.

    The attributes are the keys of :data:`DEFAULTS`.
    """
    def __init__(self, **values):
        unknown = set(values) - set(DEFAULTS)
        if unknown:
            raise ConfigError('unknown run config fields: %s' %
                              ', '.join(sorted(unknown)))
        for key, default in DEFAULTS.items():
            value = values.get(key)
            setattr(self, key, default if value is None else value)
        self.dataset = _as_list(self.dataset)
        self.methods = _as_list(self.methods)
        self.metrics = _as_list(self.metrics)
        if self.workers is None:
            self.workers = os.cpu_count() or 1

    @classmethod
    def load(cls, path):
        """
        Reads a run config document.

        :raises: MissingPathError, ConfigError
        """
        if not os.path.isfile(path):
            raise MissingPathError(path, 'run config')
        with open(path, 'r') as f:
            try:
                document = json.load(f)
            except ValueError as e:
                raise ConfigError('%s: %s' % (path, e))
        if not isinstance(document, dict):
            raise ConfigError('%s: a run config must be a json object' % path)
        return document

    @classmethod
    def from_args(cls, args):
        """
        Builds a run config from parsed command line arguments (flags left
        to None are taken from the ``--config`` document, if any).
        """
        values = {}
        if getattr(args, 'config', None):
            values.update(cls.load(args.config))
        for key in DEFAULTS:
            value = getattr(args, key, None)
            if value is not None and value != []:
                values[key] = value
        return cls(**values)

    def occlusion(self):
        """
        :rtype: specocc.attribution.OcclusionConfig
        """
        return OcclusionConfig(self.window, self.stride, self.baseline)

    def mask_policy(self):
        """
        :rtype: specocc.attribution.MaskPolicy
        """
        return MaskPolicy.parse(str(self.mask))

    def evaluation(self):
        """
        A ``steps`` of 0 selects one deletion step per unit.

        :rtype: specocc.metrics.EvaluationSettings
        """
        steps = int(self.steps) or None
        return EvaluationSettings(
            self.metrics, self.sigma, self.n_perturb, self.radius,
            steps, self.seed, self.deletion_space, self.baseline)

    def validate(self, paths=('dataset', 'model'), evaluation=False):
        """
        Validates the configuration and checks every referenced path exists
        before anything is computed.

        :param paths: path fields required by the command
        :param evaluation: also validate the metric parameters
        :raises: ConfigError, MissingPathError
        """
        if self.seed is None:
            raise ConfigError('a seed is mandatory (--seed)')
        if self.format not in FORMATS:
            raise ConfigError('unknown dataset format %r' % self.format)
        for method in self.methods:
            if method not in METHODS:
                raise ConfigError('unknown method %r, expected one of %s' %
                                  (method, ', '.join(METHODS)))
        if not self.methods:
            raise ConfigError('no attribution method selected')
        if int(self.samples) < 1:
            raise ConfigError('samples must be >= 1')
        if int(self.workers) < 1:
            raise ConfigError('workers must be >= 1')
        self.occlusion()
        self.mask_policy()
        if evaluation:
            self.evaluation()
        if 'dataset' in paths:
            if not self.dataset:
                raise ConfigError('no dataset given (--dataset)')
            for path in self.dataset:
                if not os.path.isfile(path):
                    raise MissingPathError(path, 'dataset')
        for key in paths:
            if key == 'dataset':
                continue
            path = getattr(self, key)
            if path is None:
                raise ConfigError('missing --%s' % key)
            if not os.path.exists(path):
                raise MissingPathError(path, key)

    def to_dict(self):
        return dict((key, getattr(self, key)) for key in sorted(DEFAULTS))

    def __repr__(self):
        return 'RunConfig(%r)' % self.to_dict()
