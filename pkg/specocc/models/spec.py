# -*- coding: utf-8 -*-
"""
This module contains the model document format.

A model document is a json object with the following fields:

  - 'kind': one of 'linear', 'mlp', 'bandpower'
  - 'num_classes': number of classes (>= 2)
  - 'input_length': number of time steps
  - 'input_channels': number of channels
  - kind specific fields:

    - linear: 'weights' (num_classes x length*channels matrix, step-major
      columns) and 'bias' (num_classes vector)
    - mlp: 'layers', an ordered list of ``{'weights': [[...]], 'bias':
      [...]}`` objects. Rectifier between layers, softmax at the end.
    - bandpower: 'rules', a list of ``{'class', 'channel', 'bin_low',
      'bin_high', 'threshold'}`` objects and an optional 'sharpness'.

E.g::

    {
        "kind": "linear",
        "num_classes": 2,
        "input_length": 4,
        "input_channels": 1,
        "weights": [[1.0, 0.0, 0.0, 0.0], [0.0, 0.0, 0.0, 0.0]],
        "bias": [0.0, 0.0]
    }

Floats are written with their shortest round-trip representation, so
saving then loading a model yields bit identical predictions.
"""
import json
import logging
import os

from specocc.api.errors import MissingPathError
from specocc.api.errors import ModelParseError
from specocc.api.errors import NonFiniteParameterError
from specocc.models.bandpower import BandRule
from specocc.models.bandpower import BandpowerOracle
from specocc.models.bandpower import DEFAULT_SHARPNESS
from specocc.models.linear import LinearOracle
from specocc.models.mlp import MlpOracle


def _logger():
    """ Returns the module's logger """
    return logging.getLogger(__name__)


KINDS = ('linear', 'mlp', 'bandpower')


def _reject_constant(name):
    raise NonFiniteParameterError(name)


class ModelSpec(object):
    """
    In memory representation of a model document.
    """
    def __init__(self, kind, num_classes, input_length, input_channels,
                 parameters):
        """
        :param kind: model kind (see :data:`KINDS`)
        :param num_classes: number of classes
        :param input_length: number of time steps
        :param input_channels: number of channels
        :param parameters: kind specific parameters dict
        """
        if kind not in KINDS:
            raise ModelParseError('unknown model kind: %r' % (kind, ))
        self.kind = kind
        self.num_classes = num_classes
        self.input_length = input_length
        self.input_channels = input_channels
        self.parameters = parameters

    @classmethod
    def from_dict(cls, document):
        """
        Creates a spec from a decoded model document.

        :raises: ModelParseError if a field is missing or has the wrong type
        """
        if not isinstance(document, dict):
            raise ModelParseError('a model document must be a json object')
        try:
            kind = document['kind']
            header = [int(document[key]) for key in (
                'num_classes', 'input_length', 'input_channels')]
        except KeyError as e:
            raise ModelParseError('missing field %s' % e)
        except (TypeError, ValueError) as e:
            raise ModelParseError('invalid header field: %s' % e)
        if kind not in KINDS:
            raise ModelParseError('unknown model kind: %r' % (kind, ))
        required = {'linear': ('weights', 'bias'), 'mlp': ('layers', ),
                    'bandpower': ('rules', )}[kind]
        for key in required:
            if key not in document:
                raise ModelParseError('%s model: missing field %r' %
                                      (kind, key))
        parameters = dict((k, v) for k, v in document.items()
                          if k not in ('kind', 'num_classes', 'input_length',
                                       'input_channels'))
        return cls(kind, *header, parameters=parameters)

    @classmethod
    def from_oracle(cls, oracle):
        """
        Creates the spec of an existing oracle.
        """
        return cls(oracle.kind, oracle.num_classes, oracle.expected_length,
                   oracle.expected_channels, oracle.parameters())

    def to_dict(self):
        document = dict(self.parameters)
        document.update({
            'kind': self.kind, 'num_classes': self.num_classes,
            'input_length': self.input_length,
            'input_channels': self.input_channels})
        return document

    def build(self):
        """
        Builds the oracle described by the spec.

        :raises: ShapeInconsistencyError, NonFiniteParameterError,
            ModelParseError
        """
        params = self.parameters
        dims = (self.num_classes, self.input_length, self.input_channels)
        try:
            if self.kind == 'linear':
                return LinearOracle(params['weights'], params['bias'], *dims)
            if self.kind == 'mlp':
                layers = [(layer['weights'], layer['bias'])
                          for layer in params['layers']]
                return MlpOracle(layers, *dims)
            rules = [BandRule(r['class'], r['channel'], r['bin_low'],
                              r['bin_high'], r['threshold'])
                     for r in params['rules']]
            return BandpowerOracle(
                rules, *dims,
                sharpness=params.get('sharpness', DEFAULT_SHARPNESS))
        except (KeyError, TypeError, ValueError) as e:
            # ragged or non numeric parameter arrays
            raise ModelParseError('%s model: invalid parameters (%s)' %
                                  (self.kind, e))


def load_model(path):
    """
    Loads a model document and returns the corresponding oracle.

    :param path: path of the json model document
    :rtype: specocc.models.ClassifierOracle
    :raises: MissingPathError, ModelParseError, ShapeInconsistencyError,
        NonFiniteParameterError
    """
    if not os.path.isfile(path):
        raise MissingPathError(path, 'model')
    _logger().debug('loading model %s', path)
    with open(path, 'r') as f:
        try:
            document = json.load(f, parse_constant=_reject_constant)
        except ValueError as e:
            raise ModelParseError('%s: %s' % (path, e))
    return ModelSpec.from_dict(document).build()


def save_model(model, path):
    """
    Saves a model document.

    :param model: a :class:`ModelSpec` or a
        :class:`specocc.models.ClassifierOracle`
    :param path: destination path
    """
    if not isinstance(model, ModelSpec):
        model = ModelSpec.from_oracle(model)
    with open(path, 'w') as f:
        json.dump(model.to_dict(), f, sort_keys=True, indent=1,
                  allow_nan=False)
        f.write('\n')
