# -*- coding: utf-8 -*-
"""
This module contains the multilayer perceptron classifier.
"""
import numpy as np

from specocc.api.errors import ShapeInconsistencyError
from specocc.models.oracle import ClassifierOracle
from specocc.models.oracle import check_finite


class MlpOracle(ClassifierOracle):
    """
    Dense network with rectifier activations between layers and a softmax
    output. The input is flattened step-major (see
    :class:`specocc.models.LinearOracle`).
    """
    kind = 'mlp'

    def __init__(self, layers, num_classes, input_length, input_channels=1):
        """
        :param layers: ordered list of ``(weights, bias)`` pairs, weights
            being ``(out, in)`` matrices.
        :param num_classes: number of classes (out size of the last layer)
        :param input_length: number of time steps
        :param input_channels: number of channels
        """
        super(MlpOracle, self).__init__(
            num_classes, input_length, input_channels)
        if not layers:
            raise ShapeInconsistencyError('an mlp needs at least one layer')
        self.layers = []
        size = self.expected_length * self.expected_channels
        for i, (weights, bias) in enumerate(layers):
            weights = np.array(weights, dtype=float)
            bias = np.array(bias, dtype=float)
            if weights.ndim != 2 or weights.shape[1] != size:
                raise ShapeInconsistencyError(
                    'layer %d: expected %d inputs, got weights of shape %r' %
                    (i, size, weights.shape))
            if bias.shape != (weights.shape[0], ):
                raise ShapeInconsistencyError(
                    'layer %d: bias shape %r does not match %d outputs' %
                    (i, bias.shape, weights.shape[0]))
            check_finite('layers[%d].weights' % i, weights)
            check_finite('layers[%d].bias' % i, bias)
            self.layers.append((weights, bias))
            size = weights.shape[0]
        if size != self.num_classes:
            raise ShapeInconsistencyError(
                'last layer has %d outputs for %d classes' %
                (size, self.num_classes))

    def _logits(self, values):
        hidden = values.reshape(-1)
        for weights, bias in self.layers[:-1]:
            hidden = np.maximum(weights.dot(hidden) + bias, 0.0)
        weights, bias = self.layers[-1]
        return weights.dot(hidden) + bias

    def parameters(self):
        return {'layers': [{'weights': w.tolist(), 'bias': b.tolist()}
                           for w, b in self.layers]}
