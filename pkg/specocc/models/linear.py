# -*- coding: utf-8 -*-
"""
This module contains the linear classifier.
"""
import numpy as np

from specocc.api.errors import ShapeInconsistencyError
from specocc.models.oracle import ClassifierOracle
from specocc.models.oracle import check_finite


class LinearOracle(ClassifierOracle):
    """
    Softmax linear classifier: ``softmax(W . flatten(x) + b)``.

    Multichannel inputs are flattened step-major, i.e. the weight column of
    ``(step, channel)`` is ``step * channels + channel``.
    """
    kind = 'linear'

    def __init__(self, weights, bias, num_classes, input_length,
                 input_channels=1):
        """
        :param weights: ``(num_classes, input_length * input_channels)``
            weight matrix
        :param bias: vector of ``num_classes`` biases
        :param num_classes: number of classes
        :param input_length: number of time steps
        :param input_channels: number of channels
        """
        super(LinearOracle, self).__init__(
            num_classes, input_length, input_channels)
        self.weights = np.array(weights, dtype=float)
        self.bias = np.array(bias, dtype=float)
        expected = (self.num_classes,
                    self.expected_length * self.expected_channels)
        if self.weights.shape != expected:
            raise ShapeInconsistencyError(
                'linear weights: expected shape %r, got %r' %
                (expected, self.weights.shape))
        if self.bias.shape != (self.num_classes, ):
            raise ShapeInconsistencyError(
                'linear bias: expected %d values, got shape %r' %
                (self.num_classes, self.bias.shape))
        check_finite('weights', self.weights)
        check_finite('bias', self.bias)

    def _logits(self, values):
        return self.weights.dot(values.reshape(-1)) + self.bias

    def class_weights(self, target):
        """
        Returns the weights of one class reshaped to the
        ``(length, channels)`` input layout.
        """
        return self.weights[target].reshape(
            self.expected_length, self.expected_channels)

    def parameters(self):
        return {'weights': self.weights.tolist(), 'bias': self.bias.tolist()}
