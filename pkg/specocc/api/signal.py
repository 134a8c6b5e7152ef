# -*- coding: utf-8 -*-
"""
This module contains the numeric foundation of specocc: the time series
container, the spectrum container and the discrete Fourier transforms.

Conventions:

    - forward transform is unnormalized:
      ``X[k] = sum_n x[n] * exp(-2j * pi * k * n / t)``
    - inverse transform is normalized by ``1 / t``
    - a real signal of length ``t`` has ``t // 2 + 1`` independent bins.
      Bin ``k`` and bin ``t - k`` form a conjugate pair; the DC bin (and the
      Nyquist bin for even lengths) is its own mirror.

"""
import logging

import numpy as np

from specocc.api.errors import InvalidInputError
from specocc.api.errors import SymmetryViolationError


def _logger():
    """ Returns the module's logger """
    return logging.getLogger(__name__)


#: maximum imaginary residue tolerated by :func:`dft_inverse`
IMAG_TOLERANCE = 1e-6

#: tolerance used when checking the conjugate symmetry of a spectrum
SYMMETRY_TOLERANCE = 1e-9


class TimeSeries(object):
    """
    A multichannel real valued signal made up of ``length`` time steps and
    ``channels`` channels.

    The values are stored as a read-only ``(length, channels)`` float array,
    i.e. ``values[t][s]``.
    """

    @property
    def values(self):
        """ Read-only ``(length, channels)`` array """
        return self._values

    @property
    def length(self):
        """ Number of time steps """
        return self._values.shape[0]

    @property
    def channels(self):
        """ Number of channels """
        return self._values.shape[1]

    @property
    def shape(self):
        return self._values.shape

    def __init__(self, values):
        """
        :param values: array like of shape ``(length,)`` (single channel) or
            ``(length, channels)``.

        :raises: InvalidInputError if the array is empty, has more than two
            dimensions or contains non finite values.
        """
        array = np.array(values, dtype=float)
        if array.ndim == 1:
            array = array.reshape(-1, 1)
        if array.ndim != 2:
            raise InvalidInputError(
                'expected a (length, channels) array, got %d dimensions' %
                array.ndim)
        if array.shape[0] < 1 or array.shape[1] < 1:
            raise InvalidInputError('empty time series %r' % (array.shape, ))
        if not np.all(np.isfinite(array)):
            raise InvalidInputError('time series contains NaN/Inf values')
        array.flags.writeable = False
        self._values = array

    def channel(self, index):
        """
        Returns the values of one channel.

        :param index: channel index
        :rtype: numpy.ndarray
        """
        return self._values[:, index]

    def replace(self, values):
        """
        Returns a new time series with the same dimensions but new values.

        :param values: new ``(length, channels)`` values.
        """
        values = np.asarray(values, dtype=float)
        if values.shape != self.shape:
            raise InvalidInputError('cannot replace %r values by %r values' %
                                    (self.shape, values.shape))
        return TimeSeries(values)

    def __eq__(self, other):
        if not isinstance(other, TimeSeries):
            return NotImplemented
        return np.array_equal(self._values, other._values)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None

    def __repr__(self):
        return 'TimeSeries(length=%d, channels=%d)' % self.shape


class Spectrum(object):
    """
    The full discrete Fourier transform of one real channel: ``bins[k]``
    holds the coefficient of frequency ``k``.
    """

    @property
    def origin_length(self):
        """ Length of the signal the spectrum was computed from """
        return len(self.bins)

    @property
    def num_frequencies(self):
        """ Number of independent bins (``t // 2 + 1``) """
        return num_frequencies(self.origin_length)

    def __init__(self, bins):
        """
        :param bins: complex vector of length ``t``
        """
        self.bins = np.asarray(bins, dtype=complex)
        if self.bins.ndim != 1 or not len(self.bins):
            raise InvalidInputError('spectrum bins must be a non empty vector')

    def is_conjugate_symmetric(self, tolerance=SYMMETRY_TOLERANCE):
        """
        Checks ``bins[k] == conj(bins[t - k])`` for ``1 <= k < t``.

        :param tolerance: absolute tolerance
        """
        mirrored = np.conj(np.roll(self.bins[::-1], 1))
        return bool(np.all(np.abs(self.bins - mirrored) <= tolerance))

    def __repr__(self):
        return 'Spectrum(origin_length=%d)' % self.origin_length


def num_frequencies(length):
    """
    Returns the number of independent bins of a real signal of the given
    length.

    :param length: number of time steps
    """
    return length // 2 + 1


def expand_bins(weights, length):
    """
    Expands a vector defined over the independent bins to the full
    spectrum, mirror bins receiving the weight of their partner.

    :param weights: vector of ``length // 2 + 1`` values
    :param length: signal length ``t``
    :returns: vector of ``t`` values
    """
    weights = np.asarray(weights)
    f = num_frequencies(length)
    if weights.shape[0] != f:
        raise InvalidInputError('expected %d independent bins, got %d' %
                                (f, weights.shape[0]))
    return np.concatenate([weights, weights[1:length - f + 1][::-1]])


def _as_real_vector(signal):
    signal = np.asarray(signal, dtype=float)
    if signal.ndim != 1 or not len(signal):
        raise InvalidInputError('expected a non empty 1D signal')
    if not np.all(np.isfinite(signal)):
        raise InvalidInputError('signal contains NaN/Inf values')
    return signal


def dft_forward(signal):
    """
    Computes the unnormalized discrete Fourier transform of a real signal
    of any length.

    :param signal: real vector of length ``t``
    :rtype: Spectrum
    :raises: InvalidInputError if the signal contains non finite values.
    """
    return Spectrum(np.fft.fft(_as_real_vector(signal)))


def dft_inverse(spectrum):
    """
    Computes the inverse transform (``1 / t`` normalization) of a conjugate
    symmetric spectrum.

    :param spectrum: the spectrum to invert
    :type spectrum: Spectrum
    :returns: the real signal
    :raises: SymmetryViolationError if the imaginary residue of the result
        is not negligible.
    """
    signal = np.fft.ifft(spectrum.bins)
    residue = float(np.max(np.abs(signal.imag)))
    if residue >= IMAG_TOLERANCE:
        raise SymmetryViolationError(residue)
    return signal.real.copy()


def channelwise_fft(x):
    """
    Transforms every channel of a time series.

    :param x: the time series
    :type x: TimeSeries
    :returns: list of :class:`Spectrum`, one per channel (channel order is
        preserved).
    """
    return [dft_forward(x.channel(i)) for i in range(x.channels)]


def band_component(signal, weights, spectrum=None):
    """
    Returns the part of a real signal carried by the weighted bins:
    ``dft_inverse(dft_forward(signal) * expand_bins(weights))``.

    :param signal: real vector of length ``t``
    :param weights: real weights over the ``t // 2 + 1`` independent bins
    :param spectrum: precomputed spectrum of ``signal`` (optional)
    """
    if spectrum is None:
        spectrum = dft_forward(signal)
    full = expand_bins(weights, spectrum.origin_length)
    return dft_inverse(Spectrum(spectrum.bins * full))


def suppress_bins(signal, keep, spectrum=None):
    """
    Scales every independent bin (and its mirror) of a real signal by
    ``keep`` and returns the resulting real signal.

    The result is computed as ``signal - component(1 - keep)``, so bins
    kept with a weight of exactly one are left untouched and a keep vector
    made of ones returns the signal bit for bit.

    :param signal: real vector of length ``t``
    :param keep: weights in [0, 1] over the independent bins
    :param spectrum: precomputed spectrum of ``signal`` (optional)
    """
    signal = np.asarray(signal, dtype=float)
    removed = 1.0 - np.asarray(keep, dtype=float)
    if not np.any(removed):
        return signal.copy()
    return signal - band_component(signal, removed, spectrum=spectrum)
