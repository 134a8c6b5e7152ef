"""
The api package contains the numeric foundation shared by every other
package: the time series/spectrum containers, the discrete Fourier
transforms and the error taxonomy.
"""
from .errors import SpecoccError
from .signal import TimeSeries
from .signal import Spectrum
from .signal import band_component
from .signal import channelwise_fft
from .signal import dft_forward
from .signal import dft_inverse
from .signal import expand_bins
from .signal import num_frequencies
from .signal import suppress_bins


__all__ = [
    'SpecoccError',
    'TimeSeries',
    'Spectrum',
    'band_component',
    'channelwise_fft',
    'dft_forward',
    'dft_inverse',
    'expand_bins',
    'num_frequencies',
    'suppress_bins',
]
