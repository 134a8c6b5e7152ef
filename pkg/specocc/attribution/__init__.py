"""
The attribution package contains the occlusion based attribution methods:

    - traditional occlusion over time steps (:func:`occlusion_attribution`)
    - frequency occlusion over DFT bins (:func:`frequency_attribution`)
    - back-projection of a frequency map to the input space
      (:func:`project_to_input_space`)
    - signal optimization by frequency masking (:func:`optimize_signal`)
    - the combination of both (:func:`combined_attribution`)
    - a random baseline (:func:`random_attribution`)

"""
from .maps import AttributionMap
from .maps import DOMAINS
from .maps import FREQUENCY
from .maps import INPUT
from .maps import METHODS
from .maps import attributed_signal
from .maps import load_map
from .maps import normalize
from .maps import normalize_scores
from .maps import save_map
from .config import MaskPolicy
from .config import OcclusionConfig
from .occlusion import occlusion_attribution
from .occlusion import window_starts
from .frequency import frequency_attribution
from .frequency import optimize_signal
from .frequency import project_to_input_space
from .frequency import signal_change
from .combined import combined_attribution
from .randomized import random_attribution


__all__ = [
    'AttributionMap',
    'DOMAINS',
    'FREQUENCY',
    'INPUT',
    'METHODS',
    'attributed_signal',
    'load_map',
    'normalize',
    'normalize_scores',
    'save_map',
    'MaskPolicy',
    'OcclusionConfig',
    'occlusion_attribution',
    'window_starts',
    'frequency_attribution',
    'optimize_signal',
    'project_to_input_space',
    'signal_change',
    'combined_attribution',
    'random_attribution',
]
