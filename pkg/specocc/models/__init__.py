"""
The models package contains the black-box classifier abstraction
(:class:`ClassifierOracle`) and the loadable models: linear, multilayer
perceptron and band power (synthetic ground truth) classifiers.
"""
from .oracle import ClassifierOracle
from .oracle import softmax
from .linear import LinearOracle
from .mlp import MlpOracle
from .bandpower import BandRule
from .bandpower import BandpowerOracle
from .bandpower import band_energy
from .bandpower import make_bandpower_oracle
from .spec import ModelSpec
from .spec import load_model
from .spec import save_model


__all__ = [
    'ClassifierOracle',
    'softmax',
    'LinearOracle',
    'MlpOracle',
    'BandRule',
    'BandpowerOracle',
    'band_energy',
    'make_bandpower_oracle',
    'ModelSpec',
    'load_model',
    'save_model',
]
