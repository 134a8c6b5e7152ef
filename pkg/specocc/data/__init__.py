"""
The data package contains the dataset container and its text formats,
stratified subsampling, the synthetic ground truth datasets and the run
configuration.
"""
from .dataset import DELIMITED
from .dataset import Dataset
from .dataset import FORMATS
from .dataset import MULTIVARIATE
from .dataset import load_dataset
from .dataset import save_dataset
from .dataset import subsample
from .dataset import znormalize
from .synthetic import SyntheticSpec
from .synthetic import generate_synthetic
from .synthetic import parse_bands
from .config import DEFAULTS
from .config import RunConfig


__all__ = [
    'DELIMITED',
    'Dataset',
    'FORMATS',
    'MULTIVARIATE',
    'load_dataset',
    'save_dataset',
    'subsample',
    'znormalize',
    'SyntheticSpec',
    'generate_synthetic',
    'parse_bands',
    'DEFAULTS',
    'RunConfig',
]
