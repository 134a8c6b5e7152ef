# -*- coding: utf-8 -*-
"""
specocc explains black-box time series classifiers by occluding parts of
their input, either directly in the input space (time steps) or in the
frequency space (discrete Fourier transform bins).

The package is organised in a series of sub-packages:

    - api: the numeric foundation (time series container, transforms,
      errors)
    - models: the black-box classifier abstraction and loadable models
    - attribution: input/frequency occlusion, back-projection and signal
      optimization
    - metrics: deletion curves, infidelity, sensitivity, continuity,
      class similarity and rank tables
    - data: dataset ingestion, subsampling and synthetic datasets
    - backend: the worker pool used to spread per-sample work
    - tools: the command line front end and the SVG emitters
"""
import logging


__version__ = '1.0.0'


logging.addLevelName(5, "SPECOCCDEBUG")
