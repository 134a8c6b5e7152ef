# -*- coding: utf-8 -*-
"""
This scripts configures the test suite. We do two things:

    - setup the logging module
    - provide the synthetic dataset shared by the test modules
"""
import logging

import pytest


# -------------------
# Setup runtest
# -------------------
def pytest_runtest_setup(item):
    """
    Logs the name of the test about to run.

    :param item: test item to run
    """
    module, line, method = item.location
    module = module.replace('.py', '.')
    logging.info("------------------- %s -------------------",
                 module + method)


# -------------------
# Setup logging
# -------------------
logging.basicConfig(level=logging.DEBUG,
                    filename='pytest.log',
                    filemode='w')


# -------------------
# Session fixtures
# -------------------
@pytest.fixture(scope="session")
def synthetic():
    """
    Noiseless two class synthetic dataset (bins 3 and 9, 64 steps) and its
    band power classifier.
    """
    from specocc.data import generate_synthetic
    dataset, spec = generate_synthetic([3, 9], length=64, count=20, seed=0)
    return dataset, spec.build()
