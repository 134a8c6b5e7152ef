# -*- coding: utf-8 -*-
"""
This module manages the output directory of a run.

A run first writes ``manifest.json`` (command, configuration, seed and
package versions), then its results, and finally an empty ``SUCCESS``
marker. A directory without marker holds partial results of a failed (or
running) run.
"""
import json
import logging
import os
import platform

import numpy as np
import pandas as pd

import specocc


def _logger():
    """ Returns the module's logger """
    return logging.getLogger(__name__)


MANIFEST = 'manifest.json'
SUCCESS = 'SUCCESS'


def versions():
    """ Versions of the packages the results depend on """
    return {'specocc': specocc.__version__, 'numpy': np.__version__,
            'pandas': pd.__version__,
            'python': platform.python_version()}


def prepare_output(out, command, config):
    """
    Creates the output directory, removes a stale success marker and
    writes the manifest.

    :param out: output directory
    :param command: command verb
    :param config: run configuration dict
    :returns: path of the manifest
    """
    if not os.path.isdir(out):
        os.makedirs(out)
    marker = os.path.join(out, SUCCESS)
    if os.path.exists(marker):
        os.remove(marker)
    path = os.path.join(out, MANIFEST)
    document = {'command': command, 'config': config,
                'seed': config.get('seed'), 'versions': versions()}
    with open(path, 'w') as f:
        json.dump(document, f, sort_keys=True, indent=1)
        f.write('\n')
    _logger().info('manifest written to %s', path)
    return path


def read_manifest(out):
    """
    Returns the manifest document of an output directory, None if there
    is none.
    """
    path = os.path.join(out, MANIFEST)
    if not os.path.isfile(path):
        return None
    with open(path, 'r') as f:
        return json.load(f)


def mark_success(out):
    """ Writes the success marker, the last file of a run """
    open(os.path.join(out, SUCCESS), 'w').close()


def is_complete(out):
    return os.path.isfile(os.path.join(out, SUCCESS))
