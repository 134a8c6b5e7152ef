#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Builds the specocc API reference (requires Sphinx).

The html pages are written to ``doc/build/html``; ``--apidoc`` regenerates
the module stubs of ``doc/source`` first, ``--clean`` wipes previous builds.
"""
import argparse
import os
import shutil
import sys

from sphinx.cmd.build import build_main
from sphinx.ext.apidoc import main as apidoc_main


DOC_DIR = os.path.dirname(os.path.abspath(__file__))
SOURCE_DIR = os.path.join(DOC_DIR, 'source')
BUILD_DIR = os.path.join(DOC_DIR, 'build', 'html')
PACKAGE_DIR = os.path.join(os.path.dirname(DOC_DIR), 'specocc')


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.strip())
    parser.add_argument('--clean', action='store_true',
                        help='remove the previous build first')
    parser.add_argument('--apidoc', action='store_true',
                        help='regenerate the module stubs (existing files '
                             'are kept, delete them to refresh a module)')
    args = parser.parse_args(argv)
    if args.clean and os.path.isdir(BUILD_DIR):
        shutil.rmtree(BUILD_DIR)
    if args.apidoc:
        status = apidoc_main(['-e', '-o', SOURCE_DIR, PACKAGE_DIR])
        if status:
            return status
    return build_main(['-b', 'html', SOURCE_DIR, BUILD_DIR])


if __name__ == '__main__':
    sys.exit(main())
