#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Setup script for specocc
"""
import sys

from setuptools import setup, find_packages
from specocc import __version__

try:
    from setuptools.command.test import test as TestCommand
except ImportError:
    # the test command is gone from recent setuptools, run pytest directly
    TestCommand = None


cmdclass = {}


if TestCommand is not None:
    class PyTest(TestCommand):
        user_options = [('pytest-args=', 'a', "Arguments to pass to py.test")]

        def initialize_options(self):
            TestCommand.initialize_options(self)
            self.pytest_args = ""

        def run_tests(self):
            # import here, cause outside the eggs aren't loaded
            import pytest
            if self.pytest_args:
                self.pytest_args = self.pytest_args.replace('"', '').split(
                    ' ')
            else:
                self.pytest_args = []
            print('running test command: py.test "%s"' % ' '.join(
                self.pytest_args))
            errno = pytest.main(self.pytest_args)
            sys.exit(errno)

    cmdclass['test'] = PyTest


DESCRIPTION = 'Occlusion attribution of time series classifiers in the ' \
    'input and in the frequency space'


def readme():
    return str(open('README.rst').read())


setup(
    name='specocc',
    version=__version__,
    packages=[p for p in find_packages() if 'test' not in p],
    keywords=["explainability attribution occlusion time series fourier"],
    license='MIT',
    description=DESCRIPTION,
    long_description=readme(),
    python_requires='>=3.8',
    install_requires=['numpy>=1.17', 'pandas>=1.5'],
    tests_require=['pytest-xdist', 'pytest-cov', 'pytest'],
    entry_points={
        'console_scripts': [
            'specocc = specocc.tools.cli:main'
        ],
    },
    zip_safe=False,
    cmdclass=cmdclass,
    classifiers=[
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Artificial Intelligence'])
