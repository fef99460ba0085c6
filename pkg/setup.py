#!/usr/bin/env python
# -*- encoding: utf-8 -*-
# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

from __future__ import absolute_import
from __future__ import print_function

import io
import os

from setuptools import find_packages
from setuptools import setup


PYTHON_REQUIRES = ">=3.8"

INSTALL_REQUIRES = [
    'attrs>=19.2',
    'plumbum>=1.6.9',
    'numpy>=1.17',
    'pandas>=0.24',
    'sympy>=1.6',
    'lark-parser>=0.8.0, <0.8.6',
    'importlib_resources>=1.0; python_version<"3.9"',
]

def read(*names, **kwargs):
    return io.open(
        os.path.join(os.path.dirname(__file__), *names),
        encoding=kwargs.get('encoding', 'utf8')
    ).read()

def get_version():
    g = {}
    exec(open(os.path.join("unirational", "_version.py")).read(), g)
    return g["__version__"]

extras = {
    'test': ['pytest'],
}

setup(
    name = 'Unirational',
    author = 'The Unirational developers',
    version = get_version(),
    license = 'BSD 3-Clause License',
    description = 'Exact verification of a unirational cubic-surface fibration, with tools for diagonal cubic surfaces.',
    long_description = read('README.md') + '\n\n' + read('CHANGELOG.md'),
    long_description_content_type = "text/markdown",
    packages = find_packages(exclude=['tests', 'tests.*']),
    package_data = {'': ['data/*.*']},
    python_requires = PYTHON_REQUIRES,
    install_requires = INSTALL_REQUIRES,
    tests_require = extras['test'],
    extras_require = extras,
    entry_points = {
        'console_scripts': ['unirational = unirational.__main__:main'],
    },
    keywords = [
        'algebraic geometry', 'cubic surface', 'unirationality', 'computer algebra'
    ],
    classifiers = [
        # complete classifier list: http://pypi.python.org/pypi?%3Aaction=list_classifiers
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    platforms = "Any",
)
