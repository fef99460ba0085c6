# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

'''
Packaged grammar and coefficient files, see README.rst in this folder.
'''

try:
    from importlib.resources import open_text
except ImportError:
    from importlib_resources import open_text

GRAMMAR = 'expression.lark'


def read_text(name):
    'The contents of a file of this folder'
    with open_text(__name__, name) as f:
        return f.read()
