# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

from __future__ import absolute_import

from .expression import ExpressionBuilder
from .expression import Lowering
from .expression import expression_parser
from .expression import parse_expr
from .expression import to_source
from .expression import to_polynomial
from .expression import to_element
from .expression import variables_of
from .expression import random_expression
from .coefficients import CoefficientFile
from .coefficients import read_coefficients
from .coefficients import load_coefficients
from .coefficients import packaged_coefficients

__all__ = ('ExpressionBuilder',
           'Lowering',
           'expression_parser',
           'parse_expr',
           'to_source',
           'to_polynomial',
           'to_element',
           'variables_of',
           'random_expression',
           'CoefficientFile',
           'read_coefficients',
           'load_coefficients',
           'packaged_coefficients')
