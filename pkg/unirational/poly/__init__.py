# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

from __future__ import absolute_import

from .poly import FunctionField
from .poly import poly_ring
from .poly import scalar_field
from .poly import monic
from .poly import exact_div
from .poly import multivar_gcd
from .poly import squarefree_decompose
from .poly import multiply_out
from .poly import numer_denom
from .poly import ratfunc_is_cube
from .poly import ratfunc_cube_root
from .poly import determinant
from .poly import jacobian_det
from .poly import evaluate
from .poly import evaluate_mod
from .poly import specialize
from .poly import compose
from .poly import change_domain
from .poly import rank_mod_p
from .poly import total_degree
from .poly import is_homogeneous_of
from .binary import binary_form_roots
from .binary import binary_form_gcd
from .binary import binary_form_divide
from .binary import binary_form_mul
from .binary import evaluate_form
from .binary import form_from_coefficients

__all__ = ('FunctionField',
           'poly_ring',
           'scalar_field',
           'monic',
           'exact_div',
           'multivar_gcd',
           'squarefree_decompose',
           'multiply_out',
           'numer_denom',
           'ratfunc_is_cube',
           'ratfunc_cube_root',
           'determinant',
           'jacobian_det',
           'evaluate',
           'evaluate_mod',
           'specialize',
           'compose',
           'change_domain',
           'rank_mod_p',
           'total_degree',
           'is_homogeneous_of',
           'binary_form_roots',
           'binary_form_gcd',
           'binary_form_divide',
           'binary_form_mul',
           'evaluate_form',
           'form_from_coefficients')
