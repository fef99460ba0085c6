# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

from __future__ import absolute_import

from .enums import Decision
from .enums import combine_all
from .fields import CycloRat
from .fields import PrimeFieldElem
from .fields import Field
from .fields import RationalField
from .fields import CyclotomicField
from .fields import PrimeField
from .fields import fp_with_omega
from .fields import prime_field
from .fields import rational_is_cube
from .fields import rational_cube_root
from .fields import QQ_FIELD
from .fields import QQ_OMEGA

__all__ = ('Decision',
           'combine_all',
           'CycloRat',
           'PrimeFieldElem',
           'Field',
           'RationalField',
           'CyclotomicField',
           'PrimeField',
           'fp_with_omega',
           'prime_field',
           'rational_is_cube',
           'rational_cube_root',
           'QQ_FIELD',
           'QQ_OMEGA')
