# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

from __future__ import absolute_import

from .tower import Tower
from .tower import TowerElem
from .tower import TowerPoint
from .tower import NonzeroCertificate
from .tower import invariant_generator_identity
from .tower import is_nonzero_witness
from .tower import RETRY_BUDGET

__all__ = ('Tower',
           'TowerElem',
           'TowerPoint',
           'NonzeroCertificate',
           'invariant_generator_identity',
           'is_nonzero_witness',
           'RETRY_BUDGET')
