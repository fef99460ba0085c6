# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

from __future__ import absolute_import

from .geiser import BASE_POINTS
from .geiser import BRANCH_LINES
from .geiser import DOUBLE_POINTS
from .geiser import PRINTED_CONTRACTED_IMAGES
from .geiser import RAMIFICATION_LINES
from .geiser import TRIPLE_POINTS
from .geiser import GeiserFibers
from .geiser import Incidence
from .geiser import branch_quartic
from .geiser import contracted_images
from .geiser import double_cover_identity
from .geiser import exceptional_images
from .geiser import geiser_map
from .geiser import projective
from .geiser import ramification_incidences
from .geiser import ramification_polynomial
from .geiser import verify_base_points
from .geiser import verify_contracted_images
from .geiser import verify_double_cover
from .geiser import verify_double_cover_identity
from .geiser import verify_geiser
from .geiser import verify_ramification

__all__ = ('BASE_POINTS',
           'BRANCH_LINES',
           'DOUBLE_POINTS',
           'PRINTED_CONTRACTED_IMAGES',
           'RAMIFICATION_LINES',
           'TRIPLE_POINTS',
           'GeiserFibers',
           'Incidence',
           'branch_quartic',
           'contracted_images',
           'double_cover_identity',
           'exceptional_images',
           'geiser_map',
           'projective',
           'ramification_incidences',
           'ramification_polynomial',
           'verify_base_points',
           'verify_contracted_images',
           'verify_double_cover',
           'verify_double_cover_identity',
           'verify_geiser',
           'verify_ramification')
