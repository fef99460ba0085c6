# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

from __future__ import absolute_import

from .sections import SectionCase
from .sections import PlaneCubicSection
from .sections import tangent_section
from .maps import RationalMap
from .maps import DominantMap
from .maps import parametrize_singular_cubic
from .maps import unirational_map
from .fibers import DegreeEstimate
from .fibers import FiberCounter
from .fibers import fiber_size
from .fibers import map_degree_estimate
from .fibers import check_dominant

__all__ = ('SectionCase',
           'PlaneCubicSection',
           'tangent_section',
           'RationalMap',
           'DominantMap',
           'parametrize_singular_cubic',
           'unirational_map',
           'DegreeEstimate',
           'FiberCounter',
           'fiber_size',
           'map_degree_estimate',
           'check_dominant')
