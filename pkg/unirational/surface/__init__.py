# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

from __future__ import absolute_import

from .enums import Rationality
from .enums import SDPattern
from .enums import PARTITIONS
from .kummer import CubeClassBasis
from .kummer import KummerField
from .kummer import KummerElem
from .kummer import omega_closure
from .diagonal import DiagonalCubic
from .diagonal import SurfaceLine
from .diagonal import EckardtPoint
from .diagonal import LineConfiguration
from .diagonal import lines27
from .diagonal import lines_disjoint
from .diagonal import k_rational_lines
from .diagonal import eckardt_points
from .diagonal import eckardt_table
from .diagonal import rationality_test
from .diagonal import swinnerton_dyer_pattern
from .diagonal import unit_points
from .diagonal import fibration_surface
from .diagonal import random_split_cubic

__all__ = ('Rationality',
           'SDPattern',
           'PARTITIONS',
           'CubeClassBasis',
           'KummerField',
           'KummerElem',
           'omega_closure',
           'DiagonalCubic',
           'SurfaceLine',
           'EckardtPoint',
           'LineConfiguration',
           'lines27',
           'lines_disjoint',
           'k_rational_lines',
           'eckardt_points',
           'eckardt_table',
           'rationality_test',
           'swinnerton_dyer_pattern',
           'unit_points',
           'fibration_surface',
           'random_split_cubic')
