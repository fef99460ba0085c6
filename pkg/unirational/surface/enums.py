# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

"""
Enums describing the outcome of the cubic surface criteria.
"""

from enum import Enum


class Rationality(Enum):
    rational = 'rational'
    not_rational = 'not_rational'
    inconclusive = 'inconclusive'


class SDPattern(Enum):
    'Which constructive Swinnerton-Dyer configuration of lines is present'
    three_rational_lines = 'three_rational_lines'
    disjoint_orbit = 'disjoint_orbit'
    none = 'none'


# The three ways of splitting the coordinates {1, 2, 3, 4} into two pairs,
# zero-based. Each partition carries 9 of the 27 lines.
PARTITIONS = (((0, 1), (2, 3)),
              ((0, 2), (1, 3)),
              ((0, 3), (1, 2)))

PAIRS = tuple(pair for partition in PARTITIONS for pair in partition)
