# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

"""
Enums shared by the coefficient fields and everything built on them.
"""

from enum import Enum


class Decision(Enum):
    'Answer of a partial decision procedure such as a cube test'
    no = 0
    yes = 1
    unknown = 2

    @classmethod
    def of(cls, flag):
        return cls.yes if flag else cls.no


def combine_all(decisions):
    '''
    Conjunction of tri-state answers: no wins over unknown, unknown over yes.

    >>> combine_all([Decision.yes, Decision.unknown])
    <Decision.unknown: 2>
    '''
    decisions = list(decisions)
    if Decision.no in decisions:
        return Decision.no
    if Decision.unknown in decisions:
        return Decision.unknown
    return Decision.yes
