# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

from __future__ import absolute_import

from .chain import ChainEnv
from .chain import DegreeBound
from .chain import DegreeBackend
from .chain import Relation
from .chain import build_env
from .chain import lemma_relations
from .chain import roundtrip_relations
from .chain import n5_relations
from .chain import side_conditions
from .chain import mutate
from .chain import error_bound
from .verify import verify_lemma
from .verify import verify_roundtrip
from .verify import verify_n5
from .verify import verify_mutations
from .verify import certify_nonvanishing
from .verify import verify_chain

__all__ = ('ChainEnv',
           'DegreeBound',
           'DegreeBackend',
           'Relation',
           'build_env',
           'lemma_relations',
           'roundtrip_relations',
           'n5_relations',
           'side_conditions',
           'mutate',
           'error_bound',
           'verify_lemma',
           'verify_roundtrip',
           'verify_n5',
           'verify_mutations',
           'certify_nonvanishing',
           'verify_chain')
