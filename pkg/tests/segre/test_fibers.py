# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

import numpy as np
import pytest

from unirational.fields import QQ_FIELD
from unirational.fields import prime_field
from unirational.geiser import geiser_map
from unirational.poly import poly_ring
from unirational.segre import FiberCounter
from unirational.segre import RationalMap

P = 10007
F = prime_field(P)


def _point(*values):
    return [F.convert(v) for v in values]


def test_cubics_sharing_a_factor_pairwise():
    # u3 divides a and b, u2 divides b and c, u4 divides c and a
    counter = FiberCounter(geiser_map().reduce_mod(F), np.random.default_rng(5))
    assert all(counter._bases)
    assert counter.base_locus_size() == 7
    assert counter(counter.map.evaluate(_point(3, 17, 101))) == 2


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_geiser_base_locus_in_random_frames(seed):
    counter = FiberCounter(geiser_map().reduce_mod(F), np.random.default_rng(seed))
    assert counter.base_locus_size() == 7


def test_linear_map_has_no_base_locus():
    R, u2, u3, u4 = poly_ring(['u2', 'u3', 'u4'], QQ_FIELD)
    m = RationalMap([u2 + u3, u3 - u4, u2 + 2 * u4], (3,), QQ_FIELD).reduce_mod(F)
    counter = FiberCounter(m, np.random.default_rng(5))
    assert counter.base_locus_size() == 0
    assert counter(m.evaluate(_point(4, 9, 25))) == 1
