# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

import numpy as np
import pytest

from unirational.report import RunConfig
from unirational.utils import random_prime
from unirational.utils import sample_primes
from unirational.utils import usable_primes


# 241 and 271 are = 1 mod 3, the primes in between are = 2 mod 3
NO_USABLE_PRIME = (242, 271)


def test_usable_primes():
    assert usable_primes(2, 40, 4) == [7, 13, 19, 31]
    assert usable_primes(*NO_USABLE_PRIME, count=0) == []


def test_range_without_usable_prime():
    rng = np.random.default_rng(3)
    with pytest.raises(ValueError):
        usable_primes(*NO_USABLE_PRIME, count=1)
    with pytest.raises(ValueError):
        random_prime(rng, *NO_USABLE_PRIME)
    with pytest.raises(ValueError):
        sample_primes(rng, 1, *NO_USABLE_PRIME)
    with pytest.raises(ValueError):
        RunConfig(prime_range=NO_USABLE_PRIME)


def test_sample_more_primes_than_the_range_holds():
    rng = np.random.default_rng(3)
    assert sorted(sample_primes(rng, 2, 230, 272)) == [241, 271]
    with pytest.raises(ValueError):
        sample_primes(rng, 3, 230, 272)
    with pytest.raises(ValueError):
        RunConfig(primes=3, prime_range=(230, 272))
