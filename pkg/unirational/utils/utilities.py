# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import zlib

import numpy as np
from sympy.ntheory import isprime
from sympy.ntheory import nextprime

DEFAULT_SEED = 20200101
DEFAULT_PRIME_RANGE = (10**4, 10**6)


def check_rng(name, seed=DEFAULT_SEED):
    '''
    Independent random stream for one named check.

    The stream depends only on the master seed and the check name, never on
    the order in which checks run.
    '''
    key = zlib.crc32(name.encode('utf-8')) & 0xffffffff
    return np.random.default_rng(np.random.SeedSequence([int(seed), key]))


def random_prime(rng, low=DEFAULT_PRIME_RANGE[0], high=DEFAULT_PRIME_RANGE[1]):
    '''
    Random prime p in [low, high) with p = 1 mod 3.

    >>> import numpy as np
    >>> p = random_prime(np.random.default_rng(1), 100, 200)
    >>> 100 <= p < 200 and p % 3 == 1
    True
    '''
    if high - low < 20:
        raise ValueError("Prime range [{0}, {1}) is too narrow".format(low, high))
    usable_primes(low, high, 1)
    while True:
        p = nextprime(int(rng.integers(low, high)) - 1)
        while p < high and p % 3 != 1:
            p = nextprime(p)
        if p < high and p > 3:
            return int(p)


def usable_primes(low, high, count):
    '''
    The first ``count`` primes p = 1 mod 3 in [low, high).

    Raises ValueError when the range holds fewer.

    >>> usable_primes(10, 50, 3)
    [13, 19, 31]
    '''
    primes = []
    p = nextprime(max(int(low), 3) - 1)
    while p < high and len(primes) < count:
        if p % 3 == 1:
            primes.append(int(p))
        p = nextprime(p)
    if len(primes) < count:
        raise ValueError("[{0}, {1}) holds {2} primes p = 1 mod 3, {3} are needed".format(
            low, high, len(primes), count))
    return primes


def sample_primes(rng, count, low=DEFAULT_PRIME_RANGE[0], high=DEFAULT_PRIME_RANGE[1]):
    'Distinct primes p = 1 mod 3, in sampling order'
    usable_primes(low, high, count)
    primes = []
    while len(primes) < count:
        p = random_prime(rng, low, high)
        if p not in primes:
            primes.append(p)
    return primes


def is_usable_prime(p):
    'Primes the toolkit specializes to: p > 3 and p = 1 mod 3'
    return p > 3 and p % 3 == 1 and isprime(p)


def filter_lines(matcher, input):
    '''
    Filter out numbered lines into a new variable if they match a regular expression.

    ``input`` holds (line number, text) pairs; the matches come back as
    group dicts with an extra ``line`` key, the rest unchanged.

    >>> import re
    >>> filter_lines(re.compile(r'params = (?P<names>.*)'), [(1, 'params = s'), (2, 'a1 = s')])
    ([{'names': 's', 'line': 1}], [(2, 'a1 = s')])
    '''
    output = [dict(matcher.match(l).groupdict(), line=n) for n, l in input if matcher.match(l) is not None]
    input = [(n, l) for n, l in input if matcher.match(l) is None]
    return output, input
