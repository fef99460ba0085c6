from __future__ import absolute_import

from .errors import UnirationalError
from .utilities import check_rng
from .utilities import filter_lines
from .utilities import random_prime
from .utilities import sample_primes
from .utilities import usable_primes

__all__ = ('UnirationalError', 'check_rng', 'filter_lines', 'random_prime', 'sample_primes',
           'usable_primes')
