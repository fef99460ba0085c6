# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

'''
Run configuration and verification reports.

Every check produces one ``VerificationReport``. ``emit_report`` renders a
list of them either as a text table (via pandas) or as one JSON document,
always ordered by check name so that two runs with the same seed and
configuration produce the same bytes.
'''

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import json
import time
from enum import Enum
from functools import partial
from io import StringIO

import attr
import pandas as pd

from .utils.utilities import DEFAULT_PRIME_RANGE
from .utils.utilities import DEFAULT_SEED
from .utils.utilities import usable_primes

SCHEMA_VERSION = 1
DEFAULT_PRIMES = 20


class Status(Enum):
    verified = 'verified'
    refuted = 'refuted'
    inconclusive = 'inconclusive'

    @classmethod
    def combine(cls, statuses):
        'refuted beats inconclusive beats verified'
        statuses = list(statuses)
        if cls.refuted in statuses:
            return cls.refuted
        if cls.inconclusive in statuses:
            return cls.inconclusive
        return cls.verified


class Mode(Enum):
    exact = 'exact'
    modular = 'modular'


EXIT_CODES = {Status.verified: 0, Status.refuted: 2, Status.inconclusive: 3}


def _prime_range(value):
    low, high = (int(v) for v in value)
    return low, high


def _check_prime_range(instance, attribute, value):
    low, high = value
    if not 5 <= low < high:
        raise ValueError("Prime range must satisfy 5 <= low < high, got [{0}, {1})".format(low, high))
    usable_primes(low, high, instance.primes)


def _at_least_one(instance, attribute, value):
    if value < 1:
        raise ValueError("{0} must be at least 1, got {1}".format(attribute.name, value))


@attr.s(slots=True, frozen=True)
class RunConfig(object):
    '''
    Everything a run depends on; recorded in every structured report.

    >>> RunConfig().primes
    20
    >>> RunConfig(mode='modular').mode
    <Mode.modular: 'modular'>
    '''

    mode = attr.ib(default=Mode.exact, converter=Mode)
    primes = attr.ib(default=DEFAULT_PRIMES, converter=int, validator=_at_least_one)
    prime_range = attr.ib(default=DEFAULT_PRIME_RANGE, converter=_prime_range, validator=_check_prime_range)
    seed = attr.ib(default=DEFAULT_SEED, converter=int)
    n = attr.ib(default=4, converter=int, validator=attr.validators.in_((4, 5)))
    output = attr.ib(default='text', validator=attr.validators.in_(('text', 'json')))
    timings = attr.ib(default=False, converter=bool)

    def as_dict(self):
        return {'mode': self.mode.value,
                'primes': self.primes,
                'prime_range': list(self.prime_range),
                'seed': self.seed,
                'n': self.n}


def _jsonable(value):
    'Witness data made of ints, strings, lists and dicts only'
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in sorted(value.items(), key=lambda kv: str(kv[0]))}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, Enum):
        return value.value
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return str(value)


@attr.s(slots=True)
class VerificationReport(object):
    '''
    Outcome of one check.

    A refuted report carries the specialization where the checked identity
    failed as its ``counterexample``.
    '''

    name = attr.ib()
    anchor = attr.ib()
    mode = attr.ib(converter=Mode)
    status = attr.ib(converter=Status)
    witnesses = attr.ib(factory=list)
    counterexample = attr.ib(default=None)
    details = attr.ib(factory=dict)
    seed = attr.ib(default=None)
    timing_ms = attr.ib(default=None)
    error_bound = attr.ib(default=None)

    @property
    def ok(self):
        return self.status is Status.verified

    def as_dict(self):
        return {'name': self.name,
                'anchor': self.anchor,
                'mode': self.mode.value,
                'status': self.status.value,
                'witnesses': _jsonable(self.witnesses),
                'counterexample': _jsonable(self.counterexample),
                'details': _jsonable(self.details),
                'seed': self.seed,
                'timing_ms': self.timing_ms,
                'error_bound': self.error_bound}


def elapsed_ms(start):
    'Milliseconds since a time.perf_counter() reading'
    return int(round((time.perf_counter() - start) * 1000))


def overall_status(reports):
    return Status.combine(r.status for r in reports)


def exit_code(reports):
    return EXIT_CODES[overall_status(reports)]


def report_table(reports):
    '''
    The reports as a DataFrame indexed by check name.

    >>> r = VerificationReport('lemma5', 'Lemma 5', 'exact', 'verified')
    >>> report_table([r]).loc['lemma5', 'status']
    'verified'
    '''
    rows = [r.as_dict() for r in sorted(reports, key=lambda r: r.name)]
    columns = ['name', 'anchor', 'mode', 'status', 'error_bound', 'timing_ms']
    df = pd.DataFrame(rows, columns=columns + ['witnesses'])
    df['witnesses'] = df['witnesses'].apply(len)
    return df.set_index('name')


def emit_report(reports, config=None, ret_output=False):
    '''
    Render reports, sorted by name.

    Parameters
    ----------
    reports: list of VerificationReport
    config: RunConfig, optional
        Selects the output format and is embedded in JSON output.
    ret_output: bool, optional, default=False
        Return the rendered text instead of printing it.
    '''
    config = RunConfig() if config is None else config
    if ret_output:
        output = StringIO()
        printer = partial(print, file=output)
    else:
        printer = print

    reports = sorted(reports, key=lambda r: r.name)
    if not config.timings:
        for r in reports:
            r.timing_ms = None

    if config.output == 'json':
        document = {'schema_version': SCHEMA_VERSION,
                    'config': config.as_dict(),
                    'status': overall_status(reports).value,
                    'records': [r.as_dict() for r in reports]}
        printer(json.dumps(document, indent=2, sort_keys=True))
    else:
        with pd.option_context('display.max_rows', None, 'display.width', 200):
            printer(report_table(reports).to_string() if reports else '(no checks)')
        for r in reports:
            if r.status is Status.refuted:
                printer('{0}: counterexample {1}'.format(r.name, json.dumps(_jsonable(r.counterexample),
                                                                            sort_keys=True)))
        printer('overall:', overall_status(reports).value)

    if ret_output:
        return output.getvalue()
