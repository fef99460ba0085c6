# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

"""
The checks behind each command of the console application.

Every function here returns a list of VerificationReport, ready for
``emit_report``. Surfaces and points are read with the expression parser,
so the same syntax works on the command line and in coefficient files.
"""

from __future__ import absolute_import, division, print_function

import itertools
import os
import time

from .chain import build_env
from .chain import certify_nonvanishing
from .chain import verify_chain
from .expr import CoefficientFile
from .expr import load_coefficients
from .expr import packaged_coefficients
from .expr import parse_expr
from .expr import random_expression
from .expr import to_element
from .expr import to_source
from .fields import Decision
from .fields import QQ_FIELD
from .fields import QQ_OMEGA
from .fields import fp_with_omega
from .geiser import verify_geiser
from .poly import FunctionField
from .poly import multiply_out
from .poly import multivar_gcd
from .poly import poly_ring
from .poly import squarefree_decompose
from .report import Mode
from .report import RunConfig
from .report import Status
from .report import VerificationReport
from .report import elapsed_ms
from .segre import check_dominant
from .segre import map_degree_estimate
from .segre import unirational_map
from .segre.maps import finite_field
from .surface import Rationality
from .surface import eckardt_points
from .surface import eckardt_table
from .surface import lines27
from .surface import rationality_test
from .surface import random_split_cubic
from .surface import unit_points
from .tower import Tower
from .utils import check_rng
from .utils import sample_primes
from .utils.errors import EckardtPointError
from .utils.errors import ExpressionError
from .utils.errors import SingularSurfaceError
from .utils.errors import SpecializationError

FIBRATION_SURFACE = 'fibration_surface.txt'

# number of random specializations of a surface over a function field
SPECIALIZATIONS = 5


def parse_field(text):
    '''
    The field named on the command line: ``Q``, ``Q(omega)`` or a prime.

    >>> parse_field('Q(omega)') is QQ_OMEGA
    True
    '''
    name = text.replace(' ', '')
    if name in ('Q', 'QQ'):
        return QQ_FIELD
    if name in ('Q(omega)', 'QQ(omega)'):
        return QQ_OMEGA
    if name.isdigit():
        return finite_field(int(name))
    raise ExpressionError("Unknown field '{0}', expected Q, Q(omega) or a prime".format(text))


def read_surface_file(coeffs=None, fibration=False):
    'The coefficients from a file, an inline list, or the packaged fibration surface'
    if fibration:
        return packaged_coefficients(FIBRATION_SURFACE)
    if coeffs is None:
        raise ExpressionError("Give the coefficients of the surface, or the fibration surface")
    if os.path.isfile(coeffs):
        return load_coefficients(coeffs)
    return CoefficientFile.from_inline(coeffs)


def _specialization(surface, field, rng):
    'Random nonzero parameter values where the surface stays smooth'
    while True:
        values = [field.random_element(rng, nonzero=True) for _ in surface.field.names]
        try:
            special = surface.specialize(values, field)
        except SpecializationError:
            continue
        if special.is_smooth():
            return values, special


def load_surface(coeffs=None, fibration=False, field=None, config=None):
    '''
    The surface named on the command line, and the parameter values used to
    bring it to a prime field (None when nothing was specialized).
    '''
    config = RunConfig() if config is None else config
    surface = read_surface_file(coeffs, fibration).surface()
    if field is None:
        return surface, None
    F = parse_field(field) if isinstance(field, str) else field
    if isinstance(surface.field, FunctionField):
        if not hasattr(F, 'p'):
            raise ExpressionError("A surface with parameters can only be specialized to a prime field")
        values, surface = _specialization(surface, F, check_rng('specialize', config.seed))
        return surface, values
    return surface.over(F), None


def parse_point(text, field):
    'A point given as comma separated expressions in the parameters of ``field``'
    names = list(getattr(field, 'names', ()))
    point = []
    column = 0
    for part in text.split(','):
        tree = parse_expr(part, names, column_offset=column)
        point.append(to_element(tree, field))
        column += len(part) + 1
    return point


def _report(name, anchor, status, config, start, **kwargs):
    return VerificationReport(name, anchor, kwargs.pop('mode', Mode.exact), status, seed=config.seed,
                              timing_ms=elapsed_ms(start), **kwargs)


def run_lemmas(config):
    return verify_chain(config)


def run_nonvanishing(config):
    return certify_nonvanishing(build_env(config.n), config)


def check_lines(surface, config, name='cubic.lines'):
    'The 27 lines: all on S, each meeting exactly 10 others'
    start = time.perf_counter()
    configuration = lines27(surface)
    lines = list(configuration.lines)
    counts = configuration.meeting_counts()
    off = [str(line) for line in lines if not line.on_surface()]
    wrong = ['{0}: {1}'.format(line, count) for line, count in zip(lines, counts) if count != 10]
    status = Status.verified if len(lines) == 27 and not off and not wrong else Status.refuted
    counterexample = None if status is Status.verified else {'off_surface': off, 'meeting_counts': wrong}
    return _report(name, '27 lines', status, config, start,
                   counterexample=counterexample,
                   details={'lines': len(lines),
                            'rational': sum(line.rational is Decision.yes for line in lines),
                            'meeting_counts': sorted(set(counts)),
                            'table': configuration.table().to_dict('records')})


def check_eckardt(surface, config, name='cubic.eckardt'):
    'The 18 Eckardt points, each with its tangent section split into three lines'
    start = time.perf_counter()
    points = eckardt_points(surface)
    failed = [str(p.coordinates) for p in points if not p.verified]
    status = Status.verified if len(points) == 18 and not failed else Status.refuted
    return _report(name, '18 Eckardt points', status, config, start,
                   counterexample=failed or None,
                   details={'points': len(points),
                            'rational': sum(p.rational is Decision.yes for p in points),
                            'table': eckardt_table(points).to_dict('records')})


def check_rationality(surface, config, point=None, expected=None):
    '''
    The rationality certificate; with ``expected``, a different verdict is
    refuted. Shifted surfaces also get their 27 unit points checked.
    '''
    start = time.perf_counter()
    certificate = rationality_test(surface, point)
    if expected is not None:
        status = Status.verified if certificate.verdict is expected else Status.refuted
    elif certificate.verdict is Rationality.inconclusive:
        status = Status.inconclusive
    else:
        status = Status.verified
    reports = [_report('cubic.rationality', 'rationality criterion', status, config, start,
                       counterexample=None if status is not Status.refuted else certificate.as_dict(),
                       details=certificate.as_dict())]
    if surface.is_shifted:
        start = time.perf_counter()
        points = unit_points(surface)
        reports.append(_report('cubic.unit_points', '27 points with cube root of unity coordinates',
                               Status.verified if len(points) == 27 else Status.refuted, config, start,
                               details={'points': len(points)}))
    return reports


def _map_report(name, surface, point, p, trials, rng, config, values=None):
    start = time.perf_counter()
    details = {'prime': p}
    if values is not None:
        details['parameters'] = [str(v) for v in values]
    try:
        dominant = unirational_map(surface, point)
    except EckardtPointError as err:
        details['error'] = str(err)
        return _report(name, 'unirational map', Status.inconclusive, config, start, details=details)
    m = dominant.rational_map
    details.update(case=dominant.case.name, multidegree=list(m.multidegree), degree_bound=dominant.degree_bound)
    satisfies = m.satisfies(surface)
    jacobian_points = check_dominant(m, p, rng)
    estimate = map_degree_estimate(m, p, trials, rng)
    details.update(satisfies=satisfies, jacobian_points=jacobian_points, degree=estimate.as_dict())
    if not satisfies or (estimate.degree is not None and estimate.degree > dominant.degree_bound):
        status = Status.refuted
    elif jacobian_points is None or estimate.degree is None:
        status = Status.inconclusive
    else:
        status = Status.verified
    return _report(name, 'unirational map', status, config, start, mode=Mode.modular, details=details)


def run_unirational(surface, point, config, p=None, trials=2, samples=SPECIALIZATIONS):
    '''
    Build the unirational map through ``point`` and check it: it lands on S,
    its Jacobian has full rank mod p, and its fiber count stays within the
    construction's degree.

    A surface over a function field is checked at ``samples`` random
    specializations over F_p.
    '''
    rng = check_rng('unirational', config.seed)
    if p is None:
        p = getattr(surface.field, 'p', None) or sample_primes(rng, 1, *config.prime_range)[0]
    if not isinstance(surface.field, FunctionField):
        return [_map_report('unirational', surface, point, p, trials, rng, config)]
    F = finite_field(p)
    reports = []
    for index in range(samples):
        values, special = _specialization(surface, F, rng)
        special_point = [surface.field.specialize(x, values, F) for x in point]
        if not special.contains(special_point):
            raise SingularSurfaceError("The point leaves the surface at {0}".format(values))
        reports.append(_map_report('unirational.{0}'.format(index), special, special_point, p, trials, rng,
                                   config, values))
    return reports


def run_geiser(config, p=10007, trials=200):
    return verify_geiser(p, trials, config)


def _property_report(name, anchor, config, start, checked, failures):
    status = Status.refuted if failures else Status.verified
    return _report(name, anchor, status, config, start, counterexample=failures[0] if failures else None,
                   details={'checked': checked, 'failed': len(failures)})


def selftest_field_axioms(config, rounds=25):
    start = time.perf_counter()
    rng = check_rng('selftest.fields', config.seed)
    fields = [QQ_FIELD, QQ_OMEGA] + [fp_with_omega(p) for p in sample_primes(rng, 2, *config.prime_range)]
    failures = []
    checked = 0
    for F in fields:
        for _ in range(rounds):
            x, y, z = (F.random_element(rng) for _ in range(3))
            laws = [F.eq((x + y) + z, x + (y + z)),
                    F.eq((x * y) * z, x * (y * z)),
                    F.eq(x * (y + z), x * y + x * z),
                    F.eq(x + F.neg(x), F.zero()),
                    F.eq(x * F.one(), x),
                    F.is_zero(x) or F.eq(F.inv(x) * x, F.one())]
            checked += 1
            if not all(laws):
                failures.append({'field': str(F), 'x': str(x), 'y': str(y), 'z': str(z)})
    return _property_report('selftest.fields', 'field axioms', config, start, checked, failures)


def _random_poly(ring, field, rng, degree=2, density=0.5):
    coeffs = {}
    for i in range(degree + 1):
        for j in range(degree + 1 - i):
            if rng.random() < density:
                coeffs[(i, j)] = field.to_domain(field.random_element(rng))
    return ring.from_dict(coeffs)


def selftest_squarefree(config, rounds=8):
    'Square-free parts multiply back and are pairwise coprime'
    start = time.perf_counter()
    rng = check_rng('selftest.squarefree', config.seed)
    failures = []
    checked = 0
    for field in (QQ_FIELD, fp_with_omega(sample_primes(rng, 1, *config.prime_range)[0])):
        S, _, _ = poly_ring(['x', 'y'], field)
        for _ in range(rounds):
            g1, g2, g3 = (_random_poly(S, field, rng) for _ in range(3))
            f = g1 * g2 ** 2 * g3 ** 3
            if not f:
                continue
            checked += 1
            content, parts = squarefree_decompose(f)
            coprime = all(multivar_gcd(fi, fj) == 1 for (fi, _), (fj, _) in itertools.combinations(parts, 2))
            if multiply_out(S, content, parts) != f or not coprime:
                failures.append({'field': str(field), 'f': str(f)})
    return _property_report('selftest.squarefree', 'square-free decomposition', config, start, checked, failures)


def selftest_cube_test(config):
    'An exact cube stays a cube at every specialization; a non-cube is refuted at some'
    start = time.perf_counter()
    rng = check_rng('selftest.cubes', config.seed)
    K = FunctionField(QQ_FIELD, ['s3', 's4'])
    k3, k4 = K.gens
    cube = ((k3 - 2 * k4) / (k3 * k4 + 1)) ** 3
    non_cube = k3 / k4
    failures = []
    checked = 0
    separated = False
    for p in sample_primes(rng, config.primes, *config.prime_range):
        F = fp_with_omega(p)
        values = [F.random_element(rng, nonzero=True) for _ in range(2)]
        try:
            special_cube = K.specialize(cube, values, F)
            special_non_cube = K.specialize(non_cube, values, F)
        except SpecializationError:
            continue
        checked += 1
        if F.is_cube(special_cube) is not Decision.yes:
            failures.append({'p': p, 'values': [str(v) for v in values]})
        separated = separated or F.is_cube(special_non_cube) is Decision.no
    if K.is_cube(cube) is not Decision.yes or K.is_cube(non_cube) is not Decision.no:
        failures.append({'exact': 'cube test over Q(s3, s4)'})
    if not separated:
        failures.append({'non_cube': 'never refuted by specialization'})
    return _property_report('selftest.cubes', 'cube test under specialization', config, start, checked, failures)


def _random_tower_elem(tower, rng, terms=3, levels=2):
    elem = tower.zero()
    for _ in range(terms):
        exponent = [0] * tower.n
        for i in range(levels):
            exponent[i] = int(rng.integers(0, 6))
        c = int(rng.integers(-5, 6))
        if rng.random() < 0.3:
            c = c * tower.x(int(rng.integers(1, levels + 1)))
        elem = elem + tower.monomial(exponent) * c
    return elem


def selftest_tower(config, count=50):
    start = time.perf_counter()
    rng = check_rng('selftest.tower', config.seed)
    V = Tower(4)
    failures = []
    checked = 0
    while checked < count:
        elem = _random_tower_elem(V, rng)
        if elem.is_zero():
            continue
        checked += 1
        if elem * elem.inverse() != 1:
            failures.append({'elem': str(elem)})
    return _property_report('selftest.tower', 'inverses in the Kummer tower', config, start, checked, failures)


def selftest_round_trip(config, count=200):
    start = time.perf_counter()
    rng = check_rng('selftest.expressions', config.seed)
    names = ['s3', 's4', 'x']
    failures = []
    for _ in range(count):
        tree = random_expression(rng, names, 5)
        if parse_expr(to_source(tree), names) != tree:
            failures.append({'source': to_source(tree)})
    return _property_report('selftest.expressions', 'print then parse', config, start, count, failures)


def selftest_split_cubics(config, count=10):
    'Random cubics with all lines rational: 27 lines and 18 Eckardt points each'
    rng = check_rng('selftest.split_cubics', config.seed)
    reports = []
    for index, p in enumerate(sample_primes(rng, count, *config.prime_range)):
        surface = random_split_cubic(fp_with_omega(p), rng)
        reports.append(check_lines(surface, config, 'selftest.split_cubic.{0}.lines'.format(index)))
        reports.append(check_eckardt(surface, config, 'selftest.split_cubic.{0}.eckardt'.format(index)))
    return reports


def run_selftest(config):
    reports = [selftest_field_axioms(config),
               selftest_squarefree(config),
               selftest_cube_test(config),
               selftest_tower(config),
               selftest_round_trip(config)]
    reports.extend(selftest_split_cubics(config))
    surface = packaged_coefficients(FIBRATION_SURFACE).surface()
    reports.extend(check_rationality(surface, config, expected=Rationality.not_rational))
    return reports
