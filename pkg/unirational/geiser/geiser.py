# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

"""
The net of plane cubics through seven points and the double cover it defines.

The three cubics

    a = (u3 - u4) u3 u4,   b = (u2 - u3) u2 u3,   c = (u4 - u2) u4 u2

vanish at seven points of P^2 and define a rational map of degree 2 onto
P^2, branched along the four lines abc(a + b + c) = 0. Its Jacobian
determinant vanishes on six lines, each of which is contracted to a point.

Fiber sizes are counted on the blow-up of the seven base points: the points
of the open set found by elimination, plus one point for each base point
whose exceptional curve maps onto a line through the target.

Examples
--------
>>> phi = geiser_map()
>>> [int(v) for v in phi.evaluate((1, 2, 3))]
[-6, -2, 6]
>>> len(BASE_POINTS)
7
"""

from __future__ import absolute_import, division, print_function

import time
import warnings
from collections import OrderedDict
from fractions import Fraction
from functools import reduce
from itertools import combinations

import attr

from ..fields import QQ_FIELD
from ..poly import compose
from ..poly import evaluate
from ..poly import exact_div
from ..poly import jacobian_det
from ..poly import multivar_gcd
from ..poly import poly_ring
from ..poly import total_degree
from ..report import Mode
from ..report import elapsed_ms
from ..report import RunConfig
from ..report import Status
from ..report import VerificationReport
from ..segre import FiberCounter
from ..segre import RationalMap
from ..segre.maps import finite_field
from ..utils import check_rng
from ..utils import sample_primes
from ..utils.errors import PrintedValueWarning
from ..utils.errors import SamplingWarning

SOURCE_NAMES = ('u2', 'u3', 'u4')
TARGET_NAMES = ('a', 'b', 'c')

TRIPLE_POINTS = ((1, 1, 1), (1, 0, 0), (0, 1, 0), (0, 0, 1))
DOUBLE_POINTS = ((0, 1, 1), (1, 0, 1), (1, 1, 0))
BASE_POINTS = TRIPLE_POINTS + DOUBLE_POINTS

# name, linear form, two points spanning the line
RAMIFICATION_LINES = (
    ('u2 = 0', (1, 0, 0), ((0, 1, 0), (0, 0, 1))),
    ('u3 = 0', (0, 1, 0), ((1, 0, 0), (0, 0, 1))),
    ('u4 = 0', (0, 0, 1), ((1, 0, 0), (0, 1, 0))),
    ('u2 = u3', (1, -1, 0), ((1, 1, 0), (0, 0, 1))),
    ('u3 = u4', (0, 1, -1), ((0, 1, 1), (1, 0, 0))),
    ('u4 = u2', (-1, 0, 1), ((1, 0, 1), (0, 1, 0))),
)

BRANCH_LINES = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1))

PRINTED_CONTRACTED_IMAGES = ((0, 1, -1), (1, 0, 1), (1, 0, -1), (1, 0, 0), (0, 1, 0), (0, 0, 1))

BASE_POINT_PRIMES = 10
FRAME_ATTEMPTS = 3
GENERIC_THRESHOLD = 0.95
BRANCH_THRESHOLD = 0.90


def _source_ring():
    return poly_ring(list(SOURCE_NAMES), QQ_FIELD)


def geiser_map():
    'The map (u2 : u3 : u4) -> (a : b : c) over QQ'
    R, u2, u3, u4 = _source_ring()
    return RationalMap([(u3 - u4) * u3 * u4, (u2 - u3) * u2 * u3, (u4 - u2) * u4 * u2], (3,), QQ_FIELD)


def ramification_polynomial():
    'The printed form 6 u2 u3 u4 (u2 - u3)(u3 - u4)(u4 - u2) of the ramification divisor'
    R, u2, u3, u4 = _source_ring()
    return 6 * u2 * u3 * u4 * (u2 - u3) * (u3 - u4) * (u4 - u2)


def branch_quartic():
    R, a, b, c = poly_ring(list(TARGET_NAMES), QQ_FIELD)
    return a * b * c * (a + b + c)


def projective(point):
    'The coordinates scaled so that the first nonzero one is 1'
    point = [Fraction(x) for x in point]
    lead = next((x for x in point if x), None)
    if lead is None:
        return tuple(point)
    return tuple(x / lead for x in point)


def _cross(v, w):
    return (v[1] * w[2] - v[2] * w[1],
            v[2] * w[0] - v[0] * w[2],
            v[0] * w[1] - v[1] * w[0])


def _dot(v, w):
    return sum((x * y for x, y in zip(v, w)), 0)


def contracted_images():
    '''
    Image of each ramification line, as an ordered mapping from the line's
    name to a point of P^2, or None when the line is not contracted.
    '''
    phi = geiser_map()
    L, s, t = poly_ring(['s', 't'], QQ_FIELD)
    images = OrderedDict()
    for name, _, (v, w) in RAMIFICATION_LINES:
        line = [s * v[i] + t * w[i] for i in range(3)]
        components = [compose(f, line, QQ_FIELD) for f in phi.components]
        common = reduce(multivar_gcd, components)
        if not common:
            images[name] = None
            continue
        quotients = [exact_div(f, common) for f in components]
        if not all(q.is_ground for q in quotients):
            images[name] = None
            continue
        images[name] = projective(QQ_FIELD.from_domain(q.LC) if q else 0 for q in quotients)
    return images


def exceptional_images():
    '''
    The line swept out by the image of the exceptional curve over each base point.

    At a base point b the differential of the map has rank 2 and sends the
    directions at b onto a line of the target; the result maps each base
    point to the linear form of that line.

    >>> exceptional_images()[(1, 0, 0)]
    (Fraction(1, 1), Fraction(0, 1), Fraction(0, 1))
    '''
    phi = geiser_map()
    jacobian = phi.jacobian()
    lines = OrderedDict()
    for b in BASE_POINTS:
        columns = [tuple(evaluate(jacobian[i][j], b) for i in range(3)) for j in range(3)]
        normal = next((n for n in (_cross(v, w) for v, w in combinations(columns, 2)) if any(n)), None)
        lines[b] = None if normal is None else projective(normal)
    return lines


def _order_at(f, point):
    'Order of vanishing of f at a point'
    layer = [f]
    order = 0
    while all(not evaluate(g, point) for g in layer):
        layer = list({g.diff(x) for g in layer for x in f.ring.gens if g})
        order += 1
        if not layer:
            return None
    return order


@attr.s(slots=True, frozen=True)
class Incidence(object):
    'A point where several ramification lines meet'

    point = attr.ib()
    lines = attr.ib(converter=tuple)
    multiplicity = attr.ib()


def ramification_incidences():
    '''
    The points where two or more of the six ramification lines meet, with the
    lines through each and the multiplicity of the ramification divisor there.
    '''
    points = OrderedDict()
    for (n1, f1, _), (n2, f2, _) in combinations(RAMIFICATION_LINES, 2):
        point = projective(_cross(f1, f2))
        points.setdefault(point, set()).update([n1, n2])
    R = jacobian_det(geiser_map().components)
    order = [name for name, _, _ in RAMIFICATION_LINES]
    return [Incidence(point, sorted(names, key=order.index), _order_at(R, point))
            for point, names in points.items()]


def _base_locus_size(phi, F, rng):
    mp = phi.reduce_mod(F)
    sizes = [FiberCounter(mp, rng).base_locus_size() for _ in range(FRAME_ATTEMPTS)]
    if len(BASE_POINTS) in sizes:
        return len(BASE_POINTS)
    return max(s for s in sizes if s is not None) if any(s is not None for s in sizes) else None


def verify_base_points(config=None):
    '''
    The seven base points annihilate the three cubics, and over sampled primes
    the cubics have no other common zero.
    '''
    config = RunConfig() if config is None else config
    name = 'geiser.base_points'
    start = time.perf_counter()
    rng = check_rng(name, config.seed)
    phi = geiser_map()
    counterexample = None
    for b in BASE_POINTS:
        values = phi.evaluate(b)
        if any(values):
            counterexample = {'point': list(b), 'values': [str(v) for v in values]}
            break

    witnesses = []
    separated = True
    if counterexample is None:
        primes = sample_primes(rng, min(config.primes, BASE_POINT_PRIMES), *config.prime_range)
        for p in primes:
            size = _base_locus_size(phi, finite_field(p), rng)
            witnesses.append({'prime': p, 'common_zeros': size})
            if size is None:
                separated = False
            elif size != len(BASE_POINTS):
                counterexample = {'prime': p, 'common_zeros': size}
                break
    if counterexample is not None:
        status = Status.refuted
    else:
        status = Status.verified if separated else Status.inconclusive
    details = {'base_points': [list(b) for b in BASE_POINTS]}
    return VerificationReport(name, 'Geiser map: base points', Mode.exact, status, witnesses=witnesses,
                              counterexample=counterexample, details=details, seed=config.seed,
                              timing_ms=elapsed_ms(start))


def verify_ramification(config=None):
    '''
    The Jacobian determinant of the map against the printed ramification polynomial.

    The two agree up to sign; a sign difference is reported with a
    PrintedValueWarning and leaves the report verified.
    '''
    config = RunConfig() if config is None else config
    start = time.perf_counter()
    jacobian = jacobian_det(geiser_map().components)
    printed = ramification_polynomial()
    details = {'jacobian': str(jacobian), 'printed': str(printed)}
    counterexample = None
    if jacobian == printed:
        details['sign'] = 1
    elif jacobian == -printed:
        details['sign'] = -1
        warnings.warn("The Jacobian determinant is -({0}), the printed value has the opposite sign".format(
            printed), PrintedValueWarning)
    else:
        counterexample = {'difference': str(jacobian - printed)}
    status = Status.verified if counterexample is None else Status.refuted
    return VerificationReport('geiser.ramification', 'Geiser map: ramification divisor', Mode.exact, status,
                              counterexample=counterexample, details=details, seed=config.seed,
                              timing_ms=elapsed_ms(start))


def verify_contracted_images(config=None):
    '''
    Every ramification line is contracted; the images are compared with the
    printed list and disagreements are listed side by side.
    '''
    config = RunConfig() if config is None else config
    start = time.perf_counter()
    images = contracted_images()
    not_contracted = [line for line, point in images.items() if point is None]
    computed = set(point for point in images.values() if point is not None)
    printed = set(projective(p) for p in PRINTED_CONTRACTED_IMAGES)
    missing = sorted(computed - printed)
    extra = sorted(printed - computed)
    details = OrderedDict()
    details['images'] = {line: None if p is None else [str(x) for x in p] for line, p in images.items()}
    details['computed_not_printed'] = [[str(x) for x in p] for p in missing]
    details['printed_not_computed'] = [[str(x) for x in p] for p in extra]
    if missing or extra:
        warnings.warn("Contracted images differ from the printed list: computed {0}, printed {1}".format(
            details['computed_not_printed'], details['printed_not_computed']), PrintedValueWarning)
    status = Status.refuted if not_contracted else Status.verified
    counterexample = {'lines': not_contracted} if not_contracted else None
    return VerificationReport('geiser.contracted_images', 'Geiser map: contracted lines', Mode.exact, status,
                              counterexample=counterexample, details=details, seed=config.seed,
                              timing_ms=elapsed_ms(start))


def double_cover_identity():
    '''
    Check abc(a + b + c) composed with the map against the square of R / 6.

    Returns the sign e with abc(a + b + c)(phi) = e (R / 6)**2, or None when
    neither sign holds.

    >>> double_cover_identity()
    -1
    '''
    phi = geiser_map()
    pulled = compose(branch_quartic(), phi.components, QQ_FIELD)
    R, u2, u3, u4 = _source_ring()
    root = u2 * u3 * u4 * (u2 - u3) * (u3 - u4) * (u4 - u2)
    for sign in (1, -1):
        if pulled == sign * root ** 2:
            return sign
    return None


def verify_double_cover_identity(config=None):
    config = RunConfig() if config is None else config
    start = time.perf_counter()
    sign = double_cover_identity()
    details = {'sign': sign, 'branch_degree': total_degree(branch_quartic())}
    if sign == -1:
        details['equation'] = 's^2 = -abc(a+b+c)'
        warnings.warn("The double cover is s^2 = -abc(a+b+c); it matches the printed s^2 = abc(a+b+c) "
                      "only where -1 is a square", PrintedValueWarning)
    elif sign == 1:
        details['equation'] = 's^2 = abc(a+b+c)'
    status = Status.refuted if sign is None else Status.verified
    return VerificationReport('geiser.double_cover_identity', 'Geiser map: double cover equation', Mode.exact,
                              status, details=details, seed=config.seed, timing_ms=elapsed_ms(start))


def _quartic(X):
    a, b, c = X
    return a * b * c * (a + b + c)


def _point_on_branch_line(normal, F, rng):
    'A point of the line normal . X = 0 on no other branch line, or None'
    x, y = F.random_element(rng, nonzero=True), F.random_element(rng, nonzero=True)
    if normal == (1, 1, 1):
        X = (x, y, -x - y)
    else:
        k = normal.index(1)
        X = [x, y]
        X.insert(k, F.zero())
        X = tuple(X)
    on = [n for n in BRANCH_LINES if not _dot(n, X)]
    return X if len(on) == 1 else None


class GeiserFibers(object):
    'Fiber sizes of the map over F_p, counted on the blow-up of the base points'

    def __init__(self, p, rng):
        self.field = finite_field(p)
        self.map = geiser_map().reduce_mod(self.field)
        self._open = FiberCounter(self.map, rng)
        self._exceptional = [[self.field.convert(x) for x in n] for n in exceptional_images().values()]

    def __call__(self, X):
        size = self._open(X)
        if size is None:
            return None
        return size + sum(1 for n in self._exceptional if not _dot(n, X))


def verify_double_cover(p=10007, trials=200, config=None):
    '''
    Fiber statistics of the map over F_p.

    Off the branch quartic the fibers have two points, on it (away from the
    six points where branch lines meet) they have one. At each sampled source
    point q, -abc(a + b + c) is checked to be a square at phi(q) and the same
    is tallied for the printed sign.

    Parameters
    ----------
    p: int
        Any prime larger than 3.
    trials: int
        Number of samples off and on the branch locus.
    config: RunConfig, optional
    '''
    config = RunConfig() if config is None else config
    name = 'geiser.double_cover'
    start = time.perf_counter()
    rng = check_rng(name, config.seed)
    fibers = GeiserFibers(p, rng)
    F = fibers.field

    generic = []
    squares = {'computed': 0, 'printed': 0}
    counterexample = None
    resampled = 0
    while len(generic) < trials and resampled < trials:
        q = [F.random_element(rng, nonzero=True) for _ in range(3)]
        X = fibers.map.evaluate(q)
        value = _quartic(X)
        if not value:
            resampled += 1
            continue
        generic.append(fibers(X))
        if F.sqrt(-value) is not None:
            squares['computed'] += 1
        elif counterexample is None:
            counterexample = {'prime': F.p, 'point': [int(x) for x in q]}
        if F.sqrt(value) is not None:
            squares['printed'] += 1

    branch = []
    attempts = 0
    while len(branch) < trials and attempts < 2 * trials:
        X = _point_on_branch_line(BRANCH_LINES[attempts % len(BRANCH_LINES)], F, rng)
        attempts += 1
        if X is not None:
            branch.append(fibers(X))

    generic_rate = sum(1 for n in generic if n == 2) / max(len(generic), 1)
    branch_rate = sum(1 for n in branch if n == 1) / max(len(branch), 1)
    details = OrderedDict()
    details['generic_fiber_two'] = '{0}/{1}'.format(sum(1 for n in generic if n == 2), len(generic))
    details['branch_fiber_one'] = '{0}/{1}'.format(sum(1 for n in branch if n == 1), len(branch))
    details['minus_quartic_squares'] = '{0}/{1}'.format(squares['computed'], len(generic))
    details['quartic_squares'] = '{0}/{1}'.format(squares['printed'], len(generic))
    details['resampled'] = resampled
    if generic and squares['printed'] < len(generic):
        warnings.warn("abc(a+b+c) is not a square at {0} of {1} image points over GF({2})".format(
            len(generic) - squares['printed'], len(generic), F.p), PrintedValueWarning)
    if resampled >= trials:
        warnings.warn("Too many samples landed on the branch locus over GF({0})".format(F.p), SamplingWarning)

    if counterexample is not None:
        status = Status.refuted
    elif generic_rate >= GENERIC_THRESHOLD and branch_rate >= BRANCH_THRESHOLD and len(generic) == trials:
        status = Status.verified
    else:
        status = Status.inconclusive
    return VerificationReport(name, 'Geiser map: double cover', Mode.modular, status,
                              witnesses=[{'prime': F.p, 'trials': trials}], counterexample=counterexample,
                              details=details, seed=config.seed, timing_ms=elapsed_ms(start))


def verify_geiser(p=10007, trials=200, config=None):
    'All checks of the map, in name order'
    config = RunConfig() if config is None else config
    reports = [verify_base_points(config),
               verify_contracted_images(config),
               verify_double_cover(p, trials, config),
               verify_double_cover_identity(config),
               verify_ramification(config)]
    return sorted(reports, key=lambda r: r.name)
