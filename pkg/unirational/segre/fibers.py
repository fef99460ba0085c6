# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

"""
Degree of a dominant map from a surface by counting fibers over F_p.

The source is put in an affine chart with coordinates (t, u), after a random
change of coordinates when it is P^2. For a target point X with X_a != 0 the
fiber is cut out by E_b = X_a m_b - X_b m_a; one chart variable is eliminated
by resultants and the other coordinate of the fiber points is read off the
roots of the gcd of the resultants, once the roots coming from base points of
the map and from vanishing leading coefficients are removed. Both projections
are counted and the larger count is kept, so that two fiber points sharing
one coordinate are still told apart. Counts are taken over the algebraic
closure of F_p.
"""

from __future__ import absolute_import, division, print_function

import warnings
from functools import reduce
from itertools import combinations

import attr
import pandas as pd

from .maps import finite_field
from ..poly import compose
from ..poly import poly_ring
from ..poly import rank_mod_p
from ..utils import check_rng
from ..utils.errors import ArityError
from ..utils.errors import SamplingWarning

MIN_SAMPLING_PRIME = 101
RETRY_BUDGET = 100
BASE_MEMBERS = 3


def _random_frame(F, rng):
    'An invertible 3 x 3 matrix over F_p, the identity without rng'
    if rng is None:
        return [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    while True:
        frame = [[int(rng.integers(0, F.p)) for _ in range(3)] for _ in range(3)]
        if rank_mod_p(frame, F.p) == 3:
            return frame


def _chart(m, rng=None):
    'The components in an affine chart, ring variables ordered (u, t)'
    F = m.field
    R, u, t = poly_ring(['u', 't'], F)
    if m.source == (2, 2):
        images = [t, R.one, u, R.one]
    elif m.source == (3,):
        chart = (t, u, R.one)
        images = [sum((c * v for c, v in zip(row, chart)), R.zero) for row in _random_frame(F, rng)]
    else:
        raise ArityError("Fibers are counted for maps from P^2 or P^1 x P^1, not {0}".format(m.source))
    components = [compose(f, images, F) for f in m.components]
    common = reduce(lambda f, g: f.gcd(g), components)
    if not common.is_ground:
        components = [f.exquo(common) for f in components]
    return R, components


def _swap(R, f):
    return R.from_dict({(e[1], e[0]): c for e, c in f.terms()})


def _lead(f, Rt):
    'Leading coefficient in the first ring variable'
    top = max(e[0] for e in f.monoms())
    return Rt.from_dict({(e[1],): c for e, c in f.terms() if e[0] == top})


def _gcd_all(polys, Rt):
    return reduce(lambda f, g: f.gcd(g), polys, Rt.zero)


def _resultant(f, g, Rt):
    res = f.resultant(g)
    return res if hasattr(res, 'ring') else Rt.ground_new(res)


def _projected(R, components, X, base):
    'Distinct values of the second chart variable on the fiber over X'
    Rt = R[1:]
    a = next(i for i, x in enumerate(X) if x)
    equations = [X[a] * components[b] - X[b] * components[a] for b in range(len(X)) if b != a]
    equations = [E for E in equations if E]
    if len(equations) < 2:
        return None

    fiber = _gcd_all([_resultant(E, G, Rt) for E, G in combinations(equations, 2)], Rt)
    if not fiber:
        return None
    return _distinct_roots(fiber, [base, _gcd_all([_lead(E, Rt) for E in equations], Rt)])


def _distinct_roots(f, spurious):
    'Number of distinct roots of f over the algebraic closure, leaving out the roots of the spurious polynomials'
    if f.is_ground:
        return 0
    t = f.ring.gens[0]
    f = f.exquo(f.gcd(f.diff(t)))
    for s in spurious:
        if s and not s.is_ground:
            f = f.exquo(f.gcd(s))
    return f.degree()


def _random_members(components, p, count, rng):
    'Random F_p-linear combinations of the components'
    combined = []
    while len(combined) < count:
        row = [int(rng.integers(0, p)) for _ in components]
        f = sum((c * g for c, g in zip(row, components)), components[0].ring.zero)
        if f:
            combined.append(f)
    return combined


def _base_resultant(R, components, p, rng):
    '''
    Polynomial in the second chart variable vanishing at the common zeros of
    the components, and the common leading coefficient of the members used,
    whose roots the resultants pick up as well.

    The resultants are taken between random members of the linear span of
    the components, which may share factors pairwise.
    '''
    Rt = R[1:]
    components = [f for f in components if f]
    if len(components) < 2:
        return Rt.zero, Rt.one
    first, = _random_members(components, p, 1, rng)
    others = _random_members(components, p, BASE_MEMBERS, rng)
    base = _gcd_all([_resultant(first, g, Rt) for g in others], Rt)
    return base, _gcd_all([_lead(f, Rt) for f in [first] + others], Rt)


def _without_roots_of(f, s):
    'f with every root it shares with s removed'
    if not f:
        return f
    common = f.gcd(s)
    while not common.is_ground:
        f = f.exquo(common)
        common = f.gcd(common)
    return f


class FiberCounter(object):
    '''
    Fiber sizes of one map over F_p, in a chart fixed once.

    Parameters
    ----------
    m: RationalMap
        A map from P^2 or P^1 x P^1 over a prime field.
    rng: numpy Generator, optional
        Draws the coordinate change of a P^2 source.
    '''

    def __init__(self, m, rng=None):
        self.map = m
        R, components = _chart(m, rng)
        swapped = poly_ring(['t', 'u'], m.field)[0]
        self._charts = [(R, components), (swapped, [_swap(swapped, f) for f in components])]
        members = check_rng('fibers.base_members') if rng is None else rng
        bases = [_base_resultant(ring, comps, m.field.p, members) for ring, comps in self._charts]
        self._bases = [base for base, _ in bases]
        self._leads = [lead for _, lead in bases]

    def __call__(self, target):
        '''
        Number of points of the source chart mapping to ``target``, or None
        when the fiber is not finite.
        '''
        F = self.map.field
        X = [F.to_domain(x) for x in target]
        counts = [_projected(ring, comps, X, base) for (ring, comps), base in zip(self._charts, self._bases)]
        if None in counts:
            return None
        return max(counts)

    def base_locus_size(self):
        '''
        Number of common zeros of the components in the chart, or None when
        they could not be separated.
        '''
        counts = []
        for (ring, comps), base, lead in zip(self._charts, self._bases, self._leads):
            Rt = ring[1:]
            if not base:
                return None
            base = _without_roots_of(base, lead)
            counts.append(_distinct_roots(base, [_gcd_all([_lead(f, Rt) for f in comps if f], Rt)]))
        return max(counts)


def fiber_size(m, target, rng=None):
    '''
    Number of points of the source chart mapping to ``target``.

    Parameters
    ----------
    m: RationalMap
        A map from P^2 or P^1 x P^1 over a prime field.
    target: sequence of field elements
        A point of P^n, typically the image of a random source point.
    rng: numpy Generator, optional
        Draws the coordinate change of a P^2 source.

    Returns
    -------
    int or None
        None when the fiber is not finite.
    '''
    return FiberCounter(m, rng)(target)


@attr.s(slots=True, frozen=True)
class DegreeEstimate(object):
    '''
    Fiber counts of a map at random points.

    ``histogram`` maps each fiber size to the number of trials that produced
    it, -1 standing for an infinite fiber; ``degree`` is its mode.
    '''

    degree = attr.ib()
    histogram = attr.ib()
    prime = attr.ib()
    resampled = attr.ib(default=0)

    def as_dict(self):
        return {'degree': self.degree,
                'prime': self.prime,
                'histogram': {int(k): int(v) for k, v in self.histogram.items()},
                'resampled': self.resampled}


def _random_point(m, rng):
    F = m.field
    return [F.random_element(rng, nonzero=True) for _ in range(sum(m.source))]


def _sample_image(m, rng):
    'A random source point with a nonzero image, and the number of draws discarded'
    for attempt in range(RETRY_BUDGET):
        point = _random_point(m, rng)
        image = m.evaluate(point)
        if any(image):
            return point, image, attempt
    warnings.warn("No point outside the base locus in {0} draws".format(RETRY_BUDGET), SamplingWarning)
    return None, None, RETRY_BUDGET


def map_degree_estimate(m, p, trials, rng, values=None):
    '''
    Generic fiber size of a dominant map, estimated over F_p.

    Parameters
    ----------
    m: RationalMap
        A map from P^2 or P^1 x P^1, over any field that reduces mod p.
    p: int
    trials: int
        Number of random image points.
    rng: numpy Generator
    values: sequence, optional
        Parameter values for maps over a FunctionField; drawn from rng if
        omitted.

    Returns
    -------
    DegreeEstimate
    '''
    F = finite_field(p)
    if F.p < MIN_SAMPLING_PRIME:
        warnings.warn("Fiber statistics over GF({0}) are unreliable, use p >= {1}".format(
            F.p, MIN_SAMPLING_PRIME), SamplingWarning)
    mp = m.reduce_mod(F, rng, values)
    count = FiberCounter(mp, rng)
    counts = []
    resampled = 0
    for _ in range(trials):
        point, image, discarded = _sample_image(mp, rng)
        resampled += discarded
        if point is None:
            continue
        size = count(image)
        counts.append(-1 if size is None else size)
    histogram = pd.Series(counts, dtype='int64').value_counts().sort_index()
    degree = int(histogram.idxmax()) if len(histogram) else None
    return DegreeEstimate(degree, histogram, F.p, resampled)


def check_dominant(m, p, rng, values=None):
    '''
    Look for a source point where the Jacobian has rank source_dimension + 1.

    Returns the number of points tried, or None (with a SamplingWarning) when
    the retry budget runs out.
    '''
    mp = m.reduce_mod(p, rng, values)
    expected = mp.source_dimension + 1
    for attempt in range(1, RETRY_BUDGET + 1):
        if mp.jacobian_rank(_random_point(mp, rng)) == expected:
            return attempt
    warnings.warn("Jacobian rank stayed below {0} at {1} points".format(expected, RETRY_BUDGET),
                  SamplingWarning)
    return None
