# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

"""
Diagonal cubic surfaces a_1 x_1**3 + a_2 x_2**3 + a_3 x_3**3 + a_4 x_4**3 = 0.

The 27 lines split into three sets of 9, one per partition {i, j}, {h, k} of
the coordinates: x_i = lambda x_j, x_h = mu x_k with
a_i lambda**3 + a_j = 0 and a_h mu**3 + a_k = 0. Lines, Eckardt points and
disjointness are computed exactly in the Kummer extension of K generated by
the needed cube roots, so that K-rationality and Galois orbits come out of
cube-class bookkeeping.

Examples
--------
>>> from unirational.fields import QQ_OMEGA
>>> S = DiagonalCubic((1, 1, 1, 1), QQ_OMEGA)
>>> S.is_smooth()
True
>>> len(lines27(S))
27
>>> rationality_test(S, (1, -1, 0, 0)).verdict
<Rationality.rational: 'rational'>
"""

from __future__ import absolute_import, division, print_function

import itertools

import attr
import pandas as pd

from .enums import PAIRS
from .enums import PARTITIONS
from .enums import Rationality
from .enums import SDPattern
from .kummer import CubeClassBasis
from .kummer import KummerField
from .kummer import OmegaPair
from .kummer import has_omega
from .kummer import omega_closure
from ..fields import Decision
from ..fields import QQ_FIELD
from ..fields import combine_all
from ..poly import FunctionField
from ..poly import determinant
from ..poly import poly_ring
from ..utils.errors import ArityError
from ..utils.errors import NotOnSurfaceError
from ..utils.errors import SingularSurfaceError

COORDINATES = ('x1', 'x2', 'x3', 'x4')
PAIRING_LABELS = ('a1a2/a3a4', 'a1a3/a2a4', 'a1a4/a2a3')


@attr.s(slots=True, frozen=True, repr=False)
class DiagonalCubic(object):
    '''
    The surface sum(a_i x_i**3) = 0 in P^3 over ``field``.

    Parameters
    ----------
    coeffs: sequence of 4 field elements
    field: Field
        QQ, QQ(omega), a prime field or a FunctionField over one of them.
    '''

    coeffs = attr.ib(converter=tuple)
    field = attr.ib(default=QQ_FIELD)

    def __attrs_post_init__(self):
        if len(self.coeffs) != 4:
            raise ArityError("A diagonal cubic surface has 4 coefficients, got {0}".format(len(self.coeffs)))
        object.__setattr__(self, 'coeffs', tuple(self.field.convert(a) for a in self.coeffs))

    def is_smooth(self):
        return not any(self.field.is_zero(a) for a in self.coeffs)

    def check_smooth(self):
        if not self.is_smooth():
            raise SingularSurfaceError("{0} is singular: a coefficient vanishes".format(self))

    @property
    def is_shifted(self):
        'True when a_1 + a_2 + a_3 + a_4 = 0, so that (1, 1, 1, 1) lies on S'
        return self.field.is_zero(sum(self.coeffs[1:], self.coeffs[0]))

    def _lift(self, x):
        return x if isinstance(x, OmegaPair) else self.field.convert(x)

    def evaluate(self, point):
        'sum(a_i x_i**3) at a point with coordinates in K or K(omega)'
        point = [self._lift(x) for x in point]
        if len(point) != 4:
            raise ArityError("Points of P^3 have 4 coordinates, got {0}".format(len(point)))
        total = None
        for a, x in zip(self.coeffs, point):
            term = x ** 3 * a
            total = term if total is None else total + term
        return total

    def contains(self, point):
        point = [self._lift(x) for x in point]
        if all(not x for x in point):
            raise ValueError("(0, 0, 0, 0) is not a projective point")
        return not self.evaluate(point)

    def gradient(self, point):
        point = [self._lift(x) for x in point]
        return [x ** 2 * (3 * a) for a, x in zip(self.coeffs, point)]

    def check_point(self, point):
        '''
        The point with coordinates in K, raising NotOnSurfaceError when it is not on S.

        Three coordinates are read in the chart x4 = 1.
        '''
        point = tuple(self.field.convert(x) for x in point)
        if len(point) == 3:
            point = point + (self.field.one(),)
        if len(point) != 4:
            raise ArityError("Points of P^3 have 4 coordinates, got {0}".format(len(point)))
        if not self.contains(point):
            raise NotOnSurfaceError("{0} does not lie on {1}".format(_format_point(point), self))
        return point

    def is_eckardt_point(self, point):
        '''
        True when the point lies on S with exactly two vanishing coordinates.

        These are the 18 Eckardt points of a smooth diagonal cubic in
        characteristic other than 3.
        '''
        point = [self._lift(x) for x in point]
        return sum(1 for x in point if not x) == 2 and self.contains(point)

    def equation(self, names=COORDINATES):
        '''
        The defining polynomial in a ring over the domain of ``field``.

        Returns the polynomial and its ring.
        '''
        R, *xs = poly_ring(list(names), self.field)
        F = R.zero
        for a, x in zip(self.coeffs, xs):
            F += R.ground_new(self.field.to_domain(a)) * x ** 3
        return F, R

    def ratio(self, i, j):
        '-a_j / a_i, the cube of the slope of the lines x_i = lambda x_j'
        return -self.coeffs[j] / self.coeffs[i]

    def pairings(self):
        'The three products a_i a_j / (a_h a_k), keyed by label'
        a = self.coeffs
        return {PAIRING_LABELS[0]: a[0] * a[1] / (a[2] * a[3]),
                PAIRING_LABELS[1]: a[0] * a[2] / (a[1] * a[3]),
                PAIRING_LABELS[2]: a[0] * a[3] / (a[1] * a[2])}

    def over(self, field):
        'The same surface with coefficients mapped into ``field``'
        return DiagonalCubic(self.coeffs, field)

    def specialize(self, values, field=None):
        '''
        The surface with the parameters of a FunctionField set to ``values``.

        Raises SpecializationError when a coefficient has a pole there.
        '''
        if not isinstance(self.field, FunctionField):
            raise TypeError("Only surfaces over a function field can be specialized")
        target = self.field.base if field is None else field
        return DiagonalCubic([self.field.specialize(a, values, target) for a in self.coeffs], target)

    def scaled(self, c):
        c = self.field.convert(c)
        return DiagonalCubic([c * a for a in self.coeffs], self.field)

    def permuted(self, permutation):
        return DiagonalCubic([self.coeffs[i] for i in permutation], self.field)

    def __str__(self):
        return ' + '.join('({0})*x{1}^3'.format(a, i + 1) for i, a in enumerate(self.coeffs))

    def __repr__(self):
        return "<DiagonalCubic: {0} over {1}>".format(self, self.field)


def _format_point(point):
    return '({0})'.format(', '.join(str(x) for x in point))


@attr.s(slots=True, frozen=True, eq=False, repr=False)
class SurfaceLine(object):
    '''
    The line x_i = lam x_j, x_h = mu x_k of a diagonal cubic.

    ``index`` gives the powers of omega (c, d) that pick lam and mu among the
    three cube roots; ``rational`` tells whether the line is defined over K.
    '''

    surface = attr.ib()
    partition = attr.ib()
    lam = attr.ib()
    mu = attr.ib()
    index = attr.ib()
    rational = attr.ib(default=Decision.unknown)

    @property
    def key(self):
        return self.partition, self.index

    def forms(self):
        'The two linear forms cutting out the line, as rows of 4 coefficients'
        (i, j), (h, k) = self.partition
        ext = self.lam.field
        rows = [[ext.zero() for _ in range(4)] for _ in range(2)]
        rows[0][i], rows[0][j] = ext.one(), -self.lam
        rows[1][h], rows[1][k] = ext.one(), -self.mu
        return rows

    def contains(self, point):
        'True when the point, with coordinates in the Kummer field, lies on the line'
        return all(not sum((f * x for f, x in zip(row, point)), self.lam.field.zero())
                   for row in self.forms())

    def on_surface(self):
        '''
        Substitute (x_i, x_j, x_h, x_k) = (lam s, s, mu t, t) into the equation.

        The result is (a_i lam**3 + a_j) s**3 + (a_h mu**3 + a_k) t**3, which
        must vanish identically.
        '''
        (i, j), (h, k) = self.partition
        a = self.surface.coeffs
        return not (self.lam ** 3 * a[i] + a[j]) and not (self.mu ** 3 * a[h] + a[k])

    def __str__(self):
        (i, j), (h, k) = self.partition
        return 'x{0} = ({1})*x{2}, x{3} = ({4})*x{5}'.format(i + 1, self.lam, j + 1, h + 1, self.mu, k + 1)

    def __repr__(self):
        return "<SurfaceLine: {0}>".format(self)


def lines_disjoint(first, second):
    '''
    True when two lines on the same surface do not meet.

    The lines meet exactly when their four linear forms are dependent.
    '''
    if first.key == second.key:
        return False
    return bool(determinant(first.forms() + second.forms()))


def _root_decision(basis, root, twist, omega_in_base):
    kappa, exponents = root
    in_base = basis.decide_in_base(exponents)
    if in_base is Decision.yes and twist % 3 and not omega_in_base:
        return Decision.no
    return in_base


class LineConfiguration(object):
    '''
    The 27 lines of a smooth diagonal cubic, grouped by partition.

    ``groups[partition]`` lists the 9 lines in the order of their (c, d) index.
    '''

    def __init__(self, surface, extension, roots, groups):
        self.surface = surface
        self.extension = extension
        self.roots = roots
        self.groups = groups
        self._disjoint = {}

    @property
    def lines(self):
        return [line for partition in PARTITIONS for line in self.groups[partition]]

    def __len__(self):
        return sum(len(group) for group in self.groups.values())

    def __iter__(self):
        return iter(self.lines)

    def line(self, partition, index):
        c, d = index
        return self.groups[partition][3 * c + d]

    def disjoint(self, first, second):
        'Cached lines_disjoint; lines of one partition meet iff they share lam or mu'
        key = (first.key, second.key) if first.key <= second.key else (second.key, first.key)
        if key not in self._disjoint:
            if first.partition == second.partition:
                (c1, d1), (c2, d2) = first.index, second.index
                self._disjoint[key] = c1 != c2 and d1 != d2
            else:
                self._disjoint[key] = lines_disjoint(first, second)
        return self._disjoint[key]

    def meeting_counts(self):
        'For every line, the number of other lines it meets'
        lines = self.lines
        return [sum(1 for other in lines if other is not line and not self.disjoint(line, other))
                for line in lines]

    def _locate(self, partition, image):
        lam, mu = image
        group = self.groups[partition]
        c = next(c for c in range(3) if group[3 * c].lam == lam)
        d = next(d for d in range(3) if group[d].mu == mu)
        return c, d

    def orbits(self, partition):
        '''
        Galois orbits of the lines of one partition, as sorted lists of (c, d).
        '''
        generators = self.extension.galois_generators()
        seen = set()
        orbits = []
        for start in itertools.product(range(3), repeat=2):
            if start in seen:
                continue
            orbit = {start}
            todo = [start]
            while todo:
                line = self.line(partition, todo.pop())
                for g in generators:
                    image = self._locate(partition, (g(line.lam), g(line.mu)))
                    if image not in orbit:
                        orbit.add(image)
                        todo.append(image)
            seen |= orbit
            orbits.append(sorted(orbit))
        return sorted(orbits, key=lambda o: (-len(o), o))

    def table(self):
        'One row per line'
        rows = [{'partition': _partition_label(line.partition),
                 'index': '{0}{1}'.format(*line.index),
                 'lambda': str(line.lam),
                 'mu': str(line.mu),
                 'rational': line.rational.name} for line in self.lines]
        return pd.DataFrame(rows, columns=['partition', 'index', 'lambda', 'mu', 'rational'])

    def __repr__(self):
        return "<LineConfiguration: {0} lines over {1}>".format(len(self), self.extension.coeffs)


def _partition_label(partition):
    (i, j), (h, k) = partition
    return '{{{0},{1}}}{{{2},{3}}}'.format(i + 1, j + 1, h + 1, k + 1)


def lines27(surface):
    '''
    The 27 lines of a smooth diagonal cubic, each checked on the surface.

    Raises
    ------
    SingularSurfaceError
        If a coefficient vanishes.
    '''
    surface.check_smooth()
    basis = CubeClassBasis(surface.field)
    roots = {pair: basis.express(surface.ratio(*pair)) for pair in PAIRS}
    ext = KummerField(basis)
    omega_in_base = has_omega(surface.field)
    groups = {}
    for partition in PARTITIONS:
        first, second = partition
        group = []
        for c, d in itertools.product(range(3), repeat=2):
            lam = ext.radical(*roots[first], twist=c)
            mu = ext.radical(*roots[second], twist=d)
            rational = combine_all([_root_decision(basis, roots[first], c, omega_in_base),
                                    _root_decision(basis, roots[second], d, omega_in_base)])
            line = SurfaceLine(surface, partition, lam, mu, (c, d), rational)
            if not line.on_surface():
                raise NotOnSurfaceError("{0} is not on {1}".format(line, surface))
            group.append(line)
        groups[partition] = group
    return LineConfiguration(surface, ext, roots, groups)


@attr.s(slots=True, frozen=True)
class PartitionLines(object):
    'The K-rational lines and Galois orbit sizes of one of the three sets of 9 lines'

    partition = attr.ib()
    lines = attr.ib()
    orbit_sizes = attr.ib()
    decision = attr.ib()

    @property
    def label(self):
        return _partition_label(self.partition)


def k_rational_lines(surface, field=None):
    '''
    The K-rational lines, set by set, with the orbit structure of each set.

    A set of 9 lines is one orbit of 9, three orbits of 3, or 9 fixed lines
    over K(omega), according to which of the two slope ratios are cubes.

    Parameters
    ----------
    surface: DiagonalCubic
    field: Field, optional
        Work over this field instead of the field of the surface.
    '''
    if field is not None:
        surface = surface.over(field)
    config = lines27(surface)
    out = []
    for partition in PARTITIONS:
        group = config.groups[partition]
        rational = [line for line in group if line.rational is Decision.yes]
        if rational:
            decision = Decision.yes
        else:
            decision = combine_all(Decision.no if line.rational is Decision.no else Decision.unknown
                                   for line in group)
        sizes = tuple(len(o) for o in config.orbits(partition))
        out.append(PartitionLines(partition, rational, sizes, decision))
    return out


@attr.s(slots=True, frozen=True, eq=False)
class EckardtPoint(object):
    '''
    The point with x_i = x_j = 0 and x_h = nu x_k, where a_h nu**3 + a_k = 0.

    ``lines`` are the three lines of the tangent section, ``verified`` records
    that the section is exactly these three lines through the point.
    '''

    vanishing = attr.ib()
    other = attr.ib()
    nu = attr.ib()
    coordinates = attr.ib(repr=False)
    lines = attr.ib(repr=False)
    rational = attr.ib()
    verified = attr.ib()


def _tangent_section_splits(surface, vanishing, other, nu, point, lines):
    ext = nu.field
    (i, j), (h, k) = vanishing, other
    a = [ext.const(c) for c in surface.coeffs]
    if sum((x ** 3 * c for c, x in zip(a, point)), ext.zero()):
        return False
    # tangent plane proportional to x_h - nu x_k
    gradient = [x ** 2 * c * 3 for c, x in zip(a, point)]
    plane = [ext.zero() for _ in range(4)]
    plane[h], plane[k] = ext.one(), -nu
    if any(gradient[r] * plane[s] - gradient[s] * plane[r] for r, s in itertools.combinations(range(4), 2)):
        return False
    # on the plane x_h = nu x_k the cubic is a_i x_i**3 + a_j x_j**3 = a_i prod(x_i - lam_c x_j)
    slopes = [line.lam if line.partition[0] == vanishing else line.mu for line in lines]
    e1 = slopes[0] + slopes[1] + slopes[2]
    e2 = slopes[0] * slopes[1] + slopes[0] * slopes[2] + slopes[1] * slopes[2]
    e3 = slopes[0] * slopes[1] * slopes[2]
    if e1 or e2 or (a[i] * e3 + a[j]):
        return False
    if any(s == t for s, t in itertools.combinations(slopes, 2)):
        return False
    return all(line.contains(point) for line in lines)


def eckardt_points(surface, config=None):
    '''
    The 18 Eckardt points: 6 vanishing pairs times 3 cube roots.

    Each point is checked by splitting its tangent section into three
    distinct lines of the surface through it.
    '''
    config = lines27(surface) if config is None else config
    ext = config.extension
    omega_in_base = has_omega(surface.field)
    points = []
    for partition in PARTITIONS:
        for side in (0, 1):
            vanishing, other = partition[side], partition[1 - side]
            (h, k) = other
            for c in range(3):
                nu = ext.radical(*config.roots[other], twist=c)
                point = [ext.zero() for _ in range(4)]
                point[h], point[k] = nu, ext.one()
                if side == 0:
                    lines = [config.line(partition, (d, c)) for d in range(3)]
                else:
                    lines = [config.line(partition, (c, d)) for d in range(3)]
                rational = _root_decision(config.extension.basis, config.roots[other], c, omega_in_base)
                verified = _tangent_section_splits(surface, vanishing, other, nu, point, lines)
                points.append(EckardtPoint(vanishing, other, nu, tuple(point), tuple(lines), rational, verified))
    return points


def eckardt_table(points):
    rows = [{'vanishing': 'x{0}=x{1}=0'.format(p.vanishing[0] + 1, p.vanishing[1] + 1),
             'ratio': 'x{0}/x{1}'.format(p.other[0] + 1, p.other[1] + 1),
             'nu': str(p.nu),
             'rational': p.rational.name,
             'verified': p.verified} for p in points]
    return pd.DataFrame(rows, columns=['vanishing', 'ratio', 'nu', 'rational', 'verified'])


@attr.s(slots=True, frozen=True)
class PatternWitness(object):
    pattern = attr.ib()
    lines = attr.ib(factory=tuple, repr=False)


def swinnerton_dyer_pattern(surface, config=None):
    '''
    Look for the two constructive configurations of the rationality criterion.

    Either three pairwise disjoint K-rational lines, or a Galois orbit of
    three pairwise disjoint lines. Orbits are computed over K(omega) when K
    does not contain omega, together with omega -> omega**2.
    '''
    config = lines27(surface) if config is None else config
    rational = [line for line in config if line.rational is Decision.yes]
    for triple in itertools.combinations(rational, 3):
        if all(config.disjoint(l1, l2) for l1, l2 in itertools.combinations(triple, 2)):
            return PatternWitness(SDPattern.three_rational_lines, triple)
    for partition in PARTITIONS:
        for orbit in config.orbits(partition):
            if len(orbit) != 3:
                continue
            lines = tuple(config.line(partition, index) for index in orbit)
            if all(config.disjoint(l1, l2) for l1, l2 in itertools.combinations(lines, 2)):
                return PatternWitness(SDPattern.disjoint_orbit, lines)
    return PatternWitness(SDPattern.none)


@attr.s(slots=True, frozen=True)
class RationalityCertificate(object):
    '''
    Outcome of the cube-class rationality criterion.

    ``pairings`` maps each product a_i a_j / (a_h a_k) to the Decision of its
    cube test; ``pattern`` is the line configuration found, when computed.
    '''

    verdict = attr.ib()
    pairings = attr.ib()
    point = attr.ib(default=None)
    pattern = attr.ib(default=None)
    note = attr.ib(default='')

    def as_dict(self):
        return {'verdict': self.verdict.value,
                'pairings': {k: v.name for k, v in self.pairings.items()},
                'point': None if self.point is None else [str(x) for x in self.point],
                'pattern': None if self.pattern is None else self.pattern.value,
                'note': self.note}


def _point_on_line(line):
    'The K-point x_i = lam, x_j = 1 of a K-rational line'
    (i, j), _ = line.partition
    K = line.surface.field
    point = [K.zero() for _ in range(4)]
    point[i], point[j] = line.lam.in_base(), K.one()
    return tuple(point)


def rationality_test(surface, known_point=None):
    '''
    Decide K-rationality of a smooth diagonal cubic.

    S is K-rational iff it has a K-point and one of the pairings
    a_i a_j / (a_h a_k) is a cube in K.

    Parameters
    ----------
    surface: DiagonalCubic
    known_point: sequence of 4 elements of K, optional
        A K-point of S, possibly in the chart x4 = 1. Without it, (1, 1, 1, 1)
        is used when the coefficients sum to zero, and otherwise a point of a
        K-rational line when there is one.

    Returns
    -------
    RationalityCertificate
    '''
    surface.check_smooth()
    K = surface.field
    if known_point is not None:
        point = surface.check_point(known_point)
    elif surface.is_shifted:
        point = tuple(K.convert(1) for _ in range(4))
    else:
        point = None

    pairings = {label: K.is_cube(value) for label, value in surface.pairings().items()}
    decisions = list(pairings.values())
    cube = Decision.yes in decisions
    pattern = None
    note = ''
    if has_omega(K):
        config = lines27(surface)
        pattern = swinnerton_dyer_pattern(surface, config).pattern
        if Decision.unknown not in decisions and cube != (pattern is not SDPattern.none):
            note = 'pairing cube tests and line configuration disagree'
        if point is None:
            point = next((_point_on_line(line) for line in config if line.rational is Decision.yes), None)

    if note:
        verdict = Rationality.inconclusive
    elif all(d is Decision.no for d in decisions):
        verdict = Rationality.not_rational
        note = 'no pairing is a cube'
    elif cube and point is not None:
        verdict = Rationality.rational
        note = 'pairing {0} is a cube'.format(next(k for k, v in pairings.items() if v is Decision.yes))
    elif cube:
        verdict = Rationality.inconclusive
        note = 'a pairing is a cube but no K-point is known'
    else:
        verdict = Rationality.inconclusive
        note = 'undecided cube tests'
    return RationalityCertificate(verdict, pairings, point, pattern, note)


def unit_points(surface):
    '''
    The 27 points (z_1, z_2, z_3, 1) with z_i**3 = 1, all checked on S.

    They lie on S exactly when the coefficients sum to zero. None of them is an
    Eckardt point, since no coordinate vanishes.
    '''
    if not surface.is_shifted:
        raise NotOnSurfaceError("The unit points lie on S only when the coefficients sum to zero")
    L = omega_closure(surface.field)
    roots = [L.one(), L.omega(), L.omega() ** 2]
    points = [(z1, z2, z3, L.one()) for z1, z2, z3 in itertools.product(roots, repeat=3)]
    for point in points:
        if not surface.contains(point):
            raise NotOnSurfaceError("{0} does not lie on {1}".format(_format_point(point), surface))
    return points


def fibration_surface(base=QQ_FIELD):
    '''
    The fiber of the cubic surface fibration over K = k(s3, s4):

    (s3 - s4) s3 s4 (x1^3 - x4^3) - (s3 - 1) s3 (x2^3 - x4^3) + (s4 - 1) s4 (x3^3 - x4^3) = 0

    With a = (s3 - s4) s3 s4, b = -(s3 - 1) s3 and c = (s4 - 1) s4 its
    coefficients are (a, b, c, -(a + b + c)).

    >>> S = fibration_surface()
    >>> S.is_smooth(), S.contains((1, 1, 1, 1))
    (True, True)
    '''
    K = FunctionField(base, ['s3', 's4'])
    s3, s4 = K.gens
    a = (s3 - s4) * s3 * s4
    b = -(s3 - 1) * s3
    c = (s4 - 1) * s4
    return DiagonalCubic((a, b, c, -(a + b + c)), K)


def random_split_cubic(field, rng):
    '''
    A random smooth diagonal cubic whose coefficient ratios are all cubes,
    so that its 27 lines are defined over ``field`` (which must contain omega).
    '''
    def nonzero():
        while True:
            x = field.random_element(rng)
            if not field.is_zero(x):
                return x

    c = nonzero()
    return DiagonalCubic([c * nonzero() ** 3 for _ in range(4)], field)
