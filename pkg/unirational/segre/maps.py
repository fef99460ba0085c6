# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

"""
Rational maps given by homogeneous polynomials, and the constructive
unirational parametrizations of a cubic surface.

The source of a map is a product of projective spaces, recorded by the number
of homogeneous variables of each factor: ``(2,)`` for P^1, ``(3,)`` for P^2
and ``(2, 2)`` for P^1 x P^1. The components are multihomogeneous of a common
multidegree.

Examples
--------
>>> from unirational.fields import QQ_FIELD
>>> from unirational.poly import poly_ring
>>> R, x, y, z = poly_ring(['x', 'y', 'z'], QQ_FIELD)
>>> C = PlaneCubicSection.from_ternary(z*y**2 - x**3, (0, 0, 1))
>>> m = parametrize_singular_cubic(C)
>>> m.satisfies(z*y**2 - x**3)
True
"""

from __future__ import absolute_import, division, print_function

from functools import reduce
from itertools import combinations

import attr

from .sections import PlaneCubicSection
from .sections import SectionCase
from .sections import tangent_section
from ..fields import PrimeField
from ..fields import fp_with_omega
from ..fields import prime_field
from ..poly import FunctionField
from ..poly import compose
from ..poly import determinant
from ..poly import evaluate
from ..poly import exact_div
from ..poly import multivar_gcd
from ..poly import poly_ring
from ..poly import rank_mod_p
from ..poly import scalar_field
from ..utils.errors import ArityError
from ..utils.errors import EckardtPointError
from ..utils.errors import WrongCaseError

LINE_NAMES = ('l0', 'l1')
PRODUCT_NAMES = ('l0', 'l1', 'm0', 'm1')


def finite_field(p):
    'F_p with its cube root of unity when p = 1 mod 3'
    if isinstance(p, PrimeField):
        return p
    p = int(p)
    return fp_with_omega(p) if p % 3 == 1 else prime_field(p)


@attr.s(slots=True, frozen=True, repr=False)
class RationalMap(object):
    '''
    A rational map from a product of projective spaces to P^n.

    Parameters
    ----------
    components: sequence of PolyElement
        The n + 1 coordinate polynomials, all in one ring.
    source: tuple of int
        Number of homogeneous variables of each source factor, in ring order.
    field: Field, optional
        Defaults to the field of the ring's domain.
    '''

    components = attr.ib(converter=tuple)
    source = attr.ib(converter=tuple)
    field = attr.ib(default=None)

    def __attrs_post_init__(self):
        if not self.components:
            raise ArityError("A map needs at least one component")
        rings = set(f.ring for f in self.components)
        if len(rings) != 1:
            raise ArityError("Components live in different rings")
        if sum(self.source) != self.ring.ngens:
            raise ArityError("Source {0} does not match {1} variables".format(self.source, self.ring.ngens))
        if self.field is None:
            object.__setattr__(self, 'field', scalar_field(self.ring.domain))

    @property
    def ring(self):
        return self.components[0].ring

    @property
    def target_dimension(self):
        return len(self.components) - 1

    @property
    def source_dimension(self):
        return sum(n - 1 for n in self.source)

    def _groups(self):
        start = 0
        for n in self.source:
            yield list(range(start, start + n))
            start += n

    @property
    def multidegree(self):
        'Degree of the components in the variables of each source factor'
        f = next((f for f in self.components if f), None)
        if f is None:
            return tuple(-1 for _ in self.source)
        monom = f.monoms()[0]
        return tuple(sum(monom[i] for i in group) for group in self._groups())

    def is_multihomogeneous(self):
        degrees = self.multidegree
        return all(tuple(sum(m[i] for i in group) for group in self._groups()) == degrees
                   for f in self.components for m in f.monoms())

    def normalized(self):
        'The same map with the common factor of the components removed'
        common = reduce(multivar_gcd, self.components)
        if not common or common.is_ground:
            return self
        return RationalMap([exact_div(f, common) for f in self.components], self.source, self.field)

    def evaluate(self, point, field=None):
        'The image of a source point, its coordinates listed factor by factor'
        return tuple(evaluate(f, point, field) for f in self.components)

    def reduce_mod(self, p, rng=None, values=None):
        '''
        The map over F_p.

        Maps over a FunctionField are specialized first, at ``values`` or at
        parameters drawn from ``rng``.
        '''
        F = finite_field(p)
        K = self.field
        if isinstance(K, FunctionField):
            if values is None:
                if rng is None:
                    raise ValueError("Specializing {0} needs values or a random generator".format(K))
                values = [int(rng.integers(1, F.p)) for _ in K.names]

            def image(c):
                return F.to_domain(K.specialize(K.from_domain(c), values, F))
        else:
            def image(c):
                return F.to_domain(F.convert(K.from_domain(c)))

        R = self.ring.clone(domain=F.domain)
        components = [R.from_dict({m: image(c) for m, c in f.terms()}) for f in self.components]
        return RationalMap(components, self.source, F)

    def jacobian(self):
        return [[f.diff(x) for x in self.ring.gens] for f in self.components]

    def jacobian_rank(self, point, p=None):
        '''
        Rank over F_p of the Jacobian matrix at a source point.

        A dominant map onto a variety of dimension d has rank d + 1 at a
        general point.
        '''
        m = self if p is None else self.reduce_mod(p)
        if not isinstance(m.field, PrimeField):
            raise TypeError("The Jacobian rank is computed over a prime field")
        rows = [[int(evaluate(d, point, m.field)) for d in row] for row in m.jacobian()]
        return rank_mod_p(rows, m.field.p)

    def satisfies(self, target):
        '''
        True when target(m) vanishes identically.

        ``target`` is a polynomial in n + 1 variables or a surface with an
        ``equation`` method.
        '''
        F = target.equation()[0] if hasattr(target, 'equation') else target
        return not compose(F, self.components, self.field)

    def __str__(self):
        return '({0})'.format(' : '.join(str(f) for f in self.components))

    def __repr__(self):
        return "<RationalMap: P{0} -> P^{1}: {2}>".format(
            'x'.join('^{0}'.format(n - 1) for n in self.source), self.target_dimension, self)


def _expansion(coeffs, R, field, P, w):
    '''
    F(w) and Q_P(w) = sum(3 a_i P_i w_i**2), the terms of F(g P + w) for P on
    sum(a_i x_i**3) = 0 and w in its tangent plane.

    The line P + t w meets the surface again at F(w) P - Q_P(w) w.
    '''
    a = [R.ground_new(field.to_domain(c)) for c in coeffs]
    cubic = sum((ai * wi ** 3 for ai, wi in zip(a, w)), R.zero)
    quadric = sum((3 * ai * pi * wi ** 2 for ai, pi, wi in zip(a, P, w)), R.zero)
    return cubic, quadric


def _constant(R, field, vector):
    return [R.ground_new(field.to_domain(x)) for x in vector]


def parametrize_singular_cubic(section):
    '''
    The birational map P^1 -> C sending a direction (l0 : l1) at P to the
    residual point of the line through P.

    Raises
    ------
    WrongCaseError
        If C is reducible.
    '''
    case = section.classify()
    if case is not SectionCase.irreducible:
        raise WrongCaseError("Only an irreducible cubic is parametrized by lines through P, got {0}".format(
            case.name))
    K = section.field
    R, l0, l1 = poly_ring(list(LINE_NAMES), K)
    F = sum((R.ground_new(K.to_domain(c)) * l0 ** (3 - k) * l1 ** k
             for k, c in enumerate(section.binary_cubic)), R.zero)
    Q = sum((R.ground_new(K.to_domain(c)) * l0 ** (2 - k) * l1 ** k
             for k, c in enumerate(section.quadratic)), R.zero)
    P, e1, e2 = (_constant(R, K, v) for v in section.frame)
    components = [F * p - Q * (l0 * u + l1 * v) for p, u, v in zip(P, e1, e2)]
    return RationalMap(components, (2,), K).normalized()


def _plane_vectors(gradient, field):
    'The vectors g_m e_j - g_j e_m of the plane sum(g_i x_i) = 0, m the first index with g_m != 0'
    m = next(i for i, g in enumerate(gradient) if g)
    vectors = {}
    for j in range(len(gradient)):
        if j == m:
            continue
        v = [gradient[0] * 0 for _ in gradient]
        v[j], v[m] = gradient[m], -gradient[j]
        vectors[j] = v
    return m, vectors


def _independent(rows):
    'True when the rows (polynomial vectors of length 4) have full rank'
    n = len(rows)
    columns = range(len(rows[0]))
    return any(determinant([[row[c] for c in cols] for row in rows]) for cols in combinations(columns, n))


@attr.s(slots=True, frozen=True)
class DominantMap(object):
    '''
    A dominant map P^1 x P^1 -> S built from tangent sections.

    ``degree_bound`` is the degree the construction has in general: 6 for
    the double tangent-section map of an irreducible section, 2 for the conic
    bundle over a K-rational line.
    '''

    rational_map = attr.ib()
    case = attr.ib()
    degree_bound = attr.ib()
    section = attr.ib()
    line = attr.ib(default=None)


def _section_map(surface, section):
    '''
    psi(l, m): P_l runs over C_P, then the section of S by the tangent plane
    at P_l is parametrized by the lines through P_l with direction m.
    '''
    K = surface.field
    R, l0, l1, m0, m1 = poly_ring(list(PRODUCT_NAMES), K)
    P, e1, e2 = (_constant(R, K, v) for v in section.frame)
    w = [l0 * u + l1 * v for u, v in zip(e1, e2)]
    cubic, quadric = _expansion(surface.coeffs, R, K, P, w)
    moving = [cubic * p - quadric * wi for p, wi in zip(P, w)]

    gradient = [3 * R.ground_new(K.to_domain(a)) * x ** 2 for a, x in zip(surface.coeffs, moving)]
    m, vectors = _plane_vectors(gradient, K)
    left_out = next(i for i in range(4) if i != m and moving[i])
    first, second = (vectors[j] for j in range(4) if j not in (m, left_out))
    direction = [m0 * u + m1 * v for u, v in zip(first, second)]
    cubic, quadric = _expansion(surface.coeffs, R, K, moving, direction)
    return RationalMap([cubic * p - quadric * d for p, d in zip(moving, direction)], (2, 2), K)


def _conic_bundle_map(surface, line):
    '''
    phi(l, m): P' = l0 A + l1 B runs over the line L = AB; the tangent plane
    at P' meets S in L and a conic through P', parametrized by the lines
    through P' with direction m.
    '''
    K = surface.field
    R, l0, l1, m0, m1 = poly_ring(list(PRODUCT_NAMES), K)
    A, B = (_constant(R, K, v) for v in line)
    moving = [l0 * a + l1 * b for a, b in zip(A, B)]
    along = [l0 * (l0 * b - l1 * a) for a, b in zip(A, B)]

    gradient = [3 * R.ground_new(K.to_domain(a)) * x ** 2 for a, x in zip(surface.coeffs, moving)]
    _, vectors = _plane_vectors(gradient, K)
    across = next((v for v in vectors.values() if _independent([A, B, v])), None)
    if across is None:
        raise WrongCaseError("No tangent plane along the line leaves it")
    direction = [m0 * u + m1 * v for u, v in zip(along, across)]
    cubic, quadric = _expansion(surface.coeffs, R, K, moving, direction)
    # m1 = 0 is the direction of L, which lies on S
    cubic, quadric = exact_div(cubic, m1), exact_div(quadric, m1)
    return RationalMap([cubic * p - quadric * d for p, d in zip(moving, direction)], (2, 2), K)


def unirational_map(surface, point):
    '''
    A dominant rational map P^1 x P^1 -> S through a K-point of S.

    Parameters
    ----------
    surface: DiagonalCubic
    point: sequence of field elements
        A K-point P of S.

    Returns
    -------
    DominantMap
        The double tangent-section map (degree 6) when C_P is irreducible, the
        conic bundle over a K-rational line of C_P (degree 2) otherwise.

    Raises
    ------
    EckardtPointError
        If P is an Eckardt point whose three lines are not defined over K.
    '''
    section, case = tangent_section(surface, point)
    if case is SectionCase.eckardt:
        raise EckardtPointError(section.point)
    if case is SectionCase.irreducible:
        return DominantMap(_section_map(surface, section), case, 6, section)
    line = section.rational_line()
    return DominantMap(_conic_bundle_map(surface, line), case, 2, section, line)
