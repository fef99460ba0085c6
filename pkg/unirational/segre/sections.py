# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

"""
Plane cubic curves with a distinguished singular point.

A section is written in a frame (P, e1, e2) of its plane: the point
g*P + a*e1 + b*e2 has frame coordinates (g : a : b). When P is a singular
point the restricted cubic reads

    G(g, a, b) = g * Q(a, b) + F(a, b)

with Q a binary quadratic and F a binary cubic, and the line through P in
direction (a : b) meets the curve again at F(a, b) P - Q(a, b) (a e1 + b e2).

Examples
--------
>>> from unirational.fields import QQ_FIELD
>>> from unirational.poly import poly_ring
>>> R, x, y, z = poly_ring(['x', 'y', 'z'], QQ_FIELD)
>>> C = PlaneCubicSection.from_ternary(z*y**2 - x**3, (0, 0, 1))
>>> C.classify()
<SectionCase.irreducible: 1>
"""

from __future__ import absolute_import, division, print_function

from enum import Enum

import attr

from ..poly import binary_form_divide
from ..poly import binary_form_gcd
from ..poly import binary_form_roots
from ..poly import compose
from ..poly import poly_ring
from ..poly import scalar_field
from ..utils.errors import ArityError
from ..utils.errors import NotOnSurfaceError
from ..utils.errors import WrongCaseError

FRAME_NAMES = ('g', 'a', 'b')


class SectionCase(Enum):
    'Shape of the tangent section of a cubic surface at a point'
    irreducible = 1
    line_and_conic = 2
    three_lines = 3
    eckardt = 4


def _heaviest(values, field):
    'Index of the nonzero entry of largest height, the lowest index on ties'
    best = None
    for i, v in enumerate(values):
        if field.is_zero(v):
            continue
        if best is None or field.height(v) > field.height(values[best]):
            best = i
    return best


def _combine(field, *pairs):
    'The vector sum(c * v) for (c, v) in pairs'
    size = len(pairs[0][1])
    out = [field.zero() for _ in range(size)]
    for c, v in pairs:
        for i in range(size):
            out[i] = out[i] + c * v[i]
    return tuple(out)


@attr.s(slots=True, frozen=True, repr=False)
class PlaneCubicSection(object):
    '''
    A plane cubic curve C with a singular point P.

    Parameters
    ----------
    field: Field
    frame: tuple of 3 vectors
        (P, e1, e2), spanning the plane of C in the ambient projective space.
    cubic: PolyElement
        The restriction G(g, a, b) of the ambient equation to the frame.
    plane: tuple, optional
        The linear form cutting out the plane, for tangent sections of a surface.
    '''

    field = attr.ib()
    frame = attr.ib(converter=tuple)
    cubic = attr.ib()
    plane = attr.ib(default=None)
    quadratic = attr.ib(init=False)
    binary_cubic = attr.ib(init=False)

    def __attrs_post_init__(self):
        K = self.field
        forms = {e: [K.zero() for _ in range(4 - e)] for e in range(4)}
        for (eg, ea, eb), c in self.cubic.terms():
            forms[eg][eb] = K.from_domain(c)
        if any(not K.is_zero(c) for e in (2, 3) for c in forms[e]):
            raise WrongCaseError("{0} is not a singular point of the section".format(self.point))
        object.__setattr__(self, 'quadratic', forms[1])
        object.__setattr__(self, 'binary_cubic', forms[0])

    @classmethod
    def from_ternary(cls, G, point, field=None):
        '''
        The section given by a ternary cubic G(x, y, z) and a singular point of it.

        The frame keeps P and the two unit vectors complementary to the
        heaviest coordinate of P.
        '''
        R = G.ring
        if R.ngens != 3:
            raise ArityError("A plane cubic has 3 variables, got {0}".format(R.ngens))
        K = scalar_field(R.domain) if field is None else field
        P = tuple(K.convert(x) for x in point)
        if len(P) != 3:
            raise ArityError("Points of P^2 have 3 coordinates, got {0}".format(len(P)))
        m = _heaviest(P, K)
        if m is None:
            raise ValueError("(0, 0, 0) is not a projective point")
        units = [tuple(K.one() if i == j else K.zero() for i in range(3)) for j in range(3) if j != m]
        frame = (P,) + tuple(units)
        cubic = _restrict(G, frame, K)
        if any(sum(e) == 3 and e[0] == 3 for e in cubic.monoms()):
            raise NotOnSurfaceError("({0}) does not lie on the curve".format(', '.join(str(x) for x in P)))
        return cls(K, frame, cubic)

    @property
    def point(self):
        return self.frame[0]

    def to_ambient(self, g, a, b):
        P, e1, e2 = self.frame
        return _combine(self.field, (g, P), (a, e1), (b, e2))

    def classify(self):
        '''
        The shape of C, decided by the common factors of Q and F.

        Q = 0 makes C a cone of three lines through P. It is reported as
        ``three_lines`` when one of them is defined over K, else ``eckardt``.
        Otherwise the degree of gcd(F, Q) counts the lines of C through P.
        '''
        K = self.field
        if all(K.is_zero(c) for c in self.quadratic):
            if all(K.is_zero(c) for c in self.binary_cubic) or binary_form_roots(self.binary_cubic, K):
                return SectionCase.three_lines
            return SectionCase.eckardt
        common = binary_form_gcd(self.binary_cubic, self.quadratic, K)
        return (SectionCase.irreducible, SectionCase.line_and_conic, SectionCase.three_lines)[len(common) - 1]

    @property
    def is_cone(self):
        'True when all three lines of C pass through P'
        return all(self.field.is_zero(c) for c in self.quadratic)

    def rational_line(self):
        '''
        Two points spanning a K-rational line of C, or None in the irreducible
        and Eckardt cases.
        '''
        K = self.field
        case = self.classify()
        if case in (SectionCase.irreducible, SectionCase.eckardt):
            return None
        if self.is_cone:
            if all(K.is_zero(c) for c in self.binary_cubic):
                direction = (K.one(), K.zero())
            else:
                direction = binary_form_roots(self.binary_cubic, K)[0][0]
            return self.point, self.to_ambient(K.zero(), *direction)
        common = binary_form_gcd(self.binary_cubic, self.quadratic, K)
        if case is SectionCase.line_and_conic:
            # the monic linear form c0*a + c1*b vanishes at (-c1 : c0)
            c0, c1 = common
            return self.point, self.to_ambient(K.zero(), -c1, c0)
        # F = Q * l and C contains the line g + l(a, b) = 0 missing P
        if all(K.is_zero(c) for c in self.binary_cubic):
            l0, l1 = K.zero(), K.zero()
        else:
            l0, l1 = binary_form_divide(self.binary_cubic, self.quadratic, K)
        return self.to_ambient(-l0, K.one(), K.zero()), self.to_ambient(-l1, K.zero(), K.one())

    def __str__(self):
        return str(self.cubic)

    def __repr__(self):
        return "<PlaneCubicSection: {0} at ({1})>".format(self, ', '.join(str(x) for x in self.point))


def _restrict(F, frame, field):
    'The cubic F(g*P + a*e1 + b*e2) in the frame coordinates'
    R, g, a, b = poly_ring(list(FRAME_NAMES), field)
    images = []
    for P, e1, e2 in zip(*frame):
        images.append(g * R.ground_new(field.to_domain(P))
                      + a * R.ground_new(field.to_domain(e1))
                      + b * R.ground_new(field.to_domain(e2)))
    return compose(F, images, field)


def tangent_frame(gradient, point, field):
    '''
    Frame (P, v_j, v_k) of the tangent plane sum(gradient_i x_i) = 0.

    With m the heaviest coordinate of the gradient g, the vectors
    v_j = g_m e_j - g_j e_m span the plane. P is a combination of them with
    coefficients P_j / g_m, so the v_l with P_l != 0 is the one left out.
    '''
    m = _heaviest(gradient, field)
    if m is None:
        raise ValueError("The tangent form vanishes: the point is singular")
    others = [i for i in range(len(point)) if i != m]
    left_out = next(i for i in others if not field.is_zero(point[i]))
    vectors = []
    for j in others:
        if j == left_out:
            continue
        v = [field.zero() for _ in point]
        v[j], v[m] = gradient[m], -gradient[j]
        vectors.append(tuple(v))
    return (tuple(point),) + tuple(vectors)


def tangent_section(surface, point):
    '''
    The section C_P of a smooth cubic surface S by its tangent plane at a K-point.

    Returns
    -------
    (PlaneCubicSection, SectionCase)

    Raises
    ------
    NotOnSurfaceError
        If the point is not on S.
    SingularSurfaceError
        If S is singular.
    '''
    surface.check_smooth()
    K = surface.field
    P = surface.check_point(point)
    gradient = tuple(surface.gradient(P))
    frame = tangent_frame(gradient, P, K)
    F, _ = surface.equation()
    section = PlaneCubicSection(K, frame, _restrict(F, frame, K), plane=gradient)
    return section, section.classify()
