# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

"""
Exact arithmetic in the Kummer extensions a diagonal cubic surface needs.

The 27 lines of a_1 x_1**3 + ... + a_4 x_4**3 = 0 are defined over the field
K' = K(omega, gamma_1, ..., gamma_m), where the gamma_b are cube roots of
representatives c_b of the cube classes of the coefficient ratios. Since the
classes are independent in K*/K*^3, the monomials gamma**e with
e in {0, 1, 2}^m are a basis of K' over K(omega), and an element is zero
exactly when all its coordinates are.

When K has no primitive cube root of unity, K(omega) is built as pairs
a + b*omega over K by ``AdjoinOmega``.

Examples
--------
>>> from unirational.fields import QQ_FIELD
>>> basis = CubeClassBasis(QQ_FIELD)
>>> basis.express(2)
(Fraction(1, 1), (1,))
>>> basis.express(16)
(Fraction(2, 1), (1,))
>>> L = KummerField(basis)
>>> g = L.radical(1, (1,))
>>> g * g * g == L.const(2)
True
"""

from __future__ import absolute_import, division, print_function

import itertools
from numbers import Integral

import attr

from ..fields import Decision
from ..fields import Field
from ..fields import PrimeField
from ..fields import fp_with_omega
from ..utils.errors import FieldError


def has_omega(field):
    'True when the field contains a primitive cube root of unity'
    if field.contains_omega:
        return True
    return isinstance(field, PrimeField) and field.p % 3 == 1


@attr.s(slots=True, frozen=True, eq=False, repr=False)
class OmegaPair(object):
    '''
    The element a + b*omega of K(omega), for a field K without omega.
    '''

    a = attr.ib()
    b = attr.ib()
    base = attr.ib()

    def _coerce(self, other):
        if isinstance(other, OmegaPair):
            if other.base != self.base:
                raise FieldError("Cannot mix {0}(omega) and {1}(omega)".format(self.base, other.base))
            return other
        try:
            return OmegaPair(self.base.convert(other), self.base.zero(), self.base)
        except TypeError:
            return None

    def _new(self, a, b):
        return OmegaPair(a, b, self.base)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._new(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return self._new(-self.a, -self.b)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._new(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        bd = b * d
        return self._new(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def conjugate(self):
        'Image under omega -> omega**2'
        return self._new(self.a - self.b, -self.b)

    def norm(self):
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inverse(self):
        n = self.norm()
        if self.base.is_zero(n):
            raise ZeroDivisionError("Division by zero in {0}(omega)".format(self.base))
        c = self.conjugate()
        return self._new(c.a / n, c.b / n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, k):
        if not isinstance(k, Integral):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = self._new(self.base.one(), self.base.zero())
        for _ in range(abs(int(k))):
            result = result * base
        return result

    def __bool__(self):
        return not (self.base.is_zero(self.a) and self.base.is_zero(self.b))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return not (self - other)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __str__(self):
        if self.base.is_zero(self.b):
            return str(self.a)
        if self.base.is_zero(self.a):
            return '({0})*omega'.format(self.b)
        return '{0} + ({1})*omega'.format(self.a, self.b)

    def __repr__(self):
        return "<OmegaPair: {0}>".format(self)


@attr.s(slots=True, frozen=True, repr=False)
class AdjoinOmega(Field):
    'K(omega) for a field K that does not contain omega'

    base = attr.ib()

    @property
    def characteristic(self):
        return self.base.characteristic

    def convert(self, x):
        if isinstance(x, OmegaPair):
            return x
        return OmegaPair(self.base.convert(x), self.base.zero(), self.base)

    def omega(self):
        return OmegaPair(self.base.zero(), self.base.one(), self.base)

    def descend(self, x):
        'x as an element of K, or None when x is not in K'
        x = self.convert(x)
        return x.a if self.base.is_zero(x.b) else None

    def __str__(self):
        return '{0}(omega)'.format(self.base)


def omega_closure(field):
    '''
    The smallest extension of ``field`` containing omega.

    >>> from unirational.fields import QQ_FIELD, QQ_OMEGA
    >>> omega_closure(QQ_OMEGA) is QQ_OMEGA
    True
    >>> str(omega_closure(QQ_FIELD))
    'QQ(omega)'
    '''
    if field.contains_omega:
        return field
    if isinstance(field, PrimeField) and field.p % 3 == 1:
        return fp_with_omega(field.p)
    return AdjoinOmega(field)


def descend(closure, x):
    'x in the base field of an omega closure, or None'
    if isinstance(closure, AdjoinOmega):
        return closure.descend(x)
    return x


@attr.s(slots=True)
class CubeClassBasis(object):
    '''
    Independent representatives of the classes in K*/K*^3 met so far.

    ``express`` writes an element r as kappa**3 * prod(c_b**e_b) and adds r
    as a new representative when no such decomposition exists.
    ``uncertain[b]`` records that representative b was added after a cube
    test the field could not decide, so its independence is not proven.
    '''

    field = attr.ib()
    generators = attr.ib(factory=list)
    uncertain = attr.ib(factory=list)

    @property
    def rank(self):
        return len(self.generators)

    @property
    def certain(self):
        return not any(self.uncertain)

    def express(self, r):
        '''
        Decompose a nonzero element of K.

        Returns
        -------
        out: tuple
            kappa in K and the exponent tuple e, with r = kappa**3 * prod(c_b**e_b).
        '''
        K = self.field
        r = K.convert(r)
        if K.is_zero(r):
            raise FieldError("Zero has no cube class")
        undecided = False
        for exponents in itertools.product(range(3), repeat=self.rank):
            q = r
            for c, e in zip(self.generators, exponents):
                if e:
                    q = q / c ** e
            decision = K.is_cube(q)
            if decision is Decision.yes:
                kappa = K.cube_root(q)
                if kappa is not None:
                    return kappa, exponents
            if decision is not Decision.no:
                undecided = True
        self.generators.append(r)
        self.uncertain.append(undecided)
        return K.one(), (0,) * (self.rank - 1) + (1,)

    def pad(self, exponents):
        return tuple(exponents) + (0,) * (self.rank - len(exponents))

    def decide_in_base(self, exponents):
        'Whether gamma**exponents lies in K(omega), as a Decision'
        exponents = self.pad(exponents)
        if not any(exponents):
            return Decision.yes
        if any(self.uncertain[b] for b, e in enumerate(exponents) if e):
            return Decision.unknown
        return Decision.no


@attr.s(slots=True, frozen=True, repr=False)
class KummerField(object):
    '''
    K(omega, gamma_1, ..., gamma_m) with gamma_b**3 = c_b.

    The basis must be complete before the field is built.
    '''

    basis = attr.ib()
    coeffs = attr.ib(init=False, eq=False)
    gens = attr.ib(init=False, eq=False)
    rank = attr.ib(init=False)

    def __attrs_post_init__(self):
        L = omega_closure(self.basis.field)
        object.__setattr__(self, 'coeffs', L)
        object.__setattr__(self, 'gens', tuple(L.convert(c) for c in self.basis.generators))
        object.__setattr__(self, 'rank', len(self.basis.generators))

    @property
    def base(self):
        return self.basis.field

    @property
    def zero_exponent(self):
        return (0,) * self.rank

    def elem(self, terms):
        return KummerElem(self, terms)

    def const(self, x):
        return KummerElem(self, {self.zero_exponent: self.coeffs.convert(x)})

    def zero(self):
        return KummerElem(self, {})

    def one(self):
        return self.const(1)

    def omega(self):
        return self.const(self.coeffs.omega())

    def radical(self, kappa, exponents, twist=0):
        'omega**twist * kappa * gamma**exponents'
        exponents = self.basis.pad(exponents)
        if len(exponents) != self.rank:
            raise FieldError("Exponent {0} for a Kummer field of rank {1}".format(exponents, self.rank))
        c = self.coeffs.convert(kappa)
        if twist % 3:
            c = c * self.coeffs.omega() ** (twist % 3)
        return KummerElem(self, {exponents: c})

    def galois_generators(self):
        '''
        Generators of Gal(K'/K) as functions on elements: the gamma_b -> omega*gamma_b,
        and omega -> omega**2 when K lacks omega.
        '''
        gens = []
        for b in range(self.rank):
            sigma = tuple(1 if i == b else 0 for i in range(self.rank))
            gens.append(lambda x, sigma=sigma: x.apply(sigma))
        if isinstance(self.coeffs, AdjoinOmega):
            gens.append(lambda x: x.conjugate())
        return gens

    def __repr__(self):
        return "<KummerField: {0} with {1} cube root(s)>".format(self.coeffs, self.rank)


class KummerElem(object):
    '''
    An element of a KummerField on the basis gamma**e.
    '''

    __slots__ = ('field', 'terms')

    def __init__(self, field, terms):
        L = field.coeffs
        self.field = field
        self.terms = {e: c for e, c in terms.items() if not L.is_zero(c)}

    def _coerce(self, other):
        if isinstance(other, KummerElem):
            if other.field is not self.field and other.field != self.field:
                raise FieldError("Elements of different Kummer fields")
            return other
        try:
            return self.field.const(other)
        except (TypeError, FieldError):
            return NotImplemented

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return KummerElem(self.field, terms)

    __radd__ = __add__

    def __neg__(self):
        return KummerElem(self.field, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        gens = self.field.gens
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                c = c1 * c2
                e = []
                for b, (x, y) in enumerate(zip(e1, e2)):
                    if x + y >= 3:
                        c = c * gens[b]
                        e.append(x + y - 3)
                    else:
                        e.append(x + y)
                e = tuple(e)
                terms[e] = terms[e] + c if e in terms else c
        return KummerElem(self.field, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, Integral) or k < 0:
            return NotImplemented
        result = self.field.one()
        for _ in range(int(k)):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return (self - other).is_zero()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def apply(self, sigma):
        'Image under gamma_b -> omega**sigma_b * gamma_b'
        L = self.field.coeffs
        w = L.omega()
        terms = {}
        for e, c in self.terms.items():
            k = sum(s * x for s, x in zip(sigma, e)) % 3
            terms[e] = c * w ** k if k else c
        return KummerElem(self.field, terms)

    def conjugate(self):
        'Image under omega -> omega**2, fixing every gamma_b'
        if not isinstance(self.field.coeffs, AdjoinOmega):
            raise FieldError("omega -> omega**2 is not an automorphism over {0}".format(self.field.base))
        return KummerElem(self.field, {e: c.conjugate() for e, c in self.terms.items()})

    def in_base(self):
        'The element as a member of K, or None'
        if not self.terms:
            return self.field.base.zero()
        if set(self.terms) != {self.field.zero_exponent}:
            return None
        return descend(self.field.coeffs, self.terms[self.field.zero_exponent])

    def __str__(self):
        if not self.terms:
            return '0'
        parts = []
        for e in sorted(self.terms):
            c = str(self.terms[e])
            radical = '*'.join('g{0}'.format(b + 1) if x == 1 else 'g{0}^2'.format(b + 1)
                               for b, x in enumerate(e) if x)
            if not radical:
                parts.append(c)
            elif c == '1':
                parts.append(radical)
            else:
                parts.append('({0})*{1}'.format(c, radical))
        return ' + '.join(parts)

    def __repr__(self):
        return "<KummerElem: {0}>".format(self)
