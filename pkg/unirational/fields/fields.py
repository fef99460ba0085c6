# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

"""
Submodule with the coefficient fields everything else is generic over.

Three kinds of field are provided:

* ``RationalField``: exact rationals, elements are ``fractions.Fraction``.
* ``CyclotomicField``: Q(omega) with omega a primitive cube root of unity,
  elements are ``CycloRat`` on the basis {1, omega}.
* ``PrimeField``: F_p for a prime p = 1 mod 3, elements are ``PrimeFieldElem``,
  with a designated cube root of unity omega_p.

Each field also exposes the matching sympy domain (``QQ``, ``QQ<omega>``,
``GF(p)``) so that polynomial rings can be built over it, together with
converters in both directions.

Examples
--------
>>> F = fp_with_omega(7)
>>> F.omega()
<PrimeFieldElem: 2 mod 7>
>>> rational_is_cube(Fraction(27, 8))
True
"""

from __future__ import absolute_import, division, print_function

from fractions import Fraction
from functools import lru_cache
from numbers import Integral

import attr
from sympy import QQ
from sympy import GF
from sympy import I
from sympy import sqrt
from sympy import integer_nthroot
from sympy.ntheory import isprime
from sympy.ntheory import primitive_root
from sympy.ntheory import nthroot_mod

from .enums import Decision
from ..utils.errors import FieldError
from ..utils.errors import SpecializationError


def _rational(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("Expected an exact rational, got {0!r}".format(value))
    if isinstance(value, Integral):
        return Fraction(int(value))
    # sympy ground types (python or gmpy) expose numerator and denominator
    if hasattr(value, "numerator") and hasattr(value, "denominator") and not isinstance(value, float):
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError("Expected an exact rational, got {0!r}".format(value))


def _format_rational(q):
    return str(q.numerator) if q.denominator == 1 else "{0}/{1}".format(q.numerator, q.denominator)


def rational_cube_root(c):
    '''
    Rational cube root of c, or None when c is not a rational cube.

    >>> rational_cube_root(Fraction(-27, 8))
    Fraction(-3, 2)
    >>> rational_cube_root(2) is None
    True
    '''
    c = _rational(c)
    if c == 0:
        return Fraction(0)
    sign = -1 if c < 0 else 1
    num, num_exact = integer_nthroot(abs(c.numerator), 3)
    den, den_exact = integer_nthroot(c.denominator, 3)
    if not (num_exact and den_exact):
        return None
    return Fraction(sign * int(num), int(den))


def rational_is_cube(c):
    '''
    True iff the nonzero rational c is the cube of a rational.

    >>> rational_is_cube(-8)
    True
    >>> rational_is_cube(2)
    False
    '''
    c = _rational(c)
    if c == 0:
        raise FieldError("The cube test is only defined on nonzero rationals")
    return rational_cube_root(c) is not None


@attr.s(slots=True, frozen=True, eq=False, repr=False)
class CycloRat(object):
    '''
    The element a + b*omega of Q(omega), with omega**2 = -omega - 1.

    >>> w = CycloRat(0, 1)
    >>> w * w * w
    <CycloRat: 1>
    >>> 1 + w + w**2
    <CycloRat: 0>
    '''

    a = attr.ib(default=0, converter=_rational)
    b = attr.ib(default=0, converter=_rational)

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, CycloRat):
            return other
        if isinstance(other, PrimeFieldElem):
            return None
        try:
            return cls(_rational(other), 0)
        except TypeError:
            return None

    @property
    def is_rational(self):
        return self.b == 0

    def norm(self):
        'N(a + b*omega) = a**2 - a*b + b**2'
        return self.a * self.a - self.a * self.b + self.b * self.b

    def conjugate(self):
        'Image under omega -> omega**2'
        return CycloRat(self.a - self.b, -self.b)

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("CycloRat division by zero")
        c = self.conjugate()
        return CycloRat(c.a / n, c.b / n)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycloRat(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return CycloRat(-self.a, -self.b)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycloRat(self.a - other.a, self.b - other.b)

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
        return CycloRat(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, Integral):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = CycloRat(1)
        for _ in range(abs(int(k))):
            result = result * base
        return result

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.a) if self.b == 0 else hash((self.a, self.b))

    def __str__(self):
        if not self.b:
            return _format_rational(self.a)
        if self.b == 1:
            omega = 'omega'
        elif self.b == -1:
            omega = '-omega'
        else:
            omega = '{0}*omega'.format(_format_rational(self.b))
        if not self.a:
            return omega
        if omega.startswith('-'):
            return '{0} - {1}'.format(_format_rational(self.a), omega[1:])
        return '{0} + {1}'.format(_format_rational(self.a), omega)

    def __repr__(self):
        return "<{0}: {1}>".format(self.__class__.__name__, self)


@attr.s(slots=True, frozen=True, eq=False, repr=False)
class PrimeFieldElem(object):
    '''
    Residue class modulo a prime.

    >>> x = PrimeFieldElem(3, 7)
    >>> x * 5
    <PrimeFieldElem: 1 mod 7>
    >>> 1 / x
    <PrimeFieldElem: 5 mod 7>
    '''

    value = attr.ib()
    p = attr.ib()

    @value.validator
    def _check_value(self, attribute, value):
        if not 0 <= value < self.p:
            raise FieldError("{0} is not reduced modulo {1}".format(value, self.p))

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElem):
            if other.p != self.p:
                raise FieldError("Cannot mix GF({0}) and GF({1})".format(self.p, other.p))
            return other.value
        if isinstance(other, bool):
            return None
        if isinstance(other, Integral):
            return int(other) % self.p
        if isinstance(other, Fraction):
            den = other.denominator % self.p
            if den == 0:
                raise SpecializationError("Denominator {0} vanishes mod {1}".format(other.denominator, self.p))
            return other.numerator * pow(den, -1, self.p) % self.p
        return None

    def _new(self, value):
        return PrimeFieldElem(value % self.p, self.p)

    def __add__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is None else self._new(self.value + v)

    __radd__ = __add__

    def __neg__(self):
        return self._new(-self.value)

    def __pos__(self):
        return self

    def __sub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is None else self._new(self.value - v)

    def __rsub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is None else self._new(v - self.value)

    def __mul__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is None else self._new(self.value * v)

    __rmul__ = __mul__

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError("Division by zero in GF({0})".format(self.p))
        return PrimeFieldElem(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self * self._new(v).inverse()

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self.inverse() * v

    def __pow__(self, k):
        if not isinstance(k, Integral):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return PrimeFieldElem(pow(self.value, int(k), self.p), self.p)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __eq__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self.value == v

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.value, self.p))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return "<{0}: {1} mod {2}>".format(self.__class__.__name__, self.value, self.p)


class Field(object):
    '''
    The field contract.

    Elements support the Python arithmetic operators; the methods below give
    the same operations under fixed names, plus the pieces only a field can
    answer (its cube root of unity, cube tests, its sympy domain).
    '''

    __slots__ = ()

    characteristic = 0
    contains_omega = True

    def zero(self):
        return self.convert(0)

    def one(self):
        return self.convert(1)

    def omega(self):
        raise FieldError("{0} has no primitive cube root of unity".format(self))

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def inv(self, x):
        if self.is_zero(x):
            raise ZeroDivisionError("Inverse of zero in {0}".format(self))
        return self.one() / x

    def eq(self, x, y):
        return self.is_zero(x - y)

    def is_zero(self, x):
        return not x

    def is_cube(self, x):
        return Decision.unknown

    def cube_root(self, x):
        return None

    def height(self, x):
        return 0

    def __repr__(self):
        return "<{0}: {1}>".format(self.__class__.__name__, self)


class RationalField(Field):
    '''
    The rationals, with ``fractions.Fraction`` elements.

    >>> QQ_FIELD.is_cube(Fraction(27, 8))
    <Decision.yes: 1>
    '''

    __slots__ = ()

    contains_omega = False

    def convert(self, x):
        if isinstance(x, CycloRat):
            if not x.is_rational:
                raise FieldError("{0} is not rational".format(x))
            return x.a
        return _rational(x)

    @property
    def domain(self):
        return QQ

    def to_domain(self, x):
        x = self.convert(x)
        return QQ(x.numerator, x.denominator)

    def from_domain(self, d):
        return _rational(d)

    def is_cube(self, x):
        return Decision.yes if rational_cube_root(x) is not None else Decision.no

    def cube_root(self, x):
        return rational_cube_root(x)

    def height(self, x):
        x = self.convert(x)
        return max(abs(x.numerator), x.denominator)

    def random_element(self, rng, bound=50):
        return Fraction(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, bound + 1)))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash('QQ')

    def __str__(self):
        return 'QQ'


OMEGA_EXPR = (-1 + sqrt(3) * I) / 2


@lru_cache(maxsize=None)
def _cyclotomic_domain():
    K = QQ.algebraic_field(OMEGA_EXPR)
    w = K.from_sympy(OMEGA_EXPR)
    coeffs = [QQ.convert(c) for c in w.to_list()]
    if len(coeffs) == 1:
        raise FieldError("sympy collapsed Q(omega) to a rational field")
    # omega = w1*theta + w0 in terms of the generator sympy picked
    return K, w, coeffs[0], coeffs[1]


class CyclotomicField(Field):
    '''
    Q(omega) on the basis {1, omega}.

    >>> F = CyclotomicField()
    >>> F.omega() ** 3
    <CycloRat: 1>
    >>> F.is_cube(F.omega())
    <Decision.unknown: 2>
    '''

    __slots__ = ()

    def convert(self, x):
        if isinstance(x, CycloRat):
            return x
        return CycloRat(_rational(x), 0)

    def omega(self):
        return CycloRat(0, 1)

    @property
    def domain(self):
        return _cyclotomic_domain()[0]

    def to_domain(self, x):
        x = self.convert(x)
        K, w, _, _ = _cyclotomic_domain()
        a = K.convert_from(QQ(x.a.numerator, x.a.denominator), QQ)
        b = K.convert_from(QQ(x.b.numerator, x.b.denominator), QQ)
        return a + b * w

    def from_domain(self, d):
        K, _, w1, w0 = _cyclotomic_domain()
        coeffs = [QQ.convert(c) for c in K.convert(d).to_list()]
        if not coeffs:
            return CycloRat(0)
        if len(coeffs) == 1:
            return CycloRat(_rational(coeffs[0]))
        b = coeffs[0] / w1
        return CycloRat(_rational(coeffs[1] - b * w0), _rational(b))

    def is_cube(self, x):
        x = self.convert(x)
        if not x.is_rational:
            return Decision.unknown
        return Decision.yes if rational_cube_root(x.a) is not None else Decision.no

    def cube_root(self, x):
        x = self.convert(x)
        if not x.is_rational:
            return None
        root = rational_cube_root(x.a)
        return None if root is None else CycloRat(root)

    def height(self, x):
        x = self.convert(x)
        return max(abs(x.a.numerator), x.a.denominator, abs(x.b.numerator), x.b.denominator)

    def random_element(self, rng, bound=50):
        return CycloRat(QQ_FIELD.random_element(rng, bound), QQ_FIELD.random_element(rng, bound))

    def __eq__(self, other):
        return isinstance(other, CyclotomicField)

    def __hash__(self):
        return hash('QQ(omega)')

    def __str__(self):
        return 'QQ(omega)'


@lru_cache(maxsize=None)
def _finite_field(p):
    return GF(p)


@attr.s(slots=True, frozen=True, repr=False)
class PrimeField(Field):
    '''
    F_p with p = 1 mod 3 and a designated primitive cube root of unity.

    Build instances with ``fp_with_omega``, or with ``prime_field`` when no
    cube root of unity is needed.
    '''

    p = attr.ib()
    omega_value = attr.ib(default=None)

    @property
    def characteristic(self):
        return self.p

    @property
    def contains_omega(self):
        return self.omega_value is not None

    def convert(self, x):
        if isinstance(x, PrimeFieldElem):
            if x.p != self.p:
                raise FieldError("Cannot mix GF({0}) and GF({1})".format(x.p, self.p))
            return x
        return self.reduce(x)

    def reduce(self, x):
        '''
        Image of an integer, rational or CycloRat under Q(omega) -> F_p, omega -> omega_p.

        >>> F = fp_with_omega(7)
        >>> F.reduce(CycloRat(Fraction(1, 2), 1))
        <PrimeFieldElem: 6 mod 7>
        '''
        if isinstance(x, CycloRat):
            if not x.b:
                return self.reduce(x.a)
            return self.reduce(x.a) + self.reduce(x.b) * self.omega()
        if isinstance(x, Integral) and not isinstance(x, bool):
            return PrimeFieldElem(int(x) % self.p, self.p)
        q = _rational(x)
        den = q.denominator % self.p
        if den == 0:
            raise SpecializationError("Denominator {0} vanishes mod {1}".format(q.denominator, self.p))
        return PrimeFieldElem(q.numerator * pow(den, -1, self.p) % self.p, self.p)

    def omega(self):
        if self.omega_value is None:
            raise FieldError("{0} was built without a cube root of unity".format(self))
        return PrimeFieldElem(self.omega_value, self.p)

    @property
    def domain(self):
        return _finite_field(self.p)

    def to_domain(self, x):
        return self.domain(self.convert(x).value)

    def from_domain(self, d):
        return PrimeFieldElem(int(d) % self.p, self.p)

    def is_cube(self, x):
        x = self.convert(x)
        if not x:
            return Decision.yes
        return Decision.of(pow(x.value, (self.p - 1) // 3, self.p) == 1)

    def cube_root(self, x):
        x = self.convert(x)
        if not x:
            return x
        if self.is_cube(x) is not Decision.yes:
            return None
        return PrimeFieldElem(int(nthroot_mod(x.value, 3, self.p)) % self.p, self.p)

    def sqrt(self, x):
        'A square root of x, or None'
        x = self.convert(x)
        if not x:
            return x
        if pow(x.value, (self.p - 1) // 2, self.p) != 1:
            return None
        return PrimeFieldElem(int(nthroot_mod(x.value, 2, self.p)) % self.p, self.p)

    def random_element(self, rng, nonzero=False):
        low = 1 if nonzero else 0
        return PrimeFieldElem(int(rng.integers(low, self.p)), self.p)

    def __str__(self):
        return 'GF({0})'.format(self.p)


def fp_with_omega(p, choice=None):
    '''
    F_p together with a primitive cube root of unity omega_p.

    Parameters
    ----------
    p: int
        A prime with p = 1 mod 3.
    choice: int or numpy Generator, optional
        Which of the two roots to use. By default the smaller one;
        a random generator picks one at random.

    Examples
    --------
    >>> fp_with_omega(13).omega_value
    3
    >>> fp_with_omega(13, choice=1).omega_value
    9
    '''
    p = int(p)
    if not isprime(p):
        raise FieldError("{0} is not prime".format(p))
    if p % 3 != 1:
        raise FieldError("GF({0}) has no primitive cube root of unity ({0} is not 1 mod 3)".format(p))
    g = primitive_root(p)
    w = pow(g, (p - 1) // 3, p)
    roots = sorted([w, w * w % p])
    if choice is None:
        index = 0
    elif isinstance(choice, Integral):
        index = int(choice)
    else:
        index = int(choice.integers(0, 2))
    return PrimeField(p, roots[index])


def prime_field(p):
    '''
    F_p for any prime p > 3, without a designated cube root of unity.

    >>> prime_field(10007).contains_omega
    False
    '''
    p = int(p)
    if p <= 3 or not isprime(p):
        raise FieldError("{0} is not a prime larger than 3".format(p))
    return PrimeField(p)


QQ_FIELD = RationalField()
QQ_OMEGA = CyclotomicField()
