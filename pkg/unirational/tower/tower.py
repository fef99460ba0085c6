# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

"""
Exact arithmetic in the function field k(V) of the product of the curves
y_i**6 = x_i**2 (x_i - 1), i = 1..n.

k(V) is a free module over k(x_1, ..., x_n) with basis the monomials
y_1**m_1 ... y_n**m_n, 0 <= m_i <= 5. A ``TowerElem`` stores the map from
exponent vectors to coefficients in k(x_1, ..., x_n); every product is
reduced with y_i**6 -> x_i**2 (x_i - 1) so that the stored form is normal.

Inversion treats k(V) as the tower of degree-6 extensions
k(x)(y_1)(y_2)...(y_n) and runs the extended Euclidean algorithm against
T**6 - x_i**2 (x_i - 1) one level at a time.

Examples
--------
>>> V = Tower(4)
>>> y1 = V.y(1)
>>> y1 * y1**5 == V.relation(1)
True
>>> (y1 / V.y(2)).is_invariant()
True
"""

from __future__ import absolute_import, division, print_function

import warnings
from fractions import Fraction
from numbers import Integral

import attr

from ..fields import CycloRat
from ..fields import QQ_FIELD
from ..fields import fp_with_omega
from ..poly import FunctionField
from ..poly import specialize
from ..utils import random_prime
from ..utils.errors import ArityError
from ..utils.errors import FieldError
from ..utils.errors import SamplingWarning
from ..utils.errors import SpecializationError
from ..utils.errors import TowerInconsistency

RETRY_BUDGET = 100


def _valid_arity(instance, attribute, value):
    if value not in (4, 5):
        raise ArityError("Tower arity must be 4 or 5, not {0}".format(value))


@attr.s(slots=True, frozen=True, repr=False)
class Tower(object):
    '''
    The function field k(V) for n = 4 or 5, with constants in ``field``.

    Parameters
    ----------
    n: int
        Number of curves.
    field: Field, optional, default=QQ
        The constants k. The action of g needs a field containing omega.
    '''

    n = attr.ib(validator=_valid_arity)
    field = attr.ib(default=QQ_FIELD)
    coeffs = attr.ib(init=False, eq=False)
    _relations = attr.ib(init=False, eq=False)

    def __attrs_post_init__(self):
        coeffs = FunctionField(self.field, ['x{0}'.format(i) for i in range(1, self.n + 1)])
        object.__setattr__(self, 'coeffs', coeffs)
        object.__setattr__(self, '_relations', tuple(x**2 * (x - 1) for x in coeffs.gens))

    @property
    def zero_exponent(self):
        return (0,) * self.n

    def elem(self, terms):
        return TowerElem(self, terms)

    def const(self, c):
        'A constant of k(x_1, ..., x_n) as an element of the tower'
        c = self.coeffs.convert(c)
        return TowerElem(self, {self.zero_exponent: c} if c else {})

    def zero(self):
        return TowerElem(self, {})

    def one(self):
        return self.const(1)

    def x(self, i):
        self._check_index(i)
        return self.const(self.coeffs.gens[i - 1])

    def y(self, i):
        self._check_index(i)
        exponent = [0] * self.n
        exponent[i - 1] = 1
        return TowerElem(self, {tuple(exponent): self.coeffs.one()})

    def relation(self, i):
        'x_i**2 (x_i - 1), the value of y_i**6'
        self._check_index(i)
        return self.const(self._relations[i - 1])

    def monomial(self, exponent, coeff=1):
        'coeff * y**exponent, reduced'
        exponent = tuple(exponent)
        if len(exponent) != self.n:
            raise ArityError("Exponent {0} for a tower of arity {1}".format(exponent, self.n))
        c = self.coeffs.convert(coeff)
        reduced = []
        for i, e in enumerate(exponent):
            if e < 0:
                raise ValueError("Negative exponent {0}; use division".format(exponent))
            q, r = divmod(e, 6)
            if q:
                c = c * self._relations[i] ** q
            reduced.append(r)
        return TowerElem(self, {tuple(reduced): c} if c else {})

    def _check_index(self, i):
        if not 1 <= i <= self.n:
            raise ArityError("Index {0} outside 1..{1}".format(i, self.n))

    def _mul_exponents(self, m1, m2):
        factor = None
        out = []
        for i, (a, b) in enumerate(zip(m1, m2)):
            e = a + b
            if e >= 6:
                e -= 6
                factor = self._relations[i] if factor is None else factor * self._relations[i]
            out.append(e)
        return tuple(out), factor

    def lift(self, other):
        if isinstance(other, TowerElem):
            if other.tower != self:
                raise ArityError("Elements of different towers")
            return other
        return self.const(other)

    def __repr__(self):
        return "<Tower: n={0} over {1}>".format(self.n, self.field)


class TowerElem(object):
    '''
    An element of k(V) on the monomial basis, in normal form.

    Elements are immutable; arithmetic returns new elements. Equality is
    decided by the vanishing of the difference.
    '''

    __slots__ = ('tower', 'terms')

    def __init__(self, tower, terms):
        self.tower = tower
        self.terms = {m: c for m, c in terms.items() if c}

    @property
    def n(self):
        return self.tower.n

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def support(self):
        return sorted(self.terms)

    def coefficient(self, exponent):
        return self.terms.get(tuple(exponent), self.tower.coeffs.zero())

    def is_monomial(self):
        return len(self.terms) == 1

    def is_constant(self):
        return not self.terms or set(self.terms) == {self.tower.zero_exponent}

    def involves(self, i):
        'True when y_i appears in the element'
        return any(m[i - 1] for m in self.terms)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms[m] + c if m in terms else c
        return TowerElem(self.tower, terms)

    __radd__ = __add__

    def __neg__(self):
        return TowerElem(self.tower, {m: -c for m, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m, factor = self.tower._mul_exponents(m1, m2)
                c = c1 * c2 if factor is None else c1 * c2 * factor
                terms[m] = terms[m] + c if m in terms else c
        return TowerElem(self.tower, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, Integral):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = self.tower.one()
        k = abs(int(k))
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return not (self - other).terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def _coerce(self, other):
        if isinstance(other, TowerElem):
            if other.tower != self.tower:
                raise ArityError("Elements of different towers")
            return other
        if isinstance(other, (Integral, Fraction, CycloRat)) or hasattr(other, 'numer') or hasattr(other, 'ring'):
            return self.tower.const(other)
        return NotImplemented

    def inverse(self):
        '''
        The inverse in k(V).

        Raises
        ------
        ZeroDivisionError
            For the zero element.
        TowerInconsistency
            If the Euclidean algorithm meets a non-unit gcd, which cannot
            happen in a field.
        '''
        if not self.terms:
            raise ZeroDivisionError("Inverse of zero in k(V)")
        return _inverse(self, self.n)

    def apply_g(self, k=1):
        '''
        The action of g**k: y_i -> (-omega)**k y_i, x_i -> x_i.

        A basis monomial of total y-degree M is scaled by (-omega)**(k*M).
        '''
        field = self.tower.field
        if not field.contains_omega:
            raise FieldError("The action of g needs omega in the constants, {0} has none".format(field))
        eta = -field.omega()
        scales = [self.tower.coeffs.convert(eta ** j) for j in range(6)]
        return TowerElem(self.tower, {m: c * scales[(k * sum(m)) % 6] for m, c in self.terms.items()})

    def is_invariant(self):
        'True iff every basis monomial has total y-degree divisible by 6'
        return all(sum(m) % 6 == 0 for m in self.terms)

    def __str__(self):
        if not self.terms:
            return '0'
        parts = []
        for m in sorted(self.terms):
            mono = '*'.join('y{0}^{1}'.format(i + 1, e) if e > 1 else 'y{0}'.format(i + 1)
                            for i, e in enumerate(m) if e)
            coeff = str(self.terms[m])
            parts.append('({0})'.format(coeff) + ('*' + mono if mono else ''))
        return ' + '.join(parts)

    def __repr__(self):
        return "<TowerElem: {0} terms>".format(len(self.terms))


def _split(elem, level):
    'Coefficients of elem as a polynomial in y_level, lowest degree first'
    parts = [{} for _ in range(6)]
    i = level - 1
    for m, c in elem.terms.items():
        lowered = m[:i] + (0,) + m[i + 1:]
        parts[m[i]][lowered] = c
    tower = elem.tower
    return [TowerElem(tower, p) for p in parts]


def _join(coeffs, level, tower):
    terms = {}
    i = level - 1
    for j, c in enumerate(coeffs):
        for m, v in c.terms.items():
            terms[m[:i] + (j,) + m[i + 1:]] = v
    return TowerElem(tower, terms)


def _trim(u):
    u = list(u)
    while u and not u[-1]:
        u.pop()
    return u


def _inverse_monomial(elem):
    (m, c), = elem.terms.items()
    tower = elem.tower
    exponent = []
    coeff = 1 / c
    for i, e in enumerate(m):
        if e:
            exponent.append(6 - e)
            coeff = coeff / tower._relations[i]
        else:
            exponent.append(0)
    return TowerElem(tower, {tuple(exponent): coeff})


def _inverse(elem, level):
    if elem.is_monomial():
        return _inverse_monomial(elem)
    while level > 0 and not elem.involves(level):
        level -= 1
    if level == 0:
        # a sum of several constant terms cannot exist in normal form
        raise TowerInconsistency("Unexpected constant element with {0} terms".format(len(elem.terms)))

    tower = elem.tower
    zero = tower.zero()
    r0 = [-tower.relation(level), zero, zero, zero, zero, zero, tower.one()]
    r1 = _trim(_split(elem, level))
    s0, s1 = [], [tower.one()]
    while len(r1) > 1:
        q, rem = _divmod(r0, r1, level)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if not r1:
        raise TowerInconsistency("Element shares a factor with T**6 - x{0}**2 (x{0} - 1)".format(level))
    inv_c = _inverse(r1[0], level - 1)
    s1 = _reduce_mod_relation(s1, level, tower)
    return _join([c * inv_c for c in s1], level, tower)


def _divmod(f, g, level):
    inv = _inverse(g[-1], level - 1)
    q = [g[0].tower.zero()] * max(len(f) - len(g) + 1, 1)
    r = list(f)
    while len(r) >= len(g):
        shift = len(r) - len(g)
        c = r[-1] * inv
        q[shift] = c
        for i, gi in enumerate(g):
            r[shift + i] = r[shift + i] - c * gi
        r.pop()
        r = _trim(r)
    return q, r


def _poly_mul(f, g):
    if not f or not g:
        return []
    out = [f[0].tower.zero()] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if not a:
            continue
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return _trim(out)


def _poly_sub(f, g):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else None
        b = g[i] if i < len(g) else None
        if b is None:
            out.append(a)
        elif a is None:
            out.append(-b)
        else:
            out.append(a - b)
    return _trim(out)


def _reduce_mod_relation(u, level, tower):
    u = list(u)
    r = tower.relation(level)
    while len(u) > 6:
        top = u.pop()
        u[len(u) - 6] = u[len(u) - 6] + top * r
    return u


def invariant_generator_identity(tower, exponent):
    '''
    Check y**m = (x_1**2 (x_1 - 1))**k * t_2**m_2 ... t_n**m_n for sum(m) = 6k.

    >>> invariant_generator_identity(Tower(4), (1, 2, 0, 3))
    True
    '''
    exponent = tuple(exponent)
    if sum(exponent) % 6:
        raise ValueError("Total degree of {0} is not a multiple of 6".format(exponent))
    k = sum(exponent) // 6
    y1 = tower.y(1)
    lhs = tower.one()
    for i, e in enumerate(exponent, 1):
        lhs = lhs * tower.y(i) ** e
    rhs = tower.relation(1) ** k
    for i, e in enumerate(exponent[1:], 2):
        rhs = rhs * (tower.y(i) / y1) ** e
    return lhs == rhs


@attr.s(slots=True, frozen=True)
class TowerPoint(object):
    '''
    A point of V over F_p: y_i**6 = x_i**2 (x_i - 1) for every i.

    The point doubles as an arithmetic backend with the same ``x``, ``y`` and
    ``const`` interface as ``Tower``, so that formulas written once can be
    evaluated exactly or modulo p.
    '''

    field = attr.ib()
    xs = attr.ib(converter=tuple)
    ys = attr.ib(converter=tuple)

    @xs.validator
    def _check_curve(self, attribute, value):
        for x, y in zip(value, self.ys):
            if y ** 6 != x * x * (x - 1):
                raise FieldError("({0}, {1}) is not on y**6 = x**2 (x - 1)".format(x, y))

    @property
    def n(self):
        return len(self.xs)

    @property
    def p(self):
        return self.field.p

    @classmethod
    def sample(cls, n, field, rng):
        '''
        A random point of V(F_p) with every x_i outside {0, 1}.

        x_i is drawn until x_i**2 (x_i - 1) is a sixth power, and y_i is a
        random one of its six sixth roots.
        '''
        if not field.contains_omega:
            raise FieldError("Sampling V needs the sixth roots of unity of {0}".format(field))
        eta = -field.omega()
        xs, ys = [], []
        for _ in range(n):
            for _ in range(RETRY_BUDGET):
                x = field.random_element(rng, nonzero=True)
                if x == 1:
                    continue
                r = x * x * (x - 1)
                root = field.sqrt(r)
                root = None if root is None else field.cube_root(root)
                if root is not None:
                    break
            else:
                raise SpecializationError("No point of y**6 = x**2 (x - 1) found over {0}".format(field))
            xs.append(x)
            ys.append(root * eta ** int(rng.integers(0, 6)))
        return cls(field, xs, ys)

    def x(self, i):
        return self.xs[i - 1]

    def y(self, i):
        return self.ys[i - 1]

    def const(self, c):
        return self.field.convert(c)

    def relation(self, i):
        x = self.xs[i - 1]
        return x * x * (x - 1)

    def evaluate(self, elem):
        '''
        Value of a TowerElem at the point.

        Raises
        ------
        SpecializationError
            If a coefficient has a pole at the point.
        '''
        if elem.n != self.n:
            raise ArityError("Element of arity {0} at a point of arity {1}".format(elem.n, self.n))
        total = self.field.zero()
        for m, c in elem.terms.items():
            value = specialize(c, self.xs, self.field)
            for y, e in zip(self.ys, m):
                if e:
                    value = value * y ** e
            total = total + value
        return total

    def witness(self):
        return {'p': self.p,
                'omega': self.field.omega_value,
                'x': [int(v) for v in self.xs],
                'y': [int(v) for v in self.ys]}


@attr.s(slots=True, frozen=True)
class NonzeroCertificate(object):
    'Outcome of ``is_nonzero_witness``: the decision and an F_p point where the element is nonzero'

    nonzero = attr.ib()
    point = attr.ib(default=None)
    value = attr.ib(default=None)


def is_nonzero_witness(elem, rng, budget=RETRY_BUDGET, prime_range=None):
    '''
    Decide elem != 0 and look for a point of V(F_p) where it does not vanish.

    The decision is syntactic (the normal form is nonempty); the witness is a
    certificate that can be checked independently.
    '''
    if elem.is_zero():
        return NonzeroCertificate(False)
    low_high = () if prime_range is None else tuple(prime_range)
    for _ in range(budget):
        field = fp_with_omega(random_prime(rng, *low_high))
        point = TowerPoint.sample(elem.n, field, rng)
        try:
            value = point.evaluate(elem)
        except SpecializationError:
            continue
        if value:
            return NonzeroCertificate(True, point, value)
    warnings.warn("No nonvanishing point found within {0} samples".format(budget), SamplingWarning)
    return NonzeroCertificate(True)

