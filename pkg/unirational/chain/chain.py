# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

"""
The birational chain from k(V) down to the cubic surface fibration.

Starting from the curves y_i**6 = x_i**2 (x_i - 1), the chain introduces

* t_i = y_i / y_1,
* u_i = (x_1 / x_i) t_i**3,
* v_i = 1 / u_i and w_i = t_i / u_i,
* s_i = (v_i - 1) / (v_2 - 1) for i >= 3,

and every identity relating them is stored as a ``Relation`` whose ``build``
returns the relation with its denominators cleared, so that checking it means
testing an element for zero.

The formulas only use ``+``, ``-``, ``*``, ``/`` and integer powers of the
values ``backend.x(i)`` and ``backend.y(i)``. The same code therefore runs on
the exact ``Tower``, on a ``TowerPoint`` over F_p, and on ``DegreeBackend``,
which tracks degrees for the error bound of modular checks.
"""

from __future__ import absolute_import, division, print_function

from numbers import Integral

import attr

from ..fields import QQ_FIELD
from ..tower import Tower
from ..utils.errors import ArityError


@attr.s(slots=True, frozen=True)
class DegreeBound(object):
    '''
    Upper bounds for the total degrees of numerator and denominator.

    >>> x = DegreeBound(1)
    >>> (x * x + 1) / (x - 1)
    DegreeBound(num=2, den=1)
    '''

    num = attr.ib(default=0)
    den = attr.ib(default=0)

    @staticmethod
    def _coerce(other):
        if isinstance(other, DegreeBound):
            return other
        if isinstance(other, Integral):
            return DegreeBound(0, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == 0 and other.den == 0:
            return DegreeBound(max(self.num, other.num), 0)
        return DegreeBound(max(self.num + other.den, other.num + self.den), self.den + other.den)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return DegreeBound(self.num + other.num, self.den + other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return DegreeBound(self.num + other.den, self.den + other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k):
        if k < 0:
            return DegreeBound(self.den * -k, self.num * -k)
        return DegreeBound(self.num * k, self.den * k)


@attr.s(slots=True, frozen=True)
class DegreeBackend(object):
    'Every x_i and y_i has degree 1'

    n = attr.ib()

    def x(self, i):
        return DegreeBound(1)

    def y(self, i):
        return DegreeBound(1)

    def const(self, c):
        return DegreeBound(0)


@attr.s(slots=True, frozen=True)
class ChainEnv(object):
    '''
    The named elements t_i, u_i, v_i, w_i and s_i over one backend.

    Use ``build_env`` for the exact environment.
    '''

    backend = attr.ib()
    t = attr.ib()
    u = attr.ib()
    v = attr.ib()
    w = attr.ib()
    s = attr.ib()

    @classmethod
    def build(cls, backend):
        n = backend.n
        inv_y1 = 1 / backend.y(1)
        x1 = backend.x(1)
        t = {i: backend.y(i) * inv_y1 for i in range(2, n + 1)}
        u = {i: x1 / backend.x(i) * t[i] ** 3 for i in range(2, n + 1)}
        v = {i: 1 / u[i] for i in range(2, n + 1)}
        w = {i: t[i] * v[i] for i in range(2, n + 1)}
        inv_v2 = 1 / (v[2] - 1)
        s = {i: (v[i] - 1) * inv_v2 for i in range(3, n + 1)}
        return cls(backend, t, u, v, w, s)

    @property
    def n(self):
        return self.backend.n

    @property
    def exact(self):
        return isinstance(self.backend, Tower)

    def x(self, i):
        return self.backend.x(i)

    def y(self, i):
        return self.backend.y(i)

    def const(self, c):
        return self.backend.const(c)

    def r(self, i):
        'x_i**2 (x_i - 1)'
        x = self.backend.x(i)
        return x ** 2 * (x - 1)

    def W(self, i):
        'w_i**3 - 1'
        return self.w[i] ** 3 - 1

    def elements(self):
        'All named elements, keyed by name, in a fixed order'
        out = {}
        for label in 'tuvws':
            for i, value in sorted(getattr(self, label).items()):
                out['{0}{1}'.format(label, i)] = value
        return out


def build_env(n=4, field=QQ_FIELD):
    '''
    The exact environment over k(V).

    >>> env = build_env(4)
    >>> env.t[2].is_invariant()
    True
    >>> env.v[2] * env.u[2] == 1
    True
    '''
    return ChainEnv.build(Tower(n, field))


@attr.s(slots=True, frozen=True)
class Relation(object):
    '''
    A named identity. ``build(env)`` returns its cleared form, which must vanish.
    '''

    name = attr.ib()
    anchor = attr.ib()
    build = attr.ib(repr=False)
    arity = attr.ib(default=4)


def _lemma1(i):
    return Relation('lemma1.t{0}'.format(i), 'Lemma 1',
                    lambda e: e.t[i] ** 6 * e.r(1) - e.r(i))


def _lemma2(i):
    def build(e):
        u, x1 = e.u[i], e.x(1)
        return u * (u ** 2 * (x1 - 1) + 1) - x1 * e.t[i] ** 3
    return Relation('lemma2.u{0}'.format(i), 'Lemma 2', build)


def _lemma3(j):
    def build(e):
        u2, uj = e.u[2], e.u[j]
        return (u2 - e.t[2] ** 3) * (uj ** 3 - uj) - (uj - e.t[j] ** 3) * (u2 ** 3 - u2)
    return Relation('lemma3.u2_u{0}'.format(j), 'Lemma 3', build)


def _lemma4(i):
    def build(e):
        return (e.v[i] ** 2 - 1) * e.W(2) - (e.v[2] ** 2 - 1) * e.W(i)
    return Relation('lemma4.v{0}'.format(i), 'Lemma 4', build)


def _fibration(j, k, name, anchor, arity):
    def build(e):
        sj, sk = e.s[j], e.s[k]
        return (sj - sk) * sj * sk * e.W(2) - (sj - 1) * sj * e.W(k) + (sk - 1) * sk * e.W(j)
    return Relation(name, anchor, build, arity)


def lemma_relations(which, n=4):
    '''
    The relations of one lemma, for the indices available at arity n.

    >>> [r.name for r in lemma_relations(3)]
    ['lemma3.u2_u3', 'lemma3.u2_u4']
    '''
    if which == 1:
        return [_lemma1(i) for i in range(2, n + 1)]
    if which == 2:
        return [_lemma2(i) for i in range(2, n + 1)]
    if which == 3:
        return [_lemma3(j) for j in range(3, n + 1)]
    if which == 4:
        return [_lemma4(i) for i in range(3, n + 1)]
    if which == 5:
        return [_fibration(3, 4, 'lemma5', 'Lemma 5', 4)]
    raise ValueError("There is no Lemma {0}; choose 1 to 5".format(which))


def _v2_from_s(j):
    def build(e):
        sj, W2, Wj = e.s[j], e.W(2), e.W(j)
        return (e.v[2] - 1) * (sj ** 2 * W2 - Wj) - 2 * (-sj * W2 + Wj)
    return Relation('roundtrip.v2_from_s{0}'.format(j), 'Lemma 5 (back-substitution)', build)


def roundtrip_relations(n=4):
    '''
    The back-substitutions of the proofs: x_1, then x_i, v_2, v_i, u_i and t_i
    are recovered from the generators.
    '''
    rels = []

    def x1_from_u2(e):
        u2, x1 = e.u[2], e.x(1)
        return (1 - x1) * (u2 ** 3 - u2) - x1 * (u2 - e.t[2] ** 3)

    rels.append(Relation('roundtrip.x1', 'Lemma 3 (back-substitution)', x1_from_u2))
    for i in range(2, n + 1):
        rels.append(Relation('roundtrip.x{0}'.format(i), 'Lemma 2 (back-substitution)',
                             lambda e, i=i: e.x(i) - (e.u[i] ** 2 * (e.x(1) - 1) + 1)))
        rels.append(Relation('roundtrip.u{0}'.format(i), 'Lemma 4 (back-substitution)',
                             lambda e, i=i: e.u[i] * e.v[i] - 1))
        rels.append(Relation('roundtrip.t{0}'.format(i), 'Lemma 4 (back-substitution)',
                             lambda e, i=i: e.t[i] * e.v[i] - e.w[i]))
    for j in range(3, n + 1):
        rels.append(Relation('roundtrip.v{0}'.format(j), 'Lemma 5 (back-substitution)',
                             lambda e, j=j: e.v[j] - 1 - e.s[j] * (e.v[2] - 1)))
        rels.append(_v2_from_s(j))
    return rels


def n5_relations():
    '''
    The two bidegree (3, 3) relations of the five-curve fibration.

    >>> [r.name for r in n5_relations()]
    ['n5.relation1', 'n5.relation2']
    '''
    return [_fibration(3, 4, 'n5.relation1', 'n = 5 relations', 5),
            _fibration(3, 5, 'n5.relation2', 'n = 5 relations', 5)]


def side_conditions(env):
    '''
    The elements the proofs divide by or assume nonzero, keyed by name.
    '''
    out = {}
    for i in range(2, env.n + 1):
        u = env.u[i]
        out['u{0}'.format(i)] = u
        out['u{0}^3-u{0}'.format(i)] = u ** 3 - u
        out['v{0}-1'.format(i)] = env.v[i] - 1
        out['t{0}^3'.format(i)] = env.t[i] ** 3
    out['w2^3-1'] = env.W(2)
    for i in range(3, env.n + 1):
        out['-s{0}^2(w2^3-1)+(w{0}^3-1)'.format(i)] = -env.s[i] ** 2 * env.W(2) + env.W(i)
    return out


def mutate(relation, rng, n=4):
    '''
    The relation plus a random nonzero term c or c*x_i, which no longer vanishes.
    '''
    c = int(rng.choice([-3, -2, -1, 1, 2, 3]))
    i = int(rng.integers(0, n + 1))

    def build(e):
        term = e.const(c) if i == 0 else c * e.x(i)
        return relation.build(e) + term

    return Relation('mutated.' + relation.name, relation.anchor, build, relation.arity)


def relation_degree(relation, n):
    'Degree bound of the cleared relation in the x and y coordinates'
    if relation.arity > n:
        raise ArityError("{0} needs arity {1}".format(relation.name, relation.arity))
    bound = relation.build(ChainEnv.build(DegreeBackend(n)))
    return bound.num


def error_bound(degree, primes):
    '''
    Probability bound prod(min(1, D/p)) that a nonzero relation of degree D
    vanishes at every sampled point, treating each sample as uniform.

    >>> error_bound(10, [20, 40])
    0.125
    '''
    bound = 1.0
    for p in primes:
        bound *= min(1.0, degree / p)
    return bound
