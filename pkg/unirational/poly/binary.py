# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

"""
Binary forms over any field of the field contract.

A binary form of degree d is the list ``form`` of its d+1 coefficients, with
``form[k]`` the coefficient of alpha**(d-k) * beta**k. Setting beta = 1 gives
the univariate polynomial ``u`` (lowest degree first) with u[j] = form[d-j];
the point (1 : 0) is a root of multiplicity equal to the number of leading
zero coefficients of the form.

Examples
--------
>>> from fractions import Fraction
>>> from unirational.fields import QQ_FIELD
>>> form = [Fraction(c) for c in (1, 0, -1)]   # alpha**2 - beta**2
>>> sorted(r for (r, _), m in binary_form_roots(form, QQ_FIELD))
[Fraction(-1, 1), Fraction(1, 1)]
"""

from __future__ import absolute_import, division, print_function

from sympy import ring
from sympy.polys.orderings import grlex

from .poly import FunctionField
from .poly import _rational_descent
from .poly import _rational_ascent
from ..fields import PrimeField
from ..fields import QQ_OMEGA
from ..utils.errors import FieldError
from ..utils.errors import InexactDivisionError


def trim(u, field):
    'Drop vanishing top coefficients of a univariate coefficient list'
    u = list(u)
    while u and field.is_zero(u[-1]):
        u.pop()
    return u


def udivmod(f, g, field):
    'Quotient and remainder of univariate coefficient lists'
    f, g = trim(f, field), trim(g, field)
    if not g:
        raise ZeroDivisionError("Univariate division by zero")
    q = [field.zero()] * max(len(f) - len(g) + 1, 0)
    r = list(f)
    inv = field.inv(g[-1])
    while len(r) >= len(g):
        shift = len(r) - len(g)
        c = r[-1] * inv
        q[shift] = c
        for i, gi in enumerate(g):
            r[shift + i] = r[shift + i] - c * gi
        r.pop()
        r = trim(r, field)
    return q, r


def ugcd(f, g, field):
    'Monic gcd of univariate coefficient lists (the empty list for gcd(0, 0))'
    f, g = trim(f, field), trim(g, field)
    while g:
        f, g = g, udivmod(f, g, field)[1]
    if not f:
        return f
    inv = field.inv(f[-1])
    return [c * inv for c in f]


def leading_zeros(form, field):
    k = 0
    while k < len(form) and field.is_zero(form[k]):
        k += 1
    return k


def dehomogenize(form):
    'The univariate polynomial form(t, 1), lowest degree first'
    return list(reversed(form))


def homogenize(u, degree, field):
    'The binary form of the given degree whose dehomogenization is u'
    u = trim(u, field)
    if len(u) > degree + 1:
        raise ValueError("Polynomial of degree {0} in a form of degree {1}".format(len(u) - 1, degree))
    u = u + [field.zero()] * (degree + 1 - len(u))
    return list(reversed(u))


def is_zero_form(form, field):
    return all(field.is_zero(c) for c in form)


def evaluate_form(form, alpha, beta):
    d = len(form) - 1
    total = None
    for k, c in enumerate(form):
        term = c * alpha ** (d - k) * beta ** k
        total = term if total is None else total + term
    return total


def form_degree(form, field):
    'Actual degree of the form, counting the root at (1 : 0): len(form) - 1 unless zero'
    return -1 if is_zero_form(form, field) else len(form) - 1


def binary_form_gcd(f, g, field):
    '''
    Monic gcd of two binary forms, as a form of its own degree.

    >>> from fractions import Fraction
    >>> from unirational.fields import QQ_FIELD
    >>> f = [Fraction(c) for c in (1, 0, -1)]     # (alpha - beta)(alpha + beta)
    >>> g = [Fraction(c) for c in (1, -1, 0)]     # alpha (alpha - beta)
    >>> binary_form_gcd(f, g, QQ_FIELD)
    [Fraction(1, 1), Fraction(-1, 1)]
    '''
    if is_zero_form(f, field):
        return list(g)
    if is_zero_form(g, field):
        return list(f)
    k = min(leading_zeros(f, field), leading_zeros(g, field))
    h = ugcd(dehomogenize(f), dehomogenize(g), field)
    return homogenize(h, len(h) - 1 + k, field)


def binary_form_divide(f, g, field):
    'The exact quotient f/g of two binary forms'
    df, dg = len(f) - 1, len(g) - 1
    if dg > df or leading_zeros(g, field) > leading_zeros(f, field):
        raise InexactDivisionError("Form does not divide")
    q, r = udivmod(dehomogenize(f), dehomogenize(g), field)
    if r:
        raise InexactDivisionError("Form does not divide")
    return homogenize(q, df - dg, field)


def binary_form_mul(f, g, field):
    out = [field.zero()] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return out


def binary_form_roots(form, field):
    '''
    The roots (alpha : beta) of a binary form that are defined over ``field``.

    Returns a list of ((alpha, beta), multiplicity), the root at infinity
    (1 : 0) first when present. A form of degree d has at most d roots counted
    with multiplicity; fewer are returned when some linear factors are not
    defined over the field.
    '''
    if is_zero_form(form, field):
        raise ValueError("The zero form vanishes everywhere")
    roots = []
    k = leading_zeros(form, field)
    if k:
        roots.append(((field.one(), field.zero()), k))
    u = trim(dehomogenize(form), field)
    if len(u) > 1:
        roots.extend(((r, field.one()), m) for r, m in linear_factor_roots(u, field))
    return roots


def linear_factor_roots(u, field):
    'Roots in ``field`` of a univariate polynomial, with multiplicity'
    if isinstance(field, FunctionField):
        return _function_field_roots(u, field)
    R, t = ring('t', field.domain, grlex)
    f = R.from_dict({(j,): field.to_domain(c) for j, c in enumerate(u) if not field.is_zero(c)})
    roots = []
    for g, m in f.factor_list()[1]:
        if g.degree() == 1:
            a1 = g.coeff(t)
            a0 = g.coeff(1)
            roots.append((field.from_domain(-a0 / a1), m))
    return roots


def _function_field_roots(u, K):
    if isinstance(K.base, PrimeField):
        raise FieldError("Factoring over {0} is not supported".format(K))
    nums = [K.numer_denom(c) for c in u]
    common = K.ring.one
    for _, den in nums:
        common = common * den
    polys = [num * common.exquo(den) if num else K.ring.zero for num, den in nums]

    names = list(K.names) + ['_t']
    R = ring(','.join(names), K.base.domain, grlex)[0]
    terms = {}
    for j, c in enumerate(polys):
        for m, coeff in c.terms():
            terms[m + (j,)] = coeff
    f = R.from_dict(terms)

    rational = _rational_descent(f) if K.base == QQ_OMEGA else None
    if K.base == QQ_OMEGA and rational is not None:
        factors = [(_rational_ascent(g, R), m) for g, m in rational.factor_list()[1]]
    else:
        factors = f.factor_list()[1]

    roots = []
    for g, m in factors:
        if g.degree(R.gens[-1]) != 1:
            continue
        a0 = K.ring.from_dict({mon[:-1]: c for mon, c in g.terms() if mon[-1] == 0})
        a1 = K.ring.from_dict({mon[:-1]: c for mon, c in g.terms() if mon[-1] == 1})
        roots.append((K.new(-a0, a1), m))
    return roots


def form_from_coefficients(coeffs, field):
    return [field.convert(c) for c in coeffs]

