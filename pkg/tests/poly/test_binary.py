# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

from fractions import Fraction

import pytest

from unirational.fields import CycloRat
from unirational.fields import QQ_FIELD
from unirational.fields import QQ_OMEGA
from unirational.fields import fp_with_omega
from unirational.poly import FunctionField
from unirational.poly.binary import binary_form_divide
from unirational.poly.binary import binary_form_gcd
from unirational.poly.binary import binary_form_mul
from unirational.poly.binary import binary_form_roots
from unirational.poly.binary import evaluate_form
from unirational.poly.binary import form_from_coefficients
from unirational.utils.errors import InexactDivisionError


def _qq(*coeffs):
    return form_from_coefficients(coeffs, QQ_FIELD)


def test_roots_with_infinity():
    # beta * (alpha - 2 beta)**2 = alpha**2 beta - 4 alpha beta**2 + 4 beta**3
    roots = binary_form_roots(_qq(0, 1, -4, 4), QQ_FIELD)
    assert roots[0] == ((1, 0), 1)
    assert roots[1] == ((2, 1), 2)


def test_irreducible_quadratic_has_no_rational_roots():
    assert binary_form_roots(_qq(1, 0, 1), QQ_FIELD) == []


def test_cube_roots_of_unity_split_over_omega():
    # alpha**3 - beta**3 splits over Q(omega)
    form = form_from_coefficients([1, 0, 0, -1], QQ_OMEGA)
    roots = {r for (r, _), _ in binary_form_roots(form, QQ_OMEGA)}
    w = CycloRat(0, 1)
    assert roots == {CycloRat(1), w, w * w}
    assert len(binary_form_roots(_qq(1, 0, 0, -1), QQ_FIELD)) == 1


def test_roots_over_prime_field():
    F = fp_with_omega(7)
    form = form_from_coefficients([1, 0, 0, -1], F)
    roots = {int(r) for (r, _), _ in binary_form_roots(form, F)}
    assert roots == {1, 2, 4}


def test_roots_over_function_field():
    K = FunctionField(QQ_FIELD, ['s'])
    s, = K.gens
    form = [K.one(), K.zero(), -s**2]
    roots = [r for (r, _), _ in binary_form_roots(form, K)]
    assert len(roots) == 2
    assert K.is_zero(roots[0] + roots[1])
    assert K.is_zero(roots[0]**2 - s**2)


def test_gcd_and_division():
    f = binary_form_mul(_qq(1, -1), _qq(1, 0, 1), QQ_FIELD)
    g = binary_form_mul(_qq(1, -1), _qq(0, 1), QQ_FIELD)
    h = binary_form_gcd(f, g, QQ_FIELD)
    assert h == _qq(1, -1)
    assert binary_form_divide(f, h, QQ_FIELD) == _qq(1, 0, 1)
    with pytest.raises(InexactDivisionError):
        binary_form_divide(f, _qq(0, 1), QQ_FIELD)


def test_gcd_keeps_common_root_at_infinity():
    f = _qq(0, 1, 1)     # beta (alpha + beta)
    g = _qq(0, 0, 1)     # beta**2
    assert binary_form_gcd(f, g, QQ_FIELD) == _qq(0, 1)


def test_evaluate_form():
    assert evaluate_form(_qq(1, 0, -1), Fraction(3), Fraction(2)) == 5
