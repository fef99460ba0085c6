# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

from fractions import Fraction

import numpy as np
import pytest

from unirational.fields import CycloRat
from unirational.fields import PrimeFieldElem
from unirational.fields import Decision
from unirational.fields import combine_all
from unirational.fields import fp_with_omega
from unirational.fields import prime_field
from unirational.fields import rational_is_cube
from unirational.fields import rational_cube_root
from unirational.fields import QQ_FIELD
from unirational.fields import QQ_OMEGA
from unirational.utils.errors import FieldError
from unirational.utils.errors import SpecializationError


def test_omega_relations():
    w = CycloRat(0, 1)
    assert w * w * w == 1
    assert 1 + w + w ** 2 == 0
    assert w ** -1 == w ** 2


def test_eta_is_a_sixth_root_of_unity():
    eta = -CycloRat(0, 1)
    assert eta ** 6 == 1
    assert eta ** 3 == -1
    assert eta ** 2 != 1


def test_cyclorat_normal_form():
    x = CycloRat(Fraction(2, -4), 3)
    assert x.a == Fraction(-1, 2)
    assert x.a.denominator == 2
    assert str(x) == '-1/2 + 3*omega'
    assert str(CycloRat(1, -2)) == '1 - 2*omega'
    assert str(CycloRat(0, -1)) == '-omega'
    assert repr(CycloRat(5)) == '<CycloRat: 5>'


def test_cyclorat_inverse():
    x = CycloRat(3, -7)
    assert x * x.inverse() == 1
    assert x / x == 1
    assert 1 / x == x.inverse()
    with pytest.raises(ZeroDivisionError):
        CycloRat(0).inverse()


def test_cyclorat_hash_matches_rationals():
    assert hash(CycloRat(Fraction(1, 3))) == hash(Fraction(1, 3))
    assert CycloRat(2) == 2
    assert len({CycloRat(1, 1), CycloRat(1, 1), CycloRat(1)}) == 2


def test_cyclorat_rejects_floats():
    with pytest.raises(TypeError):
        CycloRat(0.5)


@pytest.mark.parametrize("p,roots", [(7, {2, 4}), (13, {3, 9}), (31, {5, 25})])
def test_fp_with_omega(p, roots):
    F = fp_with_omega(p)
    assert F.omega_value in roots
    assert F.omega_value == min(roots)
    assert fp_with_omega(p, choice=1).omega_value == max(roots)
    w = F.omega()
    assert w ** 3 == 1
    assert w != 1
    assert w * w + w + 1 == 0


@pytest.mark.parametrize("p", [5, 11, 2, 3, 9, 91])
def test_fp_with_omega_rejects(p):
    with pytest.raises(FieldError):
        fp_with_omega(p)


def test_fp_with_omega_random_choice_is_seeded():
    a = fp_with_omega(10009, np.random.default_rng(3)).omega_value
    b = fp_with_omega(10009, np.random.default_rng(3)).omega_value
    assert a == b


def test_prime_field_elem():
    x = PrimeFieldElem(3, 7)
    assert x * 5 == 1
    assert (1 / x).value == 5
    assert x ** -1 == PrimeFieldElem(5, 7)
    assert x - 4 == 6
    assert 2 - x == PrimeFieldElem(6, 7)
    assert x + Fraction(1, 2) == PrimeFieldElem(0, 7)
    assert int(x) == 3
    with pytest.raises(FieldError):
        PrimeFieldElem(8, 7)
    with pytest.raises(FieldError):
        x + PrimeFieldElem(1, 11)
    with pytest.raises(ZeroDivisionError):
        PrimeFieldElem(0, 7).inverse()
    with pytest.raises(SpecializationError):
        x + Fraction(1, 7)


@pytest.mark.parametrize("c,expected", [(Fraction(27, 8), True),
                                        (-8, True),
                                        (2, False),
                                        (Fraction(1, 4), False),
                                        (Fraction(-1, 1000), True)])
def test_rational_is_cube(c, expected):
    assert rational_is_cube(c) == expected


def test_rational_is_cube_zero():
    with pytest.raises(FieldError):
        rational_is_cube(0)


def test_rational_cube_root():
    assert rational_cube_root(Fraction(-27, 8)) == Fraction(-3, 2)
    assert rational_cube_root(0) == 0
    assert rational_cube_root(Fraction(9, 8)) is None


def _sampled_fields():
    return [QQ_FIELD, QQ_OMEGA, fp_with_omega(7), fp_with_omega(10009)]


@pytest.mark.parametrize("F", _sampled_fields(), ids=str)
def test_field_axioms(F):
    rng = np.random.default_rng(20200101)
    for _ in range(25):
        x, y, z = (F.random_element(rng) for _ in range(3))
        assert F.eq((x + y) + z, x + (y + z))
        assert F.eq((x * y) * z, x * (y * z))
        assert F.eq(x * (y + z), x * y + x * z)
        assert F.eq(x + F.neg(x), F.zero())
        assert F.eq(x * F.one(), x)
        if not F.is_zero(x):
            assert F.eq(F.inv(x) * x, F.one())
    with pytest.raises(ZeroDivisionError):
        F.inv(F.zero())


@pytest.mark.parametrize("F", [QQ_OMEGA, fp_with_omega(7), fp_with_omega(10009)], ids=str)
def test_omega_minimal_polynomial(F):
    w = F.omega()
    assert F.is_zero(w * w + w + 1)


def test_rationals_have_no_omega():
    with pytest.raises(FieldError):
        QQ_FIELD.omega()


def test_reduction_is_a_homomorphism():
    rng = np.random.default_rng(7)
    F = fp_with_omega(10009)
    for _ in range(50):
        x = QQ_OMEGA.random_element(rng)
        y = QQ_OMEGA.random_element(rng)
        assert F.reduce(x + y) == F.reduce(x) + F.reduce(y)
        assert F.reduce(x * y) == F.reduce(x) * F.reduce(y)
    assert F.reduce(CycloRat(0, 1)) == F.omega()


def test_reduction_vanishing_denominator():
    F = fp_with_omega(7)
    with pytest.raises(SpecializationError):
        F.reduce(Fraction(1, 14))


def test_cyclotomic_domain_round_trip():
    for x in [CycloRat(0, 1), CycloRat(Fraction(1, 2), -3), CycloRat(7)]:
        assert QQ_OMEGA.from_domain(QQ_OMEGA.to_domain(x)) == x
    w = QQ_OMEGA.to_domain(QQ_OMEGA.omega())
    assert w ** 3 == QQ_OMEGA.domain.one


def test_cube_decisions():
    assert QQ_FIELD.is_cube(-8) is Decision.yes
    assert QQ_FIELD.is_cube(2) is Decision.no
    assert QQ_OMEGA.is_cube(CycloRat(27)) is Decision.yes
    assert QQ_OMEGA.is_cube(CycloRat(1, 1)) is Decision.unknown
    F = fp_with_omega(7)
    # the cubes in GF(7)* are {1, 6}
    assert [F.is_cube(v) for v in range(1, 7)] == [Decision.yes, Decision.no, Decision.no,
                                                  Decision.no, Decision.no, Decision.yes]
    r = F.cube_root(6)
    assert r ** 3 == 6
    assert F.cube_root(2) is None


def test_prime_field_sqrt():
    F = fp_with_omega(13)
    r = F.sqrt(10)
    assert r * r == 10
    assert F.sqrt(2) is None


def test_combine_all():
    assert combine_all([Decision.yes, Decision.yes]) is Decision.yes
    assert combine_all([Decision.yes, Decision.unknown]) is Decision.unknown
    assert combine_all([Decision.unknown, Decision.no]) is Decision.no
    assert combine_all([]) is Decision.yes


def test_prime_field_without_omega():
    F = prime_field(10007)
    assert F.characteristic == 10007
    assert F.reduce(Fraction(1, 2)) * 2 == 1
    assert F.reduce(CycloRat(3)) == 3
    with pytest.raises(FieldError):
        F.omega()
    with pytest.raises(FieldError):
        prime_field(10005)
