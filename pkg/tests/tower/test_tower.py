# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

import numpy as np
import pytest

from unirational.fields import CycloRat
from unirational.fields import QQ_OMEGA
from unirational.fields import fp_with_omega
from unirational.tower import Tower
from unirational.tower import TowerPoint
from unirational.tower import invariant_generator_identity
from unirational.tower import is_nonzero_witness
from unirational.utils.errors import ArityError
from unirational.utils.errors import FieldError
from unirational.utils.errors import SpecializationError


V = Tower(4)
y1, y2, y3, y4 = (V.y(i) for i in range(1, 5))
x1, x2, x3, x4 = (V.x(i) for i in range(1, 5))


def _random_elem(tower, rng, terms=3, levels=2):
    elem = tower.zero()
    for _ in range(terms):
        exponent = [0] * tower.n
        for i in range(levels):
            exponent[i] = int(rng.integers(0, 6))
        c = int(rng.integers(-5, 6))
        if rng.random() < 0.3:
            c = c * tower.x(int(rng.integers(1, levels + 1)))
        elem = elem + tower.monomial(exponent) * c
    return elem


def test_arity():
    with pytest.raises(ArityError):
        Tower(3)
    with pytest.raises(ArityError):
        V.y(5)
    with pytest.raises(ArityError):
        y1 + Tower(5).y(1)


def test_relation_reduces():
    assert y1 * y1**5 == V.relation(1)
    assert (y1**3)**2 == x1**2 * (x1 - 1)
    assert (y1 * y2).support() == [(1, 1, 0, 0)]
    assert V.monomial((7, 0, 0, 0)) == V.relation(1) * y1


def test_normal_form():
    assert (y1 + y2) - y2 == y1
    assert not (y1 * y2 - y2 * y1)
    assert (y1 * x1 + y1 * x2).coefficient((1, 0, 0, 0)) == (x1 + x2).coefficient((0, 0, 0, 0))
    assert (y1 - y1).is_zero()


def test_inverse_examples():
    assert y1.inverse() == y1**5 / V.relation(1)
    assert y1.inverse().support() == [(5, 0, 0, 0)]
    assert x1.inverse() * x1 == 1
    t2 = y2 / y1
    assert t2.inverse() * t2 == 1
    assert t2.inverse() == y1 / y2


def test_inverse_of_binomials():
    for elem in [y1 - 1, y1 + y2, y1**2 * y3 - x4]:
        assert elem * elem.inverse() == 1


def test_inverse_random():
    rng = np.random.default_rng(20200101)
    checked = 0
    while checked < 50:
        elem = _random_elem(V, rng)
        if elem.is_zero():
            continue
        assert elem * elem.inverse() == 1
        checked += 1


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        V.zero().inverse()
    with pytest.raises(ZeroDivisionError):
        y1 / (y2 - y2)


def test_negative_powers():
    assert y1**-2 * y1**2 == 1
    assert (y1 + 1)**-1 == 1 / (y1 + 1)


def test_is_invariant_examples():
    assert (y2 / y1).is_invariant()
    assert not y1.is_invariant()
    assert x1.is_invariant()
    assert (y1 * y2 * y3 * y4 * y1 * y2).is_invariant()


def test_apply_g():
    W = Tower(4, QQ_OMEGA)
    w = CycloRat(0, 1)
    z1, z2 = W.y(1), W.y(2)
    assert z1.apply_g(1) == -w * z1
    rng = np.random.default_rng(3)
    for _ in range(5):
        elem = _random_elem(W, rng)
        assert elem.apply_g(6) == elem
        assert elem.apply_g(2).apply_g(4) == elem
        assert (elem.apply_g(1) == elem) == elem.is_invariant()
    assert (z2 / z1).apply_g(1) == z2 / z1
    assert (z1 * z2 * W.y(3) * W.y(4) * z1 * z2).apply_g(1) == z1**2 * z2**2 * W.y(3) * W.y(4)


def test_apply_g_needs_omega():
    with pytest.raises(FieldError):
        y1.apply_g(1)


@pytest.mark.parametrize("exponent", [(6, 0, 0, 0), (1, 2, 0, 3), (0, 0, 5, 1), (3, 3, 3, 3), (5, 5, 1, 1)])
def test_invariant_generators(exponent):
    assert invariant_generator_identity(V, exponent)


def test_invariant_generators_needs_multiple_of_six():
    with pytest.raises(ValueError):
        invariant_generator_identity(V, (1, 0, 0, 0))


def test_tower_point_is_on_curves():
    rng = np.random.default_rng(8)
    F = fp_with_omega(10009)
    point = TowerPoint.sample(4, F, rng)
    for i in range(1, 5):
        x = point.x(i)
        assert point.y(i) ** 6 == x * x * (x - 1)
        assert x != 0 and x != 1
    assert point.witness()['p'] == 10009


def test_tower_point_rejects_off_curve():
    F = fp_with_omega(7)
    with pytest.raises(FieldError):
        TowerPoint(F, [F.convert(3)], [F.convert(1)])


def test_evaluation_is_a_homomorphism():
    rng = np.random.default_rng(12)
    F = fp_with_omega(100003)
    for _ in range(5):
        point = TowerPoint.sample(4, F, rng)
        a, b = _random_elem(V, rng), _random_elem(V, rng)
        try:
            assert point.evaluate(a * b) == point.evaluate(a) * point.evaluate(b)
            assert point.evaluate(a + b) == point.evaluate(a) + point.evaluate(b)
            if a and point.evaluate(a):
                assert point.evaluate(a.inverse()) == 1 / point.evaluate(a)
        except SpecializationError:
            continue


def test_exact_identity_holds_modulo_p():
    rng = np.random.default_rng(14)
    F = fp_with_omega(10009)
    point = TowerPoint.sample(4, F, rng)
    t2 = y2 / y1
    value = point.evaluate(t2**6 * V.relation(1) - V.relation(2))
    assert value == 0


def test_nonzero_witness():
    rng = np.random.default_rng(1)
    certificate = is_nonzero_witness(y1 - y2, rng)
    assert certificate.nonzero
    assert certificate.point.evaluate(y1 - y2) == certificate.value
    assert certificate.value != 0

    u = y1**3 / x1 - 1
    assert is_nonzero_witness(u, rng).nonzero
    assert not is_nonzero_witness(u - u, rng).nonzero
