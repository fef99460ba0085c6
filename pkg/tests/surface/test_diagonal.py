# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

from fractions import Fraction

import numpy as np
import pytest

from unirational.fields import CycloRat
from unirational.fields import Decision
from unirational.fields import QQ_FIELD
from unirational.fields import QQ_OMEGA
from unirational.fields import fp_with_omega
from unirational.poly import FunctionField
from unirational.surface import DiagonalCubic
from unirational.surface import Rationality
from unirational.surface import SDPattern
from unirational.surface import eckardt_points
from unirational.surface import eckardt_table
from unirational.surface import fibration_surface
from unirational.surface import k_rational_lines
from unirational.surface import lines27
from unirational.surface import lines_disjoint
from unirational.surface import random_split_cubic
from unirational.surface import rationality_test
from unirational.surface import swinnerton_dyer_pattern
from unirational.surface import unit_points
from unirational.utils.errors import ArityError
from unirational.utils.errors import NotOnSurfaceError
from unirational.utils.errors import SingularSurfaceError

FERMAT = DiagonalCubic((1, 1, 1, 1), QQ_OMEGA)
OMEGA = CycloRat(0, 1)


def test_smoothness():
    assert FERMAT.is_smooth()
    singular = DiagonalCubic((1, 1, 1, 0), QQ_OMEGA)
    assert not singular.is_smooth()
    with pytest.raises(SingularSurfaceError):
        lines27(singular)
    with pytest.raises(ArityError):
        DiagonalCubic((1, 1, 1))


def test_fibration_surface():
    S = fibration_surface()
    s3, s4 = S.field.gens
    assert S.is_smooth()
    assert S.is_shifted
    a, b, c = (s3 - s4) * s3 * s4, -(s3 - 1) * s3, (s4 - 1) * s4
    assert S.coeffs == (a, b, c, -(a + b + c))
    assert S.check_point((1, 1, 1)) == (1, 1, 1, 1)
    assert S.contains((1, 1, 1, 1))


def test_unit_points():
    S = fibration_surface()
    points = unit_points(S)
    assert len(points) == 27
    assert all(S.contains(p) for p in points)
    assert not any(S.is_eckardt_point(p) for p in points)
    with pytest.raises(NotOnSurfaceError):
        unit_points(FERMAT)


def test_specialize_fibration():
    S = fibration_surface().specialize([2, 3])
    assert S.field == QQ_FIELD
    assert S.coeffs == (-6, -2, 6, 2)
    F = fp_with_omega(10009)
    assert fibration_surface().specialize([2, 3], F).coeffs == tuple(F.convert(c) for c in (-6, -2, 6, 2))


def test_fermat_lines():
    config = lines27(FERMAT)
    assert len(config) == 27
    assert all(line.on_surface() for line in config)
    assert all(line.rational is Decision.yes for line in config)
    slopes = {line.lam.in_base() for line in config} | {line.mu.in_base() for line in config}
    assert slopes == {CycloRat(-1), -OMEGA, -OMEGA ** 2}
    assert config.meeting_counts() == [10] * 27


def test_disjointness():
    config = lines27(FERMAT)
    partition = ((0, 1), (2, 3))
    first = config.line(partition, (0, 0))
    assert not lines_disjoint(first, first)
    assert lines_disjoint(first, config.line(partition, (1, 1)))
    assert not lines_disjoint(first, config.line(partition, (0, 1)))
    other = config.groups[((0, 2), (1, 3))]
    assert sum(1 for line in other if not lines_disjoint(first, line)) == 3


def test_fermat_eckardt():
    points = eckardt_points(FERMAT)
    assert len(points) == 18
    assert all(p.verified for p in points)
    assert all(p.rational is Decision.yes for p in points)
    coords = [tuple(x.in_base() for x in p.coordinates) for p in points]
    assert (0, 0, -1, 1) in coords
    assert FERMAT.is_eckardt_point((0, 0, 1, -1))
    assert FERMAT.is_eckardt_point((1, -1, 0, 0))
    assert not FERMAT.is_eckardt_point((1, -1, 1, -1))
    table = eckardt_table(points)
    assert len(table) == 18
    assert table['verified'].all()


def test_split_cubics_over_fp():
    F = fp_with_omega(10009)
    rng = np.random.default_rng(20200101)
    for _ in range(10):
        S = random_split_cubic(F, rng)
        config = lines27(S)
        assert len(config) == 27
        assert all(line.on_surface() for line in config)
        assert config.meeting_counts() == [10] * 27
        points = eckardt_points(S, config)
        assert len(points) == 18
        assert all(p.verified for p in points)
        assert swinnerton_dyer_pattern(S, config).pattern is SDPattern.three_rational_lines


def test_explicit_cubes_give_rational_lines():
    report = k_rational_lines(DiagonalCubic((1, 8, 1, 8), QQ_OMEGA))
    assert [len(p.lines) for p in report] == [9, 9, 9]
    assert all(p.decision is Decision.yes for p in report)
    assert all(p.orbit_sizes == (1,) * 9 for p in report)


def test_orbit_structure():
    S = DiagonalCubic((1, 2, 1, 2), QQ_OMEGA)
    report = {p.label: p for p in k_rational_lines(S)}
    assert report['{1,3}{2,4}'].orbit_sizes == (1,) * 9
    assert len(report['{1,3}{2,4}'].lines) == 9
    for label in ('{1,2}{3,4}', '{1,4}{2,3}'):
        assert report[label].orbit_sizes == (3, 3, 3)
        assert report[label].lines == []
        assert report[label].decision is Decision.no


def test_rationality_with_rational_lines():
    S = DiagonalCubic((1, 2, 1, 2), QQ_OMEGA)
    result = rationality_test(S)
    assert result.verdict is Rationality.rational
    assert result.pattern is SDPattern.three_rational_lines
    assert S.contains(result.point)
    assert result.pairings['a1a2/a3a4'] is Decision.yes
    assert result.pairings['a1a3/a2a4'] is Decision.no


def test_rationality_from_disjoint_orbit():
    S = DiagonalCubic((1, 2, 1, 4), QQ_OMEGA)
    assert all(not p.lines for p in k_rational_lines(S))
    assert swinnerton_dyer_pattern(S).pattern is SDPattern.disjoint_orbit
    assert rationality_test(S).verdict is Rationality.inconclusive
    result = rationality_test(S, (1, 0, -1, 0))
    assert result.verdict is Rationality.rational
    assert [d.name for d in result.pairings.values()] == ['no', 'yes', 'no']


def test_fermat_rational():
    result = rationality_test(FERMAT, (1, -1, 0, 0))
    assert result.verdict is Rationality.rational
    with pytest.raises(NotOnSurfaceError):
        rationality_test(FERMAT, (1, 1, 0, 0))


def test_fibration_surface_is_not_rational():
    result = rationality_test(fibration_surface())
    assert result.verdict is Rationality.not_rational
    assert all(d is Decision.no for d in result.pairings.values())
    assert result.point == (1, 1, 1, 1)
    assert result.as_dict()['verdict'] == 'not_rational'


def test_fibration_surface_lines():
    S = fibration_surface()
    report = k_rational_lines(S)
    assert all(not p.lines for p in report)
    assert all(p.decision is Decision.no for p in report)
    assert all(p.orbit_sizes == (9,) for p in report)
    points = eckardt_points(S)
    assert len(points) == 18
    assert all(p.verified for p in points)
    assert not any(p.rational is Decision.yes for p in points)


def test_one_parameter_family():
    K = FunctionField(QQ_FIELD, ['t'])
    t, = K.gens
    S = DiagonalCubic((1, 1, 1, t), K)
    result = rationality_test(S, (1, -1, 0, 0))
    assert result.verdict is Rationality.not_rational
    assert all(d is Decision.no for d in result.pairings.values())


@pytest.mark.parametrize("coeffs", [(1, 2, 1, 2), (1, 2, 1, 4), (1, 1, 1, 1), (3, 5, 7, 11)])
def test_rationality_invariance(coeffs):
    S = DiagonalCubic(coeffs, QQ_OMEGA)
    base = rationality_test(S)
    for T in (S.scaled(Fraction(5, 7)), S.permuted([2, 0, 3, 1])):
        result = rationality_test(T)
        assert sorted(d.name for d in result.pairings.values()) == sorted(d.name for d in base.pairings.values())
        if base.verdict is Rationality.not_rational:
            assert result.verdict is Rationality.not_rational
