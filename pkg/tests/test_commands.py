# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

from pathlib import Path

import pytest

from unirational import commands
from unirational.fields import QQ_FIELD
from unirational.fields import QQ_OMEGA
from unirational.report import RunConfig
from unirational.report import Status
from unirational.surface import Rationality
from unirational.utils.errors import ExpressionError
from unirational.utils.errors import ExpressionSyntaxError


DIR = Path(__file__).parent.resolve()
CONFIG = RunConfig(primes=4)


def test_parse_field():
    assert commands.parse_field('Q') is QQ_FIELD
    assert commands.parse_field('Q( omega )') is QQ_OMEGA
    assert commands.parse_field('10009').p == 10009
    assert commands.parse_field('10007').contains_omega is False
    with pytest.raises(ExpressionError):
        commands.parse_field('C')


def test_load_surface():
    surface, values = commands.load_surface(str(DIR / 'data/fermat.txt'))
    assert values is None
    assert surface.coeffs == (1, 1, 1, 1)
    surface, values = commands.load_surface(fibration=True, field='10009', config=CONFIG)
    assert len(values) == 2
    assert surface.field.p == 10009
    assert surface.is_smooth() and surface.is_shifted
    with pytest.raises(ExpressionError):
        commands.load_surface()


def test_parse_point():
    surface = commands.load_surface('1, 2, 3, -6')[0]
    point = commands.parse_point('1, 1, 1, 1', surface.field)
    assert surface.contains(point)
    with pytest.raises(ExpressionSyntaxError) as err:
        commands.parse_point('1, 1, 1 +', surface.field)
    assert err.value.column == 10


def test_rationality_report():
    surface = commands.load_surface(fibration=True)[0]
    reports = commands.check_rationality(surface, CONFIG, expected=Rationality.not_rational)
    assert [r.name for r in reports] == ['cubic.rationality', 'cubic.unit_points']
    assert all(r.status is Status.verified for r in reports)
    refuted, _ = commands.check_rationality(surface, CONFIG, expected=Rationality.rational)
    assert refuted.status is Status.refuted
    assert refuted.counterexample['verdict'] == 'not_rational'


def test_lines_and_eckardt_reports():
    surface = commands.load_surface(str(DIR / 'data/split_cubic.txt'), field='Q(omega)')[0]
    lines = commands.check_lines(surface, CONFIG)
    assert lines.status is Status.verified
    assert lines.details['lines'] == 27
    assert len(lines.details['table']) > 0
    eckardt = commands.check_eckardt(surface, CONFIG)
    assert eckardt.status is Status.verified
    assert eckardt.details['points'] == 18


@pytest.mark.parametrize("suite", [commands.selftest_field_axioms,
                                   commands.selftest_squarefree,
                                   commands.selftest_cube_test,
                                   commands.selftest_tower,
                                   commands.selftest_round_trip], ids=lambda f: f.__name__)
def test_selftest_suites(suite):
    report = suite(CONFIG)
    assert report.status is Status.verified
    assert report.details['checked'] > 0
    assert report.details['failed'] == 0


def test_split_cubics_suite():
    reports = commands.selftest_split_cubics(CONFIG, count=2)
    assert len(reports) == 4
    assert all(r.status is Status.verified for r in reports)


@pytest.mark.slow
def test_unirational_map_over_rationals():
    surface = commands.load_surface('1, 2, 3, -6')[0]
    report, = commands.run_unirational(surface, surface.check_point((1, 1, 1, 1)), CONFIG, trials=1)
    assert report.status is not Status.refuted
    assert report.details['satisfies'] is True
    assert report.details['degree_bound'] in (2, 6)


@pytest.mark.slow
def test_unirational_map_of_fibration_surface():
    surface = commands.load_surface(fibration=True)[0]
    point = surface.check_point((1, 1, 1, 1))
    reports = commands.run_unirational(surface, point, CONFIG, p=10009, trials=1, samples=2)
    assert [r.name for r in reports] == ['unirational.0', 'unirational.1']
    for report in reports:
        assert report.status is not Status.refuted
        assert report.details['satisfies'] is True
        assert len(report.details['parameters']) == 2
