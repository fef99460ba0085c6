# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

import numpy as np
import pytest

from unirational.fields import prime_field
from unirational.geiser import BASE_POINTS
from unirational.geiser import DOUBLE_POINTS
from unirational.geiser import PRINTED_CONTRACTED_IMAGES
from unirational.geiser import TRIPLE_POINTS
from unirational.geiser import GeiserFibers
from unirational.geiser import contracted_images
from unirational.geiser import double_cover_identity
from unirational.geiser import exceptional_images
from unirational.geiser import geiser_map
from unirational.geiser import projective
from unirational.geiser import ramification_incidences
from unirational.geiser import ramification_polynomial
from unirational.geiser import verify_base_points
from unirational.geiser import verify_contracted_images
from unirational.geiser import verify_double_cover
from unirational.geiser import verify_double_cover_identity
from unirational.geiser import verify_ramification
from unirational.poly import evaluate
from unirational.poly import jacobian_det
from unirational.report import RunConfig
from unirational.report import Status
from unirational.utils.errors import PrintedValueWarning


def test_map_values():
    phi = geiser_map()
    assert phi.multidegree == (3,)
    assert phi.normalized().components == phi.components
    assert [int(v) for v in phi.evaluate((1, 2, 3))] == [-6, -2, 6]
    assert [int(v) for v in phi.evaluate((0, 1, 2))] == [-2, 0, 0]


@pytest.mark.parametrize("point", BASE_POINTS)
def test_base_points_are_common_zeros(point):
    assert not any(geiser_map().evaluate(point))


def test_base_points_report():
    report = verify_base_points(RunConfig(primes=2))
    assert report.status is Status.verified
    assert [w['common_zeros'] for w in report.witnesses] == [7, 7]


def test_unseparated_base_locus_is_inconclusive(monkeypatch):
    monkeypatch.setattr('unirational.geiser.geiser._base_locus_size', lambda phi, F, rng: None)
    report = verify_base_points(RunConfig(primes=2))
    assert report.status is Status.inconclusive
    assert report.counterexample is None


def test_jacobian_is_printed_value_up_to_sign():
    jacobian = jacobian_det(geiser_map().components)
    assert jacobian == -ramification_polynomial()
    assert int(evaluate(jacobian, (1, 2, 3))) == -72
    assert not evaluate(jacobian, (1, 1, 5))
    assert int(evaluate(ramification_polynomial(), (1, 2, 4))) == 288

    with pytest.warns(PrintedValueWarning):
        report = verify_ramification()
    assert report.status is Status.verified
    assert report.details['sign'] == -1


def test_contracted_images():
    images = contracted_images()
    assert images['u2 = 0'] == (1, 0, 0)
    assert images['u3 = 0'] == (0, 0, 1)
    assert images['u4 = 0'] == (0, 1, 0)
    assert images['u2 = u3'] == (1, 0, -1)
    assert images['u3 = u4'] == (0, 1, -1)
    assert images['u4 = u2'] == (1, -1, 0)


def _shifted(points):
    return set(projective((z, x, y)) for x, y, z in points)


def test_contracted_images_are_cyclically_symmetric():
    points = set(contracted_images().values())
    assert _shifted(points) == points
    printed = set(projective(p) for p in PRINTED_CONTRACTED_IMAGES)
    assert _shifted(printed) != printed


def test_contracted_images_audit():
    with pytest.warns(PrintedValueWarning):
        report = verify_contracted_images()
    assert report.status is Status.verified
    assert report.details['computed_not_printed'] == [['1', '-1', '0']]
    assert report.details['printed_not_computed'] == [['1', '0', '1']]


def test_ramification_incidences():
    incidences = {i.point: i for i in ramification_incidences()}
    assert set(incidences) == set(TRIPLE_POINTS) | set(DOUBLE_POINTS)
    for point in TRIPLE_POINTS:
        assert len(incidences[point].lines) == 3
        assert incidences[point].multiplicity == 3
    for point in DOUBLE_POINTS:
        assert len(incidences[point].lines) == 2
        assert incidences[point].multiplicity == 2
    assert incidences[(1, 1, 1)].lines == ('u2 = u3', 'u3 = u4', 'u4 = u2')


def test_triple_points_map_onto_branch_lines():
    lines = exceptional_images()
    assert [lines[p] for p in TRIPLE_POINTS] == [(1, 1, 1), (1, 0, 0), (0, 0, 1), (0, 1, 0)]
    assert [lines[p] for p in DOUBLE_POINTS] == [(0, 1, 1), (1, 1, 0), (1, 0, 1)]


def test_double_cover_identity():
    assert double_cover_identity() == -1
    with pytest.warns(PrintedValueWarning):
        report = verify_double_cover_identity()
    assert report.details['branch_degree'] == 4
    assert report.details['equation'] == 's^2 = -abc(a+b+c)'


def test_fibers_on_the_blow_up():
    rng = np.random.default_rng(7)
    fibers = GeiserFibers(10007, rng)
    F = prime_field(10007)
    q = [F.convert(v) for v in (3, 17, 101)]
    assert fibers(fibers.map.evaluate(q)) == 2
    assert fibers([F.zero(), F.convert(5), F.convert(11)]) == 1
    assert fibers([F.convert(2), F.convert(9), F.convert(-11)]) == 1


def test_double_cover_statistics():
    with pytest.warns(PrintedValueWarning):
        report = verify_double_cover(10007, 20)
    assert report.status is Status.verified
    assert report.details['minus_quartic_squares'] == '20/20'
    # -1 is not a square mod 10007
    assert report.details['quartic_squares'] == '0/20'


@pytest.mark.slow
def test_double_cover_statistics_full():
    with pytest.warns(PrintedValueWarning):
        report = verify_double_cover(10007, 200)
    assert report.status is Status.verified
