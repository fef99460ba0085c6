# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

import pytest

from unirational.fields import QQ_FIELD
from unirational.poly import poly_ring
from unirational.segre import PlaneCubicSection
from unirational.segre import SectionCase
from unirational.segre import tangent_section
from unirational.surface import DiagonalCubic
from unirational.surface import fibration_surface
from unirational.utils.errors import ArityError
from unirational.utils.errors import NotOnSurfaceError
from unirational.utils.errors import WrongCaseError

R, x, y, z = poly_ring(['x', 'y', 'z'], QQ_FIELD)


def test_nodal_cubic():
    C = PlaneCubicSection.from_ternary(z * y**2 - x**2 * (x + z), (0, 0, 1))
    assert C.classify() is SectionCase.irreducible
    assert C.quadratic == [-1, 0, 1]
    assert C.binary_cubic == [-1, 0, 0, 0]
    assert C.rational_line() is None


def test_cuspidal_cubic():
    C = PlaneCubicSection.from_ternary(z * y**2 - x**3, (0, 0, 1))
    assert C.classify() is SectionCase.irreducible
    assert C.quadratic == [0, 0, 1]


def test_reducible_cubics():
    triangle = PlaneCubicSection.from_ternary(x * y * z, (0, 0, 1))
    assert triangle.classify() is SectionCase.three_lines
    A, B = triangle.rational_line()
    assert (A[2], B[2]) == (0, 0)

    line_conic = PlaneCubicSection.from_ternary(x * (z * y - x**2), (0, 0, 1))
    assert line_conic.classify() is SectionCase.line_and_conic
    A, B = line_conic.rational_line()
    assert A[0] == 0 and B[0] == 0

    cone = PlaneCubicSection.from_ternary(x**3 + y**3, (0, 0, 1))
    assert cone.is_cone
    assert cone.classify() is SectionCase.three_lines
    assert PlaneCubicSection.from_ternary(x**3 + 2 * y**3, (0, 0, 1)).classify() is SectionCase.eckardt


def test_section_errors():
    with pytest.raises(WrongCaseError):
        PlaneCubicSection.from_ternary(z * y**2 - x**3, (1, 1, 1))
    with pytest.raises(NotOnSurfaceError):
        PlaneCubicSection.from_ternary(z * y**2 - x**3, (1, 0, 1))
    with pytest.raises(ArityError):
        PlaneCubicSection.from_ternary(z * y**2 - x**3, (0, 1))


def test_fibration_section_is_irreducible():
    S = fibration_surface()
    section, case = tangent_section(S, (1, 1, 1, 1))
    assert case is SectionCase.irreducible
    assert S.contains(section.point)
    for e in section.frame[1:]:
        assert not sum((g * v for g, v in zip(section.plane, e)), S.field.zero())


def test_specialized_sections():
    # at (s3, s4) = (2, 3) the line x1 = x3, x2 = x4 passes through (1, 1, 1, 1)
    S = fibration_surface().specialize([2, 3])
    section, case = tangent_section(S, (1, 1, 1, 1))
    assert case is SectionCase.line_and_conic
    A, B = section.rational_line()
    for s, t in [(1, 0), (0, 1), (1, 1), (2, -5)]:
        assert S.contains([s * a + t * b for a, b in zip(A, B)])

    S = fibration_surface().specialize([2, 5])
    assert S.coeffs == (-30, -2, 20, 12)
    assert tangent_section(S, (1, 1, 1, 1))[1] is SectionCase.irreducible


def test_eckardt_sections():
    fermat = DiagonalCubic((1, 1, 1, 1))
    section, case = tangent_section(fermat, (0, 0, 1, -1))
    assert section.is_cone
    assert case is SectionCase.three_lines
    A, B = section.rational_line()
    assert fermat.contains(B) and fermat.contains([a + b for a, b in zip(A, B)])

    section, case = tangent_section(DiagonalCubic((1, 2, 1, 1)), (0, 0, 1, -1))
    assert case is SectionCase.eckardt
    assert section.rational_line() is None


def test_tangent_section_errors():
    with pytest.raises(NotOnSurfaceError):
        tangent_section(DiagonalCubic((1, 1, 1, 1)), (1, 1, 1, 1))
