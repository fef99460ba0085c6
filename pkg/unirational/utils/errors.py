# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function


class UnirationalError(RuntimeError):
    pass


class FieldError(UnirationalError, ValueError):
    pass


class ArityError(UnirationalError, ValueError):
    pass


class InexactDivisionError(UnirationalError, ArithmeticError):
    pass


class TowerInconsistency(UnirationalError):
    """
    Raised when an element of the tower field fails to invert.

    k(V) is a field, so this can only come from a bug in the reduction rules.
    """


class SpecializationError(UnirationalError):
    pass


class SingularSurfaceError(UnirationalError, ValueError):
    pass


class NotOnSurfaceError(UnirationalError, ValueError):
    pass


class WrongCaseError(UnirationalError):
    pass


class EckardtPointError(WrongCaseError):
    def __init__(self, point, *args, **kwargs):
        super(EckardtPointError, self).__init__(
            "{0} is an Eckardt point: the tangent section is three concurrent lines. "
            "Pick another K-point; at most 9 K-points of S are Eckardt points".format(point),
            *args, **kwargs)


class ExpressionError(UnirationalError, ValueError):
    pass


class ExpressionSyntaxError(ExpressionError):
    def __init__(self, line, column, message, *args, **kwargs):
        self.line = line
        self.column = column
        super(ExpressionSyntaxError, self).__init__("{0}:{1}: {2}".format(line, column, message), *args, **kwargs)


class SamplingWarning(UserWarning):
    pass


class PrintedValueWarning(UserWarning):
    "A computed value differs from the printed value it is audited against"
