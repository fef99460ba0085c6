# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

"""
Coefficient files: one ``name = expression`` per line, ``#`` comments, and an
optional ``params = s3, s4`` line naming the parameters of k(s3, s4).

The names ``a1`` to ``a4`` give the coefficients of a diagonal cubic; other
names are helpers, usable in the lines that follow them.

Examples
--------
>>> cf = read_coefficients('''
... a1 = 1
... a2 = 2
... a3 = -3   # a comment
... a4 = 5/7
... ''')
>>> cf.surface().coeffs
(Fraction(1, 1), Fraction(2, 1), Fraction(-3, 1), Fraction(5, 7))
"""

from __future__ import absolute_import, division, print_function

import re
from collections import OrderedDict

import attr

from .expression import parse_expr
from .expression import to_element
from .expression import to_source
from .. import data
from ..fields import QQ_FIELD
from ..fields import QQ_OMEGA
from ..poly import FunctionField
from ..surface import DiagonalCubic
from ..utils import filter_lines
from ..utils.errors import ExpressionError
from ..utils.errors import ExpressionSyntaxError

COEFFICIENT_NAMES = ('a1', 'a2', 'a3', 'a4')

PARAMS = re.compile(r'^\s*params\s*=\s*(?P<names>.*?)\s*$')
ASSIGNMENT = re.compile(r'^\s*(?P<name>[A-Za-z_]\w*)\s*=(?P<expr>.*)$')
IDENTIFIER = re.compile(r'^[A-Za-z_]\w*$')


def _uses_omega(tree):
    return any(t.data == 'omega' for t in tree.iter_subtrees())


@attr.s(slots=True, frozen=True)
class CoefficientFile(object):
    '''
    The parsed contents of a coefficient file.

    ``entries`` maps each name to its AST, in file order.
    '''

    params = attr.ib(converter=tuple, default=())
    entries = attr.ib(factory=OrderedDict)

    @classmethod
    def from_inline(cls, text, params=()):
        'Four comma-separated expressions, the coefficients a1 to a4'
        parts = text.split(',')
        if len(parts) != len(COEFFICIENT_NAMES):
            raise ExpressionError("Expected {0} comma-separated coefficients, got {1}".format(
                len(COEFFICIENT_NAMES), len(parts)))
        entries = OrderedDict()
        column = 1
        for name, part in zip(COEFFICIENT_NAMES, parts):
            entries[name] = parse_expr(part, params, column_offset=column - 1)
            column += len(part) + 1
        return cls(params, entries)

    def field(self, base=QQ_FIELD):
        'The coefficient field: QQ(omega) when omega occurs, k(params) when there are parameters'
        if base == QQ_FIELD and any(_uses_omega(t) for t in self.entries.values()):
            base = QQ_OMEGA
        return FunctionField(base, self.params) if self.params else base

    def values(self, field=None):
        'Each entry evaluated in ``field``, in file order'
        field = self.field() if field is None else field
        values = OrderedDict()
        for name, tree in self.entries.items():
            values[name] = to_element(tree, field, values)
        return values

    def surface(self, base=QQ_FIELD):
        '''
        The diagonal cubic with coefficients a1 to a4.

        Raises
        ------
        ExpressionError
            If one of a1 to a4 is missing.
        '''
        missing = [name for name in COEFFICIENT_NAMES if name not in self.entries]
        if missing:
            raise ExpressionError("Missing coefficient(s) {0}".format(', '.join(missing)))
        field = self.field(base)
        values = self.values(field)
        return DiagonalCubic([values[name] for name in COEFFICIENT_NAMES], field)

    def to_text(self):
        lines = []
        if self.params:
            lines.append('params = {0}'.format(', '.join(self.params)))
        lines.extend('{0} = {1}'.format(name, to_source(tree)) for name, tree in self.entries.items())
        return '\n'.join(lines) + '\n'


def read_coefficients(text):
    '''
    Parse the text of a coefficient file.

    Raises
    ------
    ExpressionSyntaxError
        For a line that is not an assignment, or a malformed expression,
        with the position in the file.
    ExpressionError
        For a name defined twice or an undeclared name.
    '''
    lines = [(n, line.split('#', 1)[0].rstrip()) for n, line in enumerate(text.splitlines(), 1)]
    lines = [(n, line) for n, line in lines if line.strip()]

    params, lines = filter_lines(PARAMS, lines)
    if len(params) > 1:
        raise ExpressionSyntaxError(params[1]['line'], 1, "params declared twice")
    names = tuple(s.strip() for s in params[0]['names'].split(',')) if params else ()
    for name in names:
        if not IDENTIFIER.match(name):
            raise ExpressionSyntaxError(params[0]['line'], 1, "bad parameter name {0!r}".format(name))

    assignments, rest = filter_lines(ASSIGNMENT, lines)
    if rest:
        n, line = rest[0]
        raise ExpressionSyntaxError(n, len(line) - len(line.lstrip()) + 1, "expected 'name = expression'")

    entries = OrderedDict()
    source = dict(lines)
    for assignment in assignments:
        name, n = assignment['name'], assignment['line']
        if name in entries or name in names or name == 'omega':
            raise ExpressionError("'{0}' defined twice (line {1})".format(name, n))
        column = source[n].index('=') + 1
        entries[name] = parse_expr(assignment['expr'], names + tuple(entries),
                                   line_offset=n - 1, column_offset=column)
    return CoefficientFile(names, entries)


def load_coefficients(filename):
    'Read a coefficient file from disk'
    with open(str(filename)) as f:
        return read_coefficients(f.read())


def packaged_coefficients(name):
    'Read a coefficient file shipped in ``unirational/data``'
    return read_coefficients(data.read_text(name))
