# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

"""
Parser and printer for the polynomial expressions used on the command line
and in coefficient files.

Expressions are parsed with the Lark grammar ``data/expression.lark`` into
an AST of ``lark.Tree`` nodes: ``var`` (a name), ``number`` (a nonnegative
integer literal, stored as a Fraction), ``omega``, ``add``, ``sub``, ``mul``,
``div``, ``pow`` (with an int exponent) and ``neg``. Note that ``-x^2`` is
``(-x)^2``: the unary minus binds tighter than the power.

Examples
--------
>>> tree = parse_expr('(s3-s4)*s3*s4', ['s3', 's4'])
>>> to_source(tree)
'(s3 - s4) * s3 * s4'
>>> tree.data
'mul'
"""

from __future__ import absolute_import, division, print_function

from fractions import Fraction

from lark import Lark
from lark import Transformer
from lark import Tree
from lark.exceptions import UnexpectedInput
from lark.exceptions import VisitError

from .. import data
from ..poly import scalar_field
from ..utils.errors import ExpressionError
from ..utils.errors import ExpressionSyntaxError

OMEGA = 'omega'

_parser = None


def expression_parser():
    'The Lark LALR parser for expressions, loaded once from the packaged grammar'
    global _parser
    if _parser is None:
        _parser = Lark(data.read_text(data.GRAMMAR), parser='lalr', lexer='standard')
    return _parser


class ExpressionBuilder(Transformer):
    '''
    Turns the parse tree into the AST: names are checked against the
    declared variables and literals become numbers.
    '''

    def __init__(self, variables):
        super(ExpressionBuilder, self).__init__()
        self.variables = frozenset(variables)

    def var(self, children):
        token, = children
        name = str(token)
        if name == OMEGA:
            return Tree('omega', [])
        if name not in self.variables:
            raise ExpressionError("Undeclared variable '{0}' at {1}:{2}".format(
                name, getattr(token, 'line', '?'), getattr(token, 'column', '?')))
        return Tree('var', [name])

    def number(self, children):
        literal, = children
        return Tree('number', [Fraction(int(literal))])

    def pow(self, children):
        base, exponent = children
        return Tree('pow', [base, int(exponent)])

    def div(self, children):
        num, den = children
        if den.data == 'number' and den.children[0] == 0:
            raise ExpressionError("Zero denominator literal in {0}".format(to_source(Tree('div', children))))
        return Tree('div', children)


def _syntax_error(err, text, line_offset, column_offset):
    line = getattr(err, 'line', None)
    column = getattr(err, 'column', None)
    token = getattr(err, 'token', None)
    if token is not None and getattr(token, 'type', None) == '$END':
        lines = text.splitlines() or ['']
        line, column, message = len(lines), len(lines[-1]) + 1, 'unexpected end of input'
    elif token is not None:
        message = 'unexpected {0!r}'.format(str(token))
    else:
        message = 'unexpected character {0!r}'.format(getattr(err, 'char', '?'))
    if not isinstance(line, int):
        line, column = 1, 1
    if line == 1:
        column += column_offset
    return ExpressionSyntaxError(line + line_offset, column, message)


def parse_expr(text, variables=(), line_offset=0, column_offset=0):
    '''
    Parse an expression in the declared variables.

    Parameters
    ----------
    text: str
    variables: iterable of str
        The names allowed in the expression, besides ``omega``.
    line_offset, column_offset: int, optional
        Position of ``text`` in a larger file, for error messages.

    Raises
    ------
    ExpressionSyntaxError
        With the line and column of the offending token.
    ExpressionError
        For an undeclared name or a literal zero denominator.
    '''
    try:
        tree = expression_parser().parse(text)
    except UnexpectedInput as err:
        raise _syntax_error(err, text, line_offset, column_offset)
    try:
        return ExpressionBuilder(variables).transform(tree)
    except VisitError as err:
        raise err.orig_exc


# binding strength of each node; a child weaker than its slot is parenthesized
_STRENGTH = {'add': 1, 'sub': 1, 'mul': 2, 'div': 2, 'pow': 3, 'neg': 4, 'var': 5, 'number': 5, 'omega': 5}


def _wrap(tree, strength):
    text = to_source(tree)
    return text if _STRENGTH[tree.data] >= strength else '({0})'.format(text)


def to_source(tree):
    '''
    Print an AST so that it parses back to an equal tree.

    >>> to_source(parse_expr('-(x^2) + omega*x/3', ['x']))
    '-(x^2) + omega * x / 3'
    '''
    kind = tree.data
    if kind == 'var':
        return tree.children[0]
    if kind == 'number':
        return str(tree.children[0])
    if kind == 'omega':
        return OMEGA
    if kind == 'neg':
        # a power under a minus keeps its parentheses
        return '-' + _wrap(tree.children[0], 5 if tree.children[0].data == 'pow' else 4)
    if kind == 'pow':
        base, exponent = tree.children
        return '{0}^{1}'.format(_wrap(base, 5), exponent)
    left, right = tree.children
    op = {'add': '+', 'sub': '-', 'mul': '*', 'div': '/'}[kind]
    strength = _STRENGTH[kind]
    return '{0} {1} {2}'.format(_wrap(left, strength), op, _wrap(right, strength + 1))


def variables_of(tree):
    'Names of the variables used in an AST'
    return set(str(t.children[0]) for t in tree.iter_subtrees() if t.data == 'var')


class Lowering(Transformer):
    '''
    Evaluates an AST with Python arithmetic.

    Parameters
    ----------
    values: dict
        The value of each variable.
    constant: callable
        Maps a Fraction to a value.
    omega: callable
        Returns the value of ``omega``.
    divide: callable, optional
        Division of two values; true division by default.
    '''

    def __init__(self, values, constant, omega, divide=None):
        super(Lowering, self).__init__()
        self.values = values
        self.constant = constant
        self.omega_value = omega
        self.divide = (lambda a, b: a / b) if divide is None else divide

    def var(self, children):
        return self.values[children[0]]

    def number(self, children):
        return self.constant(children[0])

    def omega(self, children):
        return self.omega_value()

    def add(self, children):
        a, b = children
        return a + b

    def sub(self, children):
        a, b = children
        return a - b

    def mul(self, children):
        a, b = children
        return a * b

    def div(self, children):
        a, b = children
        return self.divide(a, b)

    def pow(self, children):
        a, k = children
        return a ** k

    def neg(self, children):
        a, = children
        return -a


def _lower(tree, lowering):
    try:
        return lowering.transform(tree)
    except VisitError as err:
        if isinstance(err.orig_exc, ZeroDivisionError):
            raise ExpressionError("Division by zero in {0}".format(to_source(tree)))
        raise err.orig_exc


def to_polynomial(tree, ring, field=None):
    '''
    The polynomial of ``ring`` an AST stands for.

    Variables are the ring's generators; division is allowed by nonzero
    constants only.

    >>> from unirational.fields import QQ_OMEGA
    >>> from unirational.poly import poly_ring
    >>> R, x = poly_ring(['x'], QQ_OMEGA)
    >>> to_polynomial(parse_expr('omega^3 - 1'), R)
    0
    '''
    field = scalar_field(ring.domain) if field is None else field
    values = dict(zip((str(s) for s in ring.symbols), ring.gens))

    def divide(a, b):
        if not b.is_ground:
            raise ExpressionError("Division by the nonconstant {0}".format(b))
        if not b:
            raise ZeroDivisionError("division by zero")
        return a.quo_ground(b.LC)

    return _lower(tree, Lowering(values,
                                 lambda q: ring.ground_new(field.to_domain(q)),
                                 lambda: ring.ground_new(field.to_domain(field.omega())),
                                 divide))


def to_element(tree, field, values=None):
    '''
    The element of ``field`` an AST stands for.

    Variables are the generators of a FunctionField, or taken from ``values``.
    '''
    values = {} if values is None else dict(values)
    for name in getattr(field, 'names', ()):
        values.setdefault(name, field.gen(name))
    return _lower(tree, Lowering(values, field.convert, field.omega))


def random_expression(rng, names, depth=4):
    '''
    A random AST over ``names``, of the shape the parser produces.

    Literal denominators are never zero.
    '''
    if depth == 0 or rng.random() < 0.25:
        leaf = int(rng.integers(0, 3))
        if leaf == 0:
            return Tree('var', [names[int(rng.integers(0, len(names)))]])
        if leaf == 1:
            return Tree('number', [Fraction(int(rng.integers(0, 20)))])
        return Tree('omega', [])
    kind = ('add', 'sub', 'mul', 'div', 'pow', 'neg')[int(rng.integers(0, 6))]
    if kind == 'neg':
        return Tree('neg', [random_expression(rng, names, depth - 1)])
    if kind == 'pow':
        return Tree('pow', [random_expression(rng, names, depth - 1), int(rng.integers(0, 5))])
    left = random_expression(rng, names, depth - 1)
    right = random_expression(rng, names, depth - 1)
    if kind == 'div' and right == Tree('number', [Fraction(0)]):
        right = Tree('number', [Fraction(1)])
    return Tree(kind, [left, right])
