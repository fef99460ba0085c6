# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

"""
Submodule with exact sparse polynomials and rational functions.

Polynomials are sympy ``PolyElement`` objects of rings built with
``poly_ring`` (graded lexicographic order, coefficients in the sympy domain of
one of the fields of ``unirational.fields``). Rational functions are
``FracElement`` objects of a ``FunctionField``, which satisfies the same field
contract as the scalar fields, so that surfaces and maps can be defined over
K = k(s3, s4) as well as over Q(omega) or F_p.

Examples
--------
>>> from unirational.fields import QQ_FIELD
>>> R, s3, s4 = poly_ring(['s3', 's4'], QQ_FIELD)
>>> multivar_gcd(s3**2*s4, s3*s4**2)
s3*s4
>>> exact_div(s3**3 - 1, s3 - 1)
s3**2 + s3 + 1
"""

from __future__ import absolute_import, division, print_function

import attr
from sympy import ring
from sympy.polys.fields import field as frac_field
from sympy.polys.fields import FracElement
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import ExactQuotientFailed

from ..fields import Decision
from ..fields import Field
from ..fields import PrimeField
from ..fields import QQ_FIELD
from ..fields import QQ_OMEGA
from ..fields import fp_with_omega
from ..fields import prime_field
from ..utils.errors import ArityError
from ..utils.errors import FieldError
from ..utils.errors import InexactDivisionError
from ..utils.errors import SpecializationError


def poly_ring(names, field):
    '''
    Polynomial ring over the domain of ``field`` in the given variables.

    Returns the ring followed by its generators, like ``sympy.ring``.
    '''
    if isinstance(names, str):
        names = [n.strip() for n in names.split(',')]
    return ring(','.join(names), field.domain, grlex)


def scalar_field(domain):
    'The field object matching a sympy domain'
    if domain.is_QQ or domain.is_ZZ:
        return QQ_FIELD
    if domain.is_FiniteField:
        return prime_field(int(domain.characteristic()))
    if domain.is_AlgebraicField and domain == QQ_OMEGA.domain:
        return QQ_OMEGA
    if getattr(domain, 'is_FractionField', False):
        return FunctionField.from_frac_field(domain.field)
    raise FieldError("No field object for domain {0}".format(domain))


def _check_same_ring(*polys):
    rings = set(f.ring for f in polys)
    if len(rings) != 1:
        raise ArityError("Polynomials live in different rings: {0}".format(
            ', '.join(str(r) for r in rings)))
    return rings.pop()


def _map_coeffs(f, target, fn):
    return target.from_dict({m: fn(c) for m, c in f.terms()})


def _rational_descent(f):
    'The same polynomial over QQ when every coefficient in Q(omega) is rational, else None'
    domain = f.ring.domain
    if domain.is_QQ:
        return f
    if not (domain.is_AlgebraicField and domain == QQ_OMEGA.domain):
        return None
    coeffs = {}
    for m, c in f.terms():
        c = QQ_OMEGA.from_domain(c)
        if not c.is_rational:
            return None
        coeffs[m] = QQ_FIELD.to_domain(c.a)
    return f.ring.clone(domain=QQ_FIELD.domain).from_dict(coeffs)


def _rational_ascent(f, target):
    return _map_coeffs(f, target, lambda c: QQ_OMEGA.to_domain(QQ_FIELD.from_domain(c)))


def monic(f):
    'f scaled to graded-lex leading coefficient 1 (zero stays zero)'
    if not f:
        return f
    return f.quo_ground(f.LC)


def exact_div(p, q):
    '''
    The quotient p/q, which must be exact.

    Raises
    ------
    InexactDivisionError
        If q does not divide p.
    '''
    _check_same_ring(p, q)
    if not q:
        raise ZeroDivisionError("Polynomial division by zero")
    try:
        return p.exquo(q)
    except ExactQuotientFailed:
        raise InexactDivisionError("{0} does not divide {1}".format(q, p))


def multivar_gcd(p, q):
    '''
    Monic greatest common divisor of two polynomials.

    gcd(p, 0) is p made monic, gcd(0, 0) is 0. Over Q(omega), polynomials
    with rational coefficients are handled over QQ.
    '''
    R = _check_same_ring(p, q)
    if not q:
        return monic(p)
    if not p:
        return monic(q)
    p_rat, q_rat = _rational_descent(p), _rational_descent(q)
    if p_rat is not None and q_rat is not None and not R.domain.is_QQ:
        return _rational_ascent(monic(p_rat.gcd(q_rat)), R)
    return monic(p.gcd(q))


def _gradient_gcd(f):
    g = f
    for x in f.ring.gens:
        if g.is_ground:
            break
        g = multivar_gcd(g, f.diff(x))
    return g


def squarefree_decompose(p, candidates=None):
    '''
    Squarefree decomposition p = content * prod(f_i**m_i).

    The f_i are monic, squarefree and pairwise coprime, one per multiplicity.
    When linear ``candidates`` are given, every f_i is further split by trial
    division into the candidates that divide it and a cofactor.

    Parameters
    ----------
    p: PolyElement
        A nonzero polynomial.
    candidates: list of PolyElement, optional
        Trial divisors.

    Returns
    -------
    out: tuple
        The content, as a domain element, and the list of (factor, multiplicity).

    Examples
    --------
    >>> from unirational.fields import QQ_FIELD
    >>> R, s3, s4 = poly_ring(['s3', 's4'], QQ_FIELD)
    >>> content, parts = squarefree_decompose(2*(s3 - 1)**3*s4)
    >>> parts
    [(s4, 1), (s3 - 1, 3)]
    '''
    if not p:
        raise ValueError("The squarefree decomposition of 0 is undefined")
    if p.is_ground:
        return p.LC, []

    # gcd with all partials is prod f_i**(i-1) in characteristic 0 or p > deg
    rest = _gradient_gcd(p)
    run = exact_div(p, rest)
    parts = []
    multiplicity = 1
    while not run.is_ground:
        common = multivar_gcd(run, rest)
        factor = exact_div(run, common)
        if not factor.is_ground:
            parts.append((monic(factor), multiplicity))
        rest = exact_div(rest, common)
        run = common
        multiplicity += 1

    if candidates:
        parts = _split_by_candidates(parts, candidates)
    return p.LC, parts


def _split_by_candidates(parts, candidates):
    split = []
    remaining = [[f, m] for f, m in parts]
    for c in candidates:
        c = monic(c)
        if c.is_ground:
            continue
        for entry in remaining:
            try:
                entry[0] = entry[0].exquo(c)
            except ExactQuotientFailed:
                continue
            split.append((c, entry[1]))
            break
    split.extend((monic(f), m) for f, m in remaining if not f.is_ground)
    return split


def multiply_out(R, content, parts):
    'Inverse of squarefree_decompose, in the ring R'
    result = R.ground_new(content)
    for f, m in parts:
        result = result * f ** m
    return result


def numer_denom(f):
    '''
    Normalized numerator and denominator: coprime, the denominator monic.
    '''
    if isinstance(f, FracElement):
        num, den = f.numer, f.denom
        lc = den.LC
        return num.quo_ground(lc), den.quo_ground(lc)
    return f, f.ring.one


def _base_of(f, field):
    if field is None:
        domain = f.field.domain if isinstance(f, FracElement) else f.ring.domain
        return scalar_field(domain)
    return field.base if isinstance(field, FunctionField) else field


def ratfunc_is_cube(f, field=None):
    '''
    Decide whether a rational function is a cube of a rational function.

    True iff all squarefree multiplicities of numerator and denominator are
    divisible by 3 and the residual constant is a cube of the base field.
    The answer is unknown only when that constant test is undecided.

    Examples
    --------
    >>> from unirational.fields import QQ_FIELD
    >>> K = FunctionField(QQ_FIELD, ['s3', 's4'])
    >>> s3, s4 = K.gens
    >>> ratfunc_is_cube((s3 - 1)**3 / s4**6, K)
    <Decision.yes: 1>
    >>> ratfunc_is_cube(s3 / s4, K)
    <Decision.no: 0>
    '''
    num, den = numer_denom(f)
    if not num:
        raise FieldError("The cube test is only defined on nonzero elements")
    base = _base_of(f, field)
    cn, pn = squarefree_decompose(num)
    cd, pd = squarefree_decompose(den)
    if any(m % 3 for _, m in pn + pd):
        return Decision.no
    return base.is_cube(base.from_domain(cn) / base.from_domain(cd))


def ratfunc_cube_root(f, field=None):
    'A cube root of f in its function field, or None when f is not a cube'
    num, den = numer_denom(f)
    if not num:
        return f
    base = _base_of(f, field)
    cn, pn = squarefree_decompose(num)
    cd, pd = squarefree_decompose(den)
    if any(m % 3 for _, m in pn + pd):
        return None
    c = base.cube_root(base.from_domain(cn) / base.from_domain(cd))
    if c is None:
        return None
    root_num = num.ring.ground_new(base.to_domain(c))
    for g, m in pn:
        root_num = root_num * g ** (m // 3)
    root_den = den.ring.one
    for g, m in pd:
        root_den = root_den * g ** (m // 3)
    if isinstance(f, FracElement):
        return f.field.new(root_num, root_den)
    return root_num


def determinant(matrix):
    "Laplace expansion of a square matrix over any commutative ring of values"
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    total = None
    for j in range(n):
        entry = matrix[0][j]
        if not entry:
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * determinant(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return matrix[0][0] * 0 if total is None else total


def jacobian_det(maps):
    '''
    Determinant of the Jacobian matrix of n polynomials in n variables.

    >>> from unirational.fields import QQ_FIELD
    >>> R, u2, u3, u4 = poly_ring(['u2', 'u3', 'u4'], QQ_FIELD)
    >>> jacobian_det([u2**2, u3, u4])
    2*u2
    '''
    maps = list(maps)
    if not maps:
        raise ArityError("Empty map")
    R = _check_same_ring(*maps)
    if len(maps) != R.ngens:
        raise ArityError("{0} components in {1} variables".format(len(maps), R.ngens))
    matrix = [[f.diff(x) for x in R.gens] for f in maps]
    return determinant(matrix)


def _prime_target(field):
    if isinstance(field, PrimeField):
        return field
    p = int(field)
    return fp_with_omega(p) if p % 3 == 1 else prime_field(p)


def evaluate(f, point, field=None):
    '''
    Value of a polynomial at a point with coordinates in ``field``.

    The coefficients are mapped into ``field`` first, so a polynomial over
    Q(omega) can be evaluated at an F_p point.
    '''
    R = f.ring
    point = list(point)
    if len(point) != R.ngens:
        raise ArityError("Point {0} has {1} coordinates, ring has {2} variables".format(
            point, len(point), R.ngens))
    source = scalar_field(R.domain)
    target = source if field is None else field
    if isinstance(target, PrimeField):
        return _evaluate_prime(f, point, source, target)
    xs = [target.convert(v) for v in point]
    total = target.zero()
    for monom, coeff in f.terms():
        term = target.convert(source.from_domain(coeff))
        for x, e in zip(xs, monom):
            if e:
                term = term * x ** e
        total = total + term
    return total


def _evaluate_prime(f, point, source, F):
    p = F.p
    xs = [F.convert(v).value for v in point]
    total = 0
    for monom, coeff in f.terms():
        term = F.convert(source.from_domain(coeff)).value
        for x, e in zip(xs, monom):
            if e:
                term = term * pow(x, e, p) % p
        total += term
    return F.convert(total)


def evaluate_mod(f, point, field):
    '''
    Value of a polynomial at an integer point modulo a prime.

    ``field`` is a PrimeField or the prime itself.

    >>> from unirational.fields import QQ_FIELD
    >>> R, s3, s4 = poly_ring(['s3', 's4'], QQ_FIELD)
    >>> evaluate_mod(s3**2/2 + s4, [3, 1], 7)
    <PrimeFieldElem: 2 mod 7>
    '''
    return evaluate(f, point, _prime_target(field))


def specialize(f, values, field):
    '''
    Image of a polynomial or rational function under s_i -> values[i].

    Raises
    ------
    SpecializationError
        If the denominator vanishes at ``values``.
    '''
    num, den = numer_denom(f)
    d = evaluate(den, values, field)
    if field.is_zero(d):
        raise SpecializationError("Denominator {0} vanishes at {1}".format(den, list(values)))
    return evaluate(num, values, field) / d


def compose(f, images, field=None):
    '''
    Substitute polynomials from another ring for the variables of f.

    Coefficients are carried through the field objects, so the target ring may
    have another domain (for instance QQ -> GF(p)). ``field`` picks the target
    field when the default for its domain is not the right one.
    '''
    images = list(images)
    if len(images) != f.ring.ngens:
        raise ArityError("{0} images for {1} variables".format(len(images), f.ring.ngens))
    target_ring = _check_same_ring(*images)
    source = scalar_field(f.ring.domain)
    target = scalar_field(target_ring.domain) if field is None else field
    same = f.ring.domain == target_ring.domain
    powers = [{0: target_ring.one} for _ in images]

    def power(i, e):
        cache = powers[i]
        if e not in cache:
            cache[e] = power(i, e - 1) * images[i]
        return cache[e]

    result = target_ring.zero
    for monom, coeff in f.terms():
        if same:
            term = target_ring.ground_new(coeff)
        else:
            term = target_ring.ground_new(target.to_domain(target.convert(source.from_domain(coeff))))
        for i, e in enumerate(monom):
            if e:
                term = term * power(i, e)
        result = result + term
    return result


def change_domain(f, field, target_ring=None):
    'The polynomial f with its coefficients mapped into another field'
    R = f.ring.clone(domain=field.domain) if target_ring is None else target_ring
    source = scalar_field(f.ring.domain)
    return _map_coeffs(f, R, lambda c: field.to_domain(field.convert(source.from_domain(c))))


def rank_mod_p(rows, p):
    '''
    Rank of an integer matrix modulo p.

    >>> rank_mod_p([[1, 2], [2, 4]], 7)
    1
    >>> rank_mod_p([[1, 2], [2, 5]], 7)
    2
    '''
    matrix = [[int(v) % p for v in row] for row in rows]
    rank = 0
    ncols = len(matrix[0]) if matrix else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(matrix)) if matrix[r][col]), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        inv = pow(matrix[rank][col], -1, p)
        for r in range(len(matrix)):
            if r != rank and matrix[r][col]:
                factor = matrix[r][col] * inv % p
                matrix[r] = [(a - factor * b) % p for a, b in zip(matrix[r], matrix[rank])]
        rank += 1
    return rank


def total_degree(f):
    return max((sum(m) for m in f.monoms()), default=0) if f else -1


def is_homogeneous_of(f, degree):
    return all(sum(m) == degree for m in f.monoms())


@attr.s(slots=True, frozen=True, repr=False)
class FunctionField(Field):
    '''
    The rational function field k(s_1, ..., s_m) over a scalar field k.

    Elements are sympy ``FracElement`` objects; the field contract applies
    unchanged, with the cube test decided by ``ratfunc_is_cube``.

    Examples
    --------
    >>> from unirational.fields import QQ_FIELD
    >>> K = FunctionField(QQ_FIELD, ['s3', 's4'])
    >>> s3, s4 = K.gens
    >>> str(K)
    'QQ(s3, s4)'
    >>> K.is_zero((s3**2 - s4**2) / (s3 - s4) - s3 - s4)
    True
    '''

    base = attr.ib()
    names = attr.ib(converter=tuple)
    frac = attr.ib(init=False, eq=False)

    def __attrs_post_init__(self):
        object.__setattr__(self, 'frac', frac_field(','.join(self.names), self.base.domain, grlex)[0])

    @classmethod
    def from_frac_field(cls, frac):
        return cls(scalar_field(frac.domain), [str(s) for s in frac.symbols])

    @property
    def characteristic(self):
        return self.base.characteristic

    @property
    def contains_omega(self):
        return self.base.contains_omega

    @property
    def ring(self):
        'The polynomial ring k[s_1, ..., s_m]'
        return self.frac.ring

    @property
    def gens(self):
        return self.frac.gens

    def gen(self, name):
        return self.gens[self.names.index(name)]

    def convert(self, x):
        if isinstance(x, FracElement):
            if x.field != self.frac:
                raise FieldError("{0} is not an element of {1}".format(x, self))
            return x
        if hasattr(x, 'ring') and x.ring == self.frac.ring:
            return self.frac.new(x)
        return self.frac.ground_new(self.base.to_domain(x))

    def new(self, num, den=None):
        'The fraction num/den of two polynomials of ``ring``'
        if den is None:
            return self.frac.new(num)
        if not den:
            raise ZeroDivisionError("Zero denominator in {0}".format(self))
        return self.frac.new(num, den)

    def omega(self):
        return self.convert(self.base.omega())

    @property
    def domain(self):
        return self.frac.to_domain()

    def to_domain(self, x):
        return self.convert(x)

    def from_domain(self, d):
        return self.convert(d)

    def is_cube(self, x):
        return ratfunc_is_cube(self.convert(x), self)

    def cube_root(self, x):
        return ratfunc_cube_root(self.convert(x), self)

    def numer_denom(self, x):
        return numer_denom(self.convert(x))

    def height(self, x):
        num, den = self.numer_denom(x)
        return max(total_degree(num), total_degree(den))

    def specialize(self, x, values, field=None):
        'Image of x in ``field`` (the base field by default) under s -> values'
        return specialize(self.convert(x), values, self.base if field is None else field)

    def random_element(self, rng, degree=2):
        monoms = [m for m in _monomials(len(self.names), degree)]

        def random_poly():
            coeffs = {m: self.base.to_domain(self.base.random_element(rng)) for m in monoms
                      if rng.random() < 0.6}
            return self.ring.from_dict(coeffs)

        den = random_poly()
        while not den:
            den = random_poly()
        return self.frac.new(random_poly(), den)

    def __str__(self):
        return '{0}({1})'.format(self.base, ', '.join(self.names))


def _monomials(nvars, degree):
    if nvars == 0:
        yield ()
        return
    for e in range(degree + 1):
        for rest in _monomials(nvars - 1, degree - e):
            yield (e,) + rest

