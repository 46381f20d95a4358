"""Exact polynomials in the fundamental weights, and exact linear algebra.

Polynomials live in Q[ω₁, ..., ω_n] and are backed by `sympy.Poly` over
`QQ`. Terms are always listed in graded lexicographic order with
ω₁ > ω₂ > ... > ω_n, so printed and serialized output is reproducible.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import factorial
from numbers import Integral, Rational
from typing import Iterable, Mapping, Sequence

import sympy
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ._utils import _as_fraction, _check_index, _format_fraction
from .errors import DimensionMismatch, NotHomogeneous

RationalMatrix = Sequence[Sequence[Fraction | int]]

_SUBSCRIPTS = str.maketrans('0123456789', '₀₁₂₃₄₅₆₇₈₉')
_SUPERSCRIPTS = str.maketrans('0123456789', '⁰¹²³⁴⁵⁶⁷⁸⁹')


@lru_cache(maxsize=None)
def _gens(n: int) -> tuple[sympy.Symbol, ...]:
    return tuple(sympy.symbols(f'w1:{n + 1}'))


def _qq(x):
    x = _as_fraction(x)
    return QQ(x.numerator, x.denominator)


class WeightPolynomial:
    """A polynomial with rational coefficients in ω₁, ..., ω_n.

    Instances are immutable and hashable. Zero coefficients are never
    stored. Use the class methods to build polynomials rather than
    passing a `sympy.Poly` directly.

    Attributes:
        `n` (`int`): The number of variables.
        `terms` (`dict[tuple[int, ...], Fraction]`): Exponent vector to
            coefficient, in graded lexicographic order.
        `degree` (`int`): The total degree, or -1 for the zero polynomial.
    """

    def __init__(self, poly: sympy.Poly, n: int):
        if poly.gens != _gens(n):
            raise DimensionMismatch(
                f'Invalid polynomial generators {poly.gens}. '
                f'\n  i: Expected {_gens(n)}.'
            )
        self._poly = poly
        self._n = n


    @classmethod
    def from_terms(cls, terms: Mapping[Sequence[int], object], n: int) -> 'WeightPolynomial':
        rep = {}
        for exp, coeff in terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != n:
                raise DimensionMismatch(
                    f'Invalid exponent {list(exp)}. \n  i: Expected {n} entries.'
                )
            if any(e < 0 for e in exp):
                raise ValueError(f'Invalid exponent {list(exp)}. \n  i: Exponents must be >= 0.')
            c = _qq(coeff)
            if c != 0:
                rep[exp] = rep.get(exp, QQ(0)) + c
        if len(rep) == 0:
            return cls.zero(n)
        return cls(sympy.Poly.from_dict(rep, *_gens(n), domain=QQ), n)


    @classmethod
    def zero(cls, n: int) -> 'WeightPolynomial':
        return cls(sympy.Poly(0, *_gens(n), domain=QQ), n)


    @classmethod
    def constant(cls, c, n: int) -> 'WeightPolynomial':
        return cls.from_terms({(0,) * n: c}, n)


    @classmethod
    def variable(cls, i: int, n: int) -> 'WeightPolynomial':
        """The 0-based `i`-th fundamental weight ω_{i+1} as a polynomial."""
        i = _check_index(i, n, 'i')
        exp = [0] * n
        exp[i] = 1
        return cls.from_terms({tuple(exp): 1}, n)


    @classmethod
    def linear(cls, coeffs: Sequence) -> 'WeightPolynomial':
        """Σ coeffs[i]·ω_{i+1}, e.g. a weight vector read as a linear form."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            exp = [0] * n
            exp[i] = 1
            terms[tuple(exp)] = c
        return cls.from_terms(terms, n)


    @property
    def n(self) -> int:
        return self._n


    @property
    def poly(self) -> sympy.Poly:
        return self._poly


    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return {
            exp: _as_fraction(c)
            for exp, c in self._poly.terms(order='grlex')
            if c != 0
        }


    @property
    def degree(self) -> int:
        return max((sum(exp) for exp in self.terms), default=-1)


    def is_zero(self) -> bool:
        return self._poly.is_zero


    def is_homogeneous(self) -> bool:
        """Zero counts as homogeneous of every degree."""
        return len({sum(exp) for exp in self.terms}) <= 1


    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))


    def coefficients(self, exps: Iterable[Sequence[int]]) -> list[Fraction]:
        terms = self.terms
        return [terms.get(tuple(e), Fraction(0)) for e in exps]


    def _wrap(self, poly: sympy.Poly) -> 'WeightPolynomial':
        return type(self)(poly, self._n)


    def _check_same_ring(self, other: 'WeightPolynomial') -> None:
        if other.n != self.n:
            raise DimensionMismatch(
                f'Cannot combine polynomials in {self.n} and {other.n} variables.'
            )


    def __add__(self, other):
        if isinstance(other, (Integral, Rational)):
            other = type(self).constant(other, self.n)
        if not isinstance(other, WeightPolynomial):
            return NotImplemented
        self._check_same_ring(other)
        return self._wrap(self._poly + other._poly)

    __radd__ = __add__


    def __neg__(self):
        return self._wrap(-self._poly)


    def __sub__(self, other):
        return self + (-other)


    def __rsub__(self, other):
        return (-self) + other


    def __mul__(self, other):
        if isinstance(other, (Integral, Rational)):
            return self.scale(other)
        if not isinstance(other, WeightPolynomial):
            return NotImplemented
        self._check_same_ring(other)
        return self._wrap(self._poly * other._poly)

    __rmul__ = __mul__


    def __pow__(self, k: int):
        if not isinstance(k, Integral) or k < 0:
            raise ValueError(f'Invalid exponent {k!r}. \n  i: Powers must be non-negative integers.')
        return self._wrap(self._poly ** int(k))


    def scale(self, c) -> 'WeightPolynomial':
        return self._wrap(self._poly.mul_ground(_qq(c)))


    def diff(self, var: int, m: int=1) -> 'WeightPolynomial':
        """The `m`-th partial derivative with respect to the 0-based `var`."""
        var = _check_index(var, self.n, 'var')
        if m == 0:
            return self
        return self._wrap(self._poly.diff((_gens(self.n)[var], m)))


    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightPolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms


    def __hash__(self) -> int:
        return hash((self.n, tuple(self.terms.items())))


    def to_json(self) -> list[dict]:
        return [
            {'exp': list(exp), 'num': c.numerator, 'den': c.denominator}
            for exp, c in self.terms.items()
        ]


    @classmethod
    def from_json(cls, data: list[dict], n: int) -> 'WeightPolynomial':
        return cls.from_terms(
            {tuple(t['exp']): Fraction(t['num'], t['den']) for t in data},
            n
        )


    def __str__(self) -> str:
        terms = self.terms
        if len(terms) == 0:
            return '0'

        out = ''
        for k, (exp, c) in enumerate(terms.items()):
            sign = '-' if c < 0 else '+'
            c = abs(c)
            monomial = ''.join(
                f'ω{str(i + 1).translate(_SUBSCRIPTS)}'
                + (str(e).translate(_SUPERSCRIPTS) if e > 1 else '')
                for i, e in enumerate(exp) if e > 0
            )
            coeff = _format_fraction(c)
            if monomial and c == 1:
                coeff = ''
            elif monomial and c.denominator != 1:
                coeff = f'({coeff})'

            if k == 0:
                out += ('-' if sign == '-' else '') + coeff + monomial
            else:
                out += f' {sign} {coeff}{monomial}'
        return out


    def __repr__(self) -> str:
        return f'WeightPolynomial({str(self)!r}, n={self.n})'


def _check_same_ring(*polys: WeightPolynomial) -> int:
    ns = {p.n for p in polys}
    if len(ns) != 1:
        raise DimensionMismatch(
            f'Invalid polynomials. \n  i: Variable counts differ: {sorted(ns)}.'
        )
    return ns.pop()


def add(p: WeightPolynomial, q: WeightPolynomial) -> WeightPolynomial:
    _check_same_ring(p, q)
    return p + q


def multiply(p: WeightPolynomial, q: WeightPolynomial) -> WeightPolynomial:
    _check_same_ring(p, q)
    return p * q


def scale(p: WeightPolynomial, c) -> WeightPolynomial:
    return p.scale(c)


def power(p: WeightPolynomial, k: int) -> WeightPolynomial:
    return p ** k


def monomial_exponents(n: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors of total `degree` in `n` variables.

    Listed in the canonical (graded lexicographic, descending) order;
    there are C(n + degree - 1, degree) of them.
    """
    exps = []
    for combo in combinations_with_replacement(range(n), degree):
        exp = [0] * n
        for i in combo:
            exp[i] += 1
        exps.append(tuple(exp))
    return sorted(exps, reverse=True)


def substitute(p: WeightPolynomial, images: Sequence[WeightPolynomial]) -> WeightPolynomial:
    """Substitute ω_i ↦ images[i] simultaneously and expand.

    Raises:
        `DimensionMismatch`: If there is not exactly one image per variable,
            or an image lives in a different number of variables.
    """
    if len(images) != p.n:
        raise DimensionMismatch(
            f'Invalid `images`. \n  i: Got {len(images)} images for {p.n} variables.'
        )
    _check_same_ring(p, *images)

    n = p.n
    powers = [{0: sympy.Poly(1, *_gens(n), domain=QQ)} for _ in range(n)]

    def _power(i, e):
        if e not in powers[i]:
            powers[i][e] = _power(i, e - 1) * images[i].poly
        return powers[i][e]

    result = sympy.Poly(0, *_gens(n), domain=QQ)
    for exp, c in p.poly.terms():
        if c == 0:
            continue
        term = sympy.Poly(1, *_gens(n), domain=QQ)
        for i, e in enumerate(exp):
            if e > 0:
                term = term * _power(i, e)
        result = result + term.mul_ground(c)

    return WeightPolynomial(result, n)


def reflection_images(a, i: int) -> list[WeightPolynomial]:
    """Images of ω_1, ..., ω_n under the simple reflection σ_i, as linear forms."""
    from .weyl import simple_reflection_matrix

    m = simple_reflection_matrix(a, i)
    n = m.shape[0]
    return [WeightPolynomial.linear([m[k, j] for k in range(n)]) for j in range(n)]


def weyl_action(a, i: int, p: WeightPolynomial) -> WeightPolynomial:
    """Apply the 0-based simple reflection σ_i of `a` to `p`.

    Raises:
        `IndexOutOfRange`: If `i` is not a vertex of `a`.
        `DimensionMismatch`: If `p` is not a polynomial in `a.n` variables.
    """
    return substitute(p, reflection_images(a, i))


def homogeneous_component(p: WeightPolynomial, d: int) -> WeightPolynomial:
    if d < 0:
        raise ValueError(f'Invalid `d`. \n  i: Check {d!r}. \n  i: Degrees must be >= 0.')
    return WeightPolynomial.from_terms(
        {exp: c for exp, c in p.terms.items() if sum(exp) == d},
        p.n
    )


def layer_decompose(p: WeightPolynomial, var: int) -> list[WeightPolynomial]:
    """Split a homogeneous `p` of degree l by powers of one variable.

    Returns f_0, ..., f_l with p = Σ f_i·ω_var^{l-i}. Each f_i is
    homogeneous of degree i and does not involve ω_var. The zero
    polynomial decomposes as [0].

    Raises:
        `NotHomogeneous`: If `p` is not homogeneous.
    """
    var = _check_index(var, p.n, 'var')
    if not p.is_homogeneous():
        raise NotHomogeneous(
            f'Invalid polynomial {p}. \n  i: `layer_decompose()` needs a homogeneous input.'
        )

    l = max(p.degree, 0)
    layers = [dict() for _ in range(l + 1)]
    for exp, c in p.terms.items():
        rest = list(exp)
        rest[var] = 0
        layers[l - exp[var]][tuple(rest)] = c

    return [WeightPolynomial.from_terms(layer, p.n) for layer in layers]


def reassemble_layers(layers: Sequence[WeightPolynomial], var: int) -> WeightPolynomial:
    """Inverse of `layer_decompose()`."""
    n = _check_same_ring(*layers)
    l = len(layers) - 1
    x = WeightPolynomial.variable(var, n)
    return sum(
        (f * x ** (l - i) for i, f in enumerate(layers)),
        WeightPolynomial.zero(n)
    )


def divisible_by_variable(p: WeightPolynomial, var: int) -> bool:
    """Whether ω_var divides `p`, i.e. every term contains ω_var."""
    var = _check_index(var, p.n, 'var')
    return all(exp[var] > 0 for exp in p.terms)


def _domain_matrix(m: RationalMatrix, cols: int) -> DomainMatrix:
    rows = [[_qq(x) for x in row] for row in m]
    if any(len(row) != cols for row in rows):
        raise DimensionMismatch(
            f'Invalid matrix. \n  i: Every row must have {cols} entries.'
        )
    return DomainMatrix(rows, (len(rows), cols), QQ)


def nullspace(m: RationalMatrix, cols: int | None=None) -> list[tuple[Fraction, ...]]:
    """An exact basis of the kernel of `m` over Q.

    The matrix is brought to reduced row echelon form; for each free
    column in ascending order, that variable is set to 1 and the other
    free variables to 0.

    Args:
        `m`: The matrix, as rows of ints or Fractions.
        `cols` (`int | None`): The number of columns. Only needed when `m`
            has no rows.

    Returns:
        `list[tuple[Fraction, ...]]`: The kernel basis, possibly empty.
    """
    if cols is None:
        if len(m) == 0:
            raise ValueError('Invalid `cols`. \n  i: Give `cols` when the matrix has no rows.')
        cols = len(m[0])

    if len(m) == 0:
        pivots, rref = (), []
    else:
        reduced, pivots = _domain_matrix(m, cols).rref()
        rref = reduced.to_Matrix().tolist()

    basis = []
    for free in (c for c in range(cols) if c not in pivots):
        v = [Fraction(0)] * cols
        v[free] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -_as_fraction(rref[r][free])
        basis.append(tuple(v))
    return basis


def rank(m: RationalMatrix, cols: int | None=None) -> int:
    if len(m) == 0:
        return 0
    cols = cols if cols is not None else len(m[0])
    return _domain_matrix(m, cols).rank()


def derivative_series_term(f: WeightPolynomial, var: int, m: int, alpha: WeightPolynomial) -> WeightPolynomial:
    """(1/m!)·∂^m f/∂ω_var^m · alpha^{m-1}."""
    return f.diff(var, m).scale(Fraction(1, factorial(m))) * alpha ** (m - 1)


def is_proportional(p: WeightPolynomial, q: WeightPolynomial) -> bool:
    """Whether p = c·q for some nonzero rational c, by exact cross-multiplication.

    Two zero polynomials are not considered proportional.
    """
    _check_same_ring(p, q)
    pt, qt = p.terms, q.terms
    if len(pt) == 0 or len(qt) == 0 or pt.keys() != qt.keys():
        return False
    pivot = next(iter(pt))
    return all(pt[e] * qt[pivot] == qt[e] * pt[pivot] for e in pt)
