"""Weyl-group invariant polynomials, degree by degree.

A polynomial f in Q[ω_1, ..., ω_n] is invariant when σ_i(f) = f for every
simple reflection. For each degree l the invariants form a finite
dimensional space I^l(A), computed here as the kernel of one stacked
exact linear system.

The verification helpers return `pandas.DataFrame`s with one row per check
and a boolean `passed` column.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import comb, factorial

import pandas as pd
import sympy

from . import _series
from ._utils import _check_index, _format_fraction, _logger
from .cartan import CartanMatrix, MatrixKind, as_cartan_matrix
from .errors import FiniteType, NonSymmetrizable, NotHomogeneous, NotInvariant, PreconditionViolated
from .polyring import (
    WeightPolynomial,
    derivative_series_term,
    is_proportional,
    layer_decompose,
    monomial_exponents,
    nullspace,
    reflection_images,
    substitute,
)
from .weyl import enumerate_by_length


@dataclass(frozen=True)
class InvariantSpace:
    """A basis of the degree-`degree` invariants I^l(A).

    Attributes:
        `degree` (`int`): l.
        `basis` (`tuple[WeightPolynomial, ...]`): Linearly independent
            homogeneous invariants of degree l.
    """
    degree: int
    basis: tuple[WeightPolynomial, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_dict(self) -> dict:
        return {
            'degree': self.degree,
            'dim': self.dim,
            'basis': [f.to_json() for f in self.basis],
        }


@lru_cache(maxsize=256)
def _invariant_space(a: CartanMatrix, l: int) -> InvariantSpace:
    exps = monomial_exponents(a.n, l)
    monomials = [WeightPolynomial.from_terms({e: 1}, a.n) for e in exps]

    rows = []
    for i in range(a.n):
        images = reflection_images(a, i)
        columns = [(substitute(m, images) - m).coefficients(exps) for m in monomials]
        rows.extend(list(r) for r in zip(*columns))

    _logger.info(f'Degree {l}: solving {len(rows)} x {len(exps)} invariance system')
    kernel = nullspace(rows, cols=len(exps))

    basis = tuple(
        WeightPolynomial.from_terms(dict(zip(exps, v)), a.n)
        for v in kernel
    )
    return InvariantSpace(degree=l, basis=basis)


def invariant_space(a, l: int) -> InvariantSpace:
    """Compute a basis of the invariant polynomials of degree `l`.

    The map f ↦ (σ_1(f) - f, ..., σ_n(f) - f) is written out on the
    C(n + l - 1, l) monomials of degree l, and its exact kernel is the
    invariant space. Degree 0 gives the constants.

    Args:
        `a`: A `CartanMatrix`.
        `l` (`int`): The degree, at least 0.

    Returns:
        `InvariantSpace`: The basis follows the canonical nullspace
        normalization, so it is deterministic.
    """
    if l < 0:
        raise ValueError(f'Invalid `l`. \n  i: Check {l!r}. \n  i: Degrees must be >= 0.')
    return _invariant_space(as_cartan_matrix(a), int(l))


def is_invariant(a, f: WeightPolynomial) -> bool:
    """Direct check that σ_i(f) = f for every simple reflection."""
    a = as_cartan_matrix(a)
    return all(substitute(f, reflection_images(a, i)) == f for i in range(a.n))


def _simple_root(a: CartanMatrix, j: int) -> WeightPolynomial:
    return WeightPolynomial.linear([a[k, j] for k in range(a.n)])


def invariance_check_derivative(a, f: WeightPolynomial) -> bool:
    """Test invariance of a homogeneous `f` through its partial derivatives.

    For a homogeneous f of degree l, σ_j(f) = f exactly when

        Σ_{m=1..l} (-1)^{m+1}·(1/m!)·∂^m f/∂ω_j^m·α_j^{m-1} = 0,

    which follows from a Taylor expansion of f(ω_j - α_j) in ω_j.

    Raises:
        `NotHomogeneous`: If `f` is not homogeneous.
    """
    a = as_cartan_matrix(a)
    if not f.is_homogeneous():
        raise NotHomogeneous(
            f'Invalid polynomial {f}. \n  i: The derivative criterion needs a homogeneous input.'
        )

    l = max(f.degree, 0)
    for j in range(a.n):
        alpha = _simple_root(a, j)
        total = WeightPolynomial.zero(a.n)
        for m in range(1, l + 1):
            term = derivative_series_term(f, j, m, alpha)
            total = total + (term if m % 2 == 1 else -term)
        if not total.is_zero():
            _logger.debug(f'Derivative criterion fails for σ{j + 1}')
            return False
    return True


@dataclass(frozen=True)
class BilinearForm:
    """An invariant quadratic form ψ = Σ λ_ij·ω_i·ω_j.

    Attributes:
        `a` (`CartanMatrix`): The governing matrix.
        `lam` (`tuple[tuple[Fraction, ...], ...]`): The symmetric
            coefficient matrix, with 2·λ_ij = a_ij·λ_jj.
    """
    a: CartanMatrix
    lam: tuple[tuple[Fraction, ...], ...]

    @cached_property
    def polynomial(self) -> WeightPolynomial:
        n = self.a.n
        terms = {}
        for i in range(n):
            for j in range(i, n):
                exp = [0] * n
                exp[i] += 1
                exp[j] += 1
                terms[tuple(exp)] = self.lam[i][j] * (1 if i == j else 2)
        return WeightPolynomial.from_terms(terms, n)


    def satisfies_invariance_condition(self) -> bool:
        n = self.a.n
        return all(
            2 * self.lam[i][j] == self.a[i, j] * self.lam[j][j] and self.lam[i][j] == self.lam[j][i]
            for i in range(n) for j in range(n)
        )


    def omega_prime(self, var: int) -> WeightPolynomial:
        """ω'_var = Σ_{j != var} a_{j,var}·ω_j."""
        var = _check_index(var, self.a.n, 'var')
        return omega_prime(self.a, var)


    def omega_star(self, var: int) -> WeightPolynomial:
        """ω*_var = Σ_{k != var} λ_kk·a_{var,k}·ω_k."""
        var = _check_index(var, self.a.n, 'var')
        return WeightPolynomial.linear([
            0 if k == var else self.lam[k][k] * self.a[var, k]
            for k in range(self.a.n)
        ])


    def to_dict(self) -> dict:
        return {
            'lambda': [[_format_fraction(x) for x in row] for row in self.lam],
            'psi': self.polynomial.to_json(),
            'psi_text': str(self.polynomial),
        }


def omega_prime(a: CartanMatrix, var: int) -> WeightPolynomial:
    return WeightPolynomial.linear([0 if j == var else a[j, var] for j in range(a.n)])


def bilinear_form(a) -> BilinearForm:
    """The invariant bilinear form ψ of a symmetrizable indecomposable matrix.

    With d from `symmetrize()` (d = 1 at the first vertex), λ_ii = d_i and
    λ_ij = a_ij·d_j/2.

    Raises:
        `Decomposable`: If `a` is decomposable.
        `NonSymmetrizable`: If no symmetrizer exists, in which case there
            is no nonzero quadratic invariant.
    """
    a = as_cartan_matrix(a)
    a.require_indecomposable('bilinear_form')

    sym = a.symmetrize()
    if not sym.exists:
        raise NonSymmetrizable(
            f'Invalid matrix for `bilinear_form()`. \n  i: {a!r} is not symmetrizable, '
            'so it has no invariant bilinear form.'
        )

    d = sym.d
    lam = tuple(
        tuple(d[i] if i == j else Fraction(a[i, j]) * d[j] / 2 for j in range(a.n))
        for i in range(a.n)
    )
    return BilinearForm(a=a, lam=lam)


def verify_main_theorem(a, max_degree: int=6) -> pd.DataFrame:
    """Check the invariant ring of an indecomposable indefinite matrix degree by degree.

    For symmetrizable input, I^l must be spanned by ψ^{l/2} when l is even
    and vanish when l is odd. Otherwise every I^l with l >= 1 must vanish.

    Raises:
        `Decomposable`, `NotIndefinite`: Outside the stated hypotheses.

    Returns:
        `pandas.DataFrame`: Columns `degree`, `dim`, `expected_dim`,
        `proportional_to_psi`, `passed`, `witness` (the basis, on failure).
    """
    a = as_cartan_matrix(a)
    a.require_indefinite('verify_main_theorem')

    symmetrizable = a.symmetrize().exists
    psi = bilinear_form(a).polynomial if symmetrizable else None
    _logger.info(f'Checking invariants up to degree {max_degree} (symmetrizable: {symmetrizable})')

    rows = []
    for l in range(1, max_degree + 1):
        space = invariant_space(a, l)
        expected = 1 if symmetrizable and l % 2 == 0 else 0
        proportional = None
        if expected == 1 and space.dim == 1:
            proportional = is_proportional(space.basis[0], psi ** (l // 2))
        passed = space.dim == expected and proportional is not False
        rows.append({
            'degree': l,
            'dim': space.dim,
            'expected_dim': expected,
            'proportional_to_psi': proportional,
            'passed': passed,
            'witness': '' if passed else '; '.join(str(f) for f in space.basis),
        })

    return pd.DataFrame(rows)


def _restricted_reflection_images(a: CartanMatrix, k: int, var: int) -> list[WeightPolynomial]:
    """σ_k acting on the variables other than ω_var, with the ω_var part dropped."""
    images = reflection_images(a, k)
    image = images[k].terms
    images[k] = WeightPolynomial.from_terms(
        {e: c for e, c in image.items() if e[var] == 0},
        a.n
    )
    return images


def _top_layer_rows(a: CartanMatrix, layers, l: int, var: int) -> list[dict]:
    rest = [i for i in range(a.n) if i != var]
    sub = a.principal_submatrix(rest)
    if not (sub.is_indecomposable()
            and sub.symmetrize().exists
            and sub.classify().kind is MatrixKind.INDEFINITE):
        return []

    # Carry the form of the submatrix back into the n variables
    sub_form = bilinear_form(sub)
    lam = [[Fraction(0)] * a.n for _ in range(a.n)]
    for p, i in enumerate(rest):
        for q, j in enumerate(rest):
            lam[i][j] = sub_form.lam[p][q]
    lifted = BilinearForm(a=a, lam=tuple(tuple(r) for r in lam))
    psi_sub = lifted.polynomial
    omega_star = lifted.omega_star(var)

    top, below = layers[l], layers[l - 1]
    if l % 2 == 1:
        passed = top.is_zero() and below.is_zero()
    else:
        m = l // 2
        target = psi_sub ** m
        if top.is_zero():
            k = Fraction(0)
        else:
            pivot = next(iter(target.terms))
            k = top.coefficient(pivot) / target.coefficient(pivot)
        passed = top == target.scale(k) \
            and below == (psi_sub ** (m - 1) * omega_star).scale(k * m)

    return [{'relation': 'top_layer', 'index': l, 'passed': passed}]


def verify_layer_recurrences(a, f: WeightPolynomial, var: int | None=None) -> pd.DataFrame:
    """Check the relations between the layers of an invariant polynomial.

    `f` (homogeneous of degree l) is written as Σ f_i·ω_var^{l-i}. Then:

    * `layer_identity` (one row per j): invariance under σ_var gives
      f_j = Σ_{i<=j} (-1)^{l-i}·C(l-i, l-j)·f_i·ω'^{j-i}, where
      ω' = Σ_{k != var} a_{k,var}·ω_k.
    * `reflection_layers` (one row per k != var): with σ'_k the reflection
      of the remaining variables, σ'_k(f_i) =
      Σ_j (-a_{var,k})^j/j!·∂^j f_{i+j}/∂ω_k^j for every i.
    * `first_layer`: f_1 = (l/2)·f_0·ω' for even l, and f_0 = 0 for odd l.
    * `third_layer` (even l >= 4):
      f_3 = ½·C(l-2, 1)·f_2·ω' - ¼·C(l, 3)·f_0·ω'^3.
    * `top_layer`, only when deleting `var` leaves an indecomposable,
      symmetrizable, indefinite matrix with form ψ': f_l = k·ψ'^m and
      f_{l-1} = k·m·ψ'^{m-1}·ω*, for l = 2m.

    Args:
        `a`: A `CartanMatrix`.
        `f` (`WeightPolynomial`): A homogeneous invariant.
        `var` (`int | None`): The 0-based variable to split along. Defaults
            to the last one.

    Raises:
        `NotHomogeneous`: If `f` is not homogeneous.
        `NotInvariant`: If `f` is not invariant.

    Returns:
        `pandas.DataFrame`: Columns `relation`, `index` (1-based vertex or
        layer index), `passed`.
    """
    a = as_cartan_matrix(a)
    var = _check_index(a.n - 1 if var is None else var, a.n, 'var')
    if not f.is_homogeneous():
        raise NotHomogeneous(f'Invalid polynomial {f}. \n  i: A homogeneous invariant is required.')
    if not is_invariant(a, f):
        raise NotInvariant(f'Invalid polynomial {f}. \n  i: It is not fixed by every simple reflection.')

    layers = layer_decompose(f, var)
    l = len(layers) - 1
    w = omega_prime(a, var)
    rows = []

    for j in range(l + 1):
        rhs = sum(
            (layers[i] * w ** (j - i)).scale((-1) ** (l - i) * comb(l - i, l - j))
            for i in range(j + 1)
        )
        rows.append({'relation': 'layer_identity', 'index': j, 'passed': rhs == layers[j]})

    for k in (k for k in range(a.n) if k != var):
        images = _restricted_reflection_images(a, k, var)
        c = -a[var, k]
        passed = True
        for i in range(l + 1):
            lhs = substitute(layers[i], images)
            rhs = sum(
                (layers[i + j].diff(k, j).scale(Fraction(c ** j, factorial(j)))
                 for j in range(l - i + 1)),
                WeightPolynomial.zero(a.n)
            )
            passed = passed and lhs == rhs
        rows.append({'relation': 'reflection_layers', 'index': k + 1, 'passed': passed})

    if l >= 1:
        if l % 2 == 0:
            passed = layers[1] == (layers[0] * w).scale(Fraction(l, 2))
        else:
            passed = layers[0].is_zero()
        rows.append({'relation': 'first_layer', 'index': 1, 'passed': passed})

    if l >= 4 and l % 2 == 0:
        rhs = (layers[2] * w).scale(Fraction(comb(l - 2, 1), 2)) \
            - (layers[0] * w ** 3).scale(Fraction(comb(l, 3), 4))
        rows.append({'relation': 'third_layer', 'index': 3, 'passed': layers[3] == rhs})

    if l >= 2:
        rows.extend(_top_layer_rows(a, layers, l, var))

    return pd.DataFrame(rows, columns=['relation', 'index', 'passed'])




def check_divisibility_lemma(a, l: int, polys: list[WeightPolynomial] | None=None) -> pd.DataFrame:
    """Check that no fundamental weight divides a nonzero invariant.

    ω_i divides f exactly when the ω_i-free layer of f vanishes.

    Args:
        `a`: An indecomposable `CartanMatrix` of affine or indefinite type.
        `l` (`int`): The degree whose invariant basis is checked.
        `polys` (`list[WeightPolynomial] | None`): Check these polynomials
            instead of the computed basis. The zero polynomial passes.

    Raises:
        `Decomposable`: If `a` is decomposable.
        `FiniteType`: If `a` is of finite type.

    Returns:
        `pandas.DataFrame`: Columns `degree`, `basis_index`, `variable`
        (1-based), `divides`, `passed`. No rows when there is nothing to
        check.
    """
    a = as_cartan_matrix(a)
    a.require_indecomposable('check_divisibility_lemma')
    if a.classify().kind is MatrixKind.FINITE:
        raise FiniteType(
            'Invalid matrix for `check_divisibility_lemma()`. '
            '\n  i: The matrix is of Finite type. '
            '\n  i: An affine or indefinite matrix is required.'
        )

    polys = list(invariant_space(a, l).basis) if polys is None else polys
    rows = []
    for b, f in enumerate(polys):
        for i in range(a.n):
            divides = not f.is_zero() and layer_decompose(f, i)[-1].is_zero()
            rows.append({
                'degree': l,
                'basis_index': b,
                'variable': i + 1,
                'divides': divides,
                'passed': not divides,
            })

    return pd.DataFrame(rows, columns=['degree', 'basis_index', 'variable', 'divides', 'passed'])


def finite_weyl_group(a) -> list:
    """All elements of a finite Weyl group, by enumerating until it runs out.

    Raises:
        `PreconditionViolated`: If the group is infinite.
    """
    a = as_cartan_matrix(a)
    if a.classify().kind is not MatrixKind.FINITE:
        raise PreconditionViolated(
            'Invalid matrix for `finite_weyl_group()`. \n  i: The Weyl group is infinite.'
        )

    max_length = max(a.n, 1)
    while True:
        series, levels = enumerate_by_length(a, max_length, return_elements=True)
        if series.exhausted:
            return [w for level in levels for w in level]
        max_length *= 2


def molien_series(a, max_degree: int) -> list[int]:
    """Dimensions of the invariants of a finite Weyl group, from Molien's formula.

    Averages 1/det(1 - t·w) over every element w, to order `max_degree`.

    Raises:
        `PreconditionViolated`: If `a` is not of finite type.
    """
    group = finite_weyl_group(a)
    total = [Fraction(0)] * (max_degree + 1)
    for w in group:
        # det(1 - t·w) has the coefficients of the characteristic polynomial
        coeffs = [int(c) for c in sympy.Matrix(w.matrix.tolist()).charpoly().all_coeffs()]
        inv = _series.inverse(coeffs, max_degree)
        total = [x + y for x, y in zip(total, inv)]

    out = [x / len(group) for x in total]
    if any(x.denominator != 1 for x in out):
        raise ArithmeticError(f'Molien coefficients are not integral: {out}')
    return [int(x) for x in out]
