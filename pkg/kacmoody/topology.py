"""Rational homotopy data of the flag manifold F(A) and the group G(A).

Everything here is read off two inputs: the growth series of the Weyl
group, which is the Poincaré series of F(A) once lengths are graded by
q^{2ℓ}, and ε(A), which is 1 for symmetrizable A and 0 otherwise.

Internally all series are carried in t = q²; public series are in q.

G(A) is taken with the usual center and quotient conventions for g(A);
nothing computed here depends on which one is chosen.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import sympy

from . import _series
from ._utils import _as_fraction, _logger
from .cartan import as_cartan_matrix
from .errors import NegativeGeneratorCount
from .invariants import BilinearForm, bilinear_form
from .weyl import enumerate_by_length

PRINTED_GROUP_SERIES_FORM = 'prod_k (1 - q^(2k-1))^i_(2k-1) / (1 - q^(2k))^i_(2k)'


@dataclass(frozen=True)
class Signature:
    """Inertia (p, q, r): positive, negative and zero diagonal counts."""
    p: int
    q: int
    r: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.r)


def epsilon(a) -> int:
    """1 if `a` is symmetrizable, else 0.

    Raises:
        `Decomposable`: If `a` is decomposable.
    """
    a = as_cartan_matrix(a)
    a.require_indecomposable('epsilon')
    return int(a.symmetrize().exists)


def congruence_diagonalize(s: Sequence[Sequence]) -> list[Fraction]:
    """Diagonalize a symmetric rational matrix by congruence, exactly.

    Simultaneous row and column operations on a sympy `Matrix` reduce `s`
    to diagonal form without changing its inertia. A zero pivot is
    replaced by a later nonzero diagonal entry if there is one; otherwise,
    if the pivot row is not zero, adding a row/column with an off-diagonal
    entry m makes the pivot 2m.

    Returns:
        `list[Fraction]`: The diagonal entries.
    """
    rows = [[_as_fraction(x) for x in row] for row in s]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError('Invalid matrix. \n  i: A square matrix is required.')
    m = sympy.Matrix(n, n, lambda i, j: sympy.Rational(rows[i][j].numerator, rows[i][j].denominator))
    if not m.is_symmetric():
        raise ValueError('Invalid matrix. \n  i: A symmetric matrix is required.')

    for k in range(n):
        if m[k, k] == 0:
            swap = next((j for j in range(k + 1, n) if m[j, j] != 0), None)
            if swap is not None:
                m.row_swap(k, swap)
                m.col_swap(k, swap)
            else:
                partner = next((j for j in range(k + 1, n) if m[k, j] != 0), None)
                if partner is None:
                    continue
                m.row_op(k, lambda v, c: v + m[partner, c])
                m.col_op(k, lambda v, r: v + m[r, partner])

        pivot = m[k, k]
        for i in range(k + 1, n):
            f = m[i, k] / pivot
            if f == 0:
                continue
            m.row_op(i, lambda v, c: v - f * m[k, c])
            m.col_op(i, lambda v, r: v - f * m[r, k])

    return [_as_fraction(m[i, i]) for i in range(n)]


def signature_of(s: Sequence[Sequence]) -> Signature:
    diag = congruence_diagonalize(s)
    return Signature(
        p=sum(x > 0 for x in diag),
        q=sum(x < 0 for x in diag),
        r=sum(x == 0 for x in diag),
    )


def signature_tau(a) -> Signature:
    """The inertia τ(A) = (p, q, r) of the invariant bilinear form ψ.

    Raises:
        `Decomposable`: If `a` is decomposable.
        `NonSymmetrizable`: If `a` has no invariant bilinear form.
    """
    return signature_of(bilinear_form(a).lam)


def flag_poincare(a, max_length: int=12) -> list[int]:
    """Poincaré series of F(A) in q, to order 2·`max_length`.

    The coefficient of q^{2ℓ} is the number of Weyl group elements of
    length ℓ; odd coefficients are zero.
    """
    counts = enumerate_by_length(a, max_length).counts
    return from_t_grading(counts)


def from_t_grading(series_t: Sequence) -> list:
    out = []
    for c in series_t:
        out.extend([c, 0])
    return out[:-1]


def to_t_grading(series_q: Sequence) -> list:
    return list(series_q[::2])


def extract_generator_sequence(a, flag_series: Sequence[int], max_degree: int=24) -> dict[int, int]:
    """Recover the even generator counts i_4, i_6, ... from the flag series.

    In t = q², the flag series factors as

        P(t) = (1 - t²)^ε · (1 - t)^{-n} · Π_{k>=2} (1 - t^k)^{-i_{2k}}.

    Multiplying out the known factors leaves Π (1 - t^k)^{-i_{2k}}, whose
    lowest unmatched coefficient fixes each i_{2k} in turn.

    Args:
        `a`: An indecomposable `CartanMatrix` of indefinite type.
        `flag_series` (`Sequence[int]`): The output of `flag_poincare()`,
            in q, of order at least `max_degree`.
        `max_degree` (`int`): Cohomological degree cutoff L.

    Raises:
        `Decomposable`, `NotIndefinite`: Outside the stated hypotheses.
        `NegativeGeneratorCount`: If some i_{2k} comes out negative.

    Returns:
        `dict[int, int]`: Degree 2k to i_{2k}, for 4 <= 2k <= L.
    """
    a = as_cartan_matrix(a)
    a.require_indefinite('extract_generator_sequence')
    if len(flag_series) < max_degree + 1:
        raise ValueError(
            f'Invalid `flag_series`. \n  i: It has order {len(flag_series) - 1}, '
            f'below the degree cutoff {max_degree}. \n  i: Increase the length cutoff.'
        )

    order = max_degree // 2
    eps = epsilon(a)
    rest = _series.product([
        to_t_grading(flag_series)[:order + 1],
        _series.binomial(1, -1, a.n, order),
        _series.binomial(2, -1, -eps, order),
    ], order)

    if order >= 1 and rest[1] != 0:
        raise NegativeGeneratorCount(
            f'Degree-2 residue {rest[1]} is not zero. '
            '\n  i: Check that the flag series starts 1 + n·q².'
        )

    i_even = {}
    for k in range(2, order + 1):
        count = rest[k]
        if count < 0:
            raise NegativeGeneratorCount(
                f'Extraction gave i_{2 * k} = {count} for {a!r}. '
                f'\n  i: Partial sequence: {i_even}. '
                '\n  i: Check the grading convention and the length cutoff.'
            )
        i_even[2 * k] = int(count)
        rest = _series.mul_trunc(rest, _series.binomial(k, -1, int(count), order), order)
        _logger.debug(f'i_{2 * k} = {count}')

    _logger.info(f'Extracted generator counts up to degree {max_degree}: {i_even}')
    return i_even


def group_series(i_odd: dict[int, int], i_even: dict[int, int], max_degree: int) -> list[int]:
    """Π (1 + q^{odd})^{i_odd} / (1 - q^{even})^{i_even}, in q, to `max_degree`."""
    factors = [_series.binomial(d, 1, c, max_degree) for d, c in sorted(i_odd.items()) if c]
    factors += [_series.binomial(d, -1, -c, max_degree) for d, c in sorted(i_even.items()) if c]
    return [int(x) for x in _series.product(factors, max_degree)]


def reconstruct_flag_series(n: int, eps: int, i_even: dict[int, int], max_degree: int) -> list[int]:
    """(1 - q⁴)^ε · (1 - q²)^{-n} · Π (1 - q^{2k})^{-i_{2k}}, in q."""
    factors = [
        _series.binomial(4, -1, eps, max_degree),
        _series.binomial(2, -1, -n, max_degree),
    ]
    factors += [_series.binomial(d, -1, -c, max_degree) for d, c in sorted(i_even.items()) if c]
    return [int(x) for x in _series.product(factors, max_degree)]


@dataclass(frozen=True)
class HomotopyReport:
    """Rational homotopy data of G(A) and F(A), up to a degree cutoff.

    Attributes:
        `n` (`int`): The rank.
        `epsilon` (`int`): 1 if symmetrizable, else 0.
        `tau` (`Signature | None`): Inertia of ψ; `None` when ε = 0.
        `flag_series` (`tuple[int, ...]`): Poincaré series of F(A) in q.
        `i_even` (`dict[int, int]`): Degree 2k to i_{2k}, for 2k >= 4.
        `i_odd` (`dict[int, int]`): {3: ε}; every other odd count is 0.
        `group_series` (`tuple[int, ...]`): Poincaré series of G(A) in q.
        `max_length`, `max_degree` (`int`): The cutoffs N and L.
    """
    n: int
    epsilon: int
    tau: Signature | None
    flag_series: tuple[int, ...]
    i_even: dict[int, int]
    i_odd: dict[int, int]
    group_series: tuple[int, ...]
    max_length: int
    max_degree: int
    printed_group_series_form: str = field(default=PRINTED_GROUP_SERIES_FORM)

    @property
    def lowest_generator_degree(self) -> int | None:
        degrees = [d for d, c in {**self.i_odd, **self.i_even}.items() if c > 0]
        return min(degrees, default=None)

    @property
    def connectivity(self) -> int:
        """G(A) is rationally k-connected for k = (lowest generator degree) - 1."""
        lowest = self.lowest_generator_degree
        return self.max_degree if lowest is None else lowest - 1

    @property
    def connectivity_is_lower_bound(self) -> bool:
        return self.lowest_generator_degree is None

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'epsilon': self.epsilon,
            'tau': list(self.tau.as_tuple()) if self.tau else None,
            'flag_series': list(self.flag_series),
            'i_odd': {str(k): v for k, v in sorted(self.i_odd.items())},
            'i_even': {str(k): v for k, v in sorted(self.i_even.items())},
            'group_series': list(self.group_series),
            'connectivity': self.connectivity,
            'connectivity_is_lower_bound': self.connectivity_is_lower_bound,
            'max_length': self.max_length,
            'max_degree': self.max_degree,
            'printed_group_series_form': self.printed_group_series_form,
        }


def homotopy_report(a, max_length: int=12, max_degree: int=24) -> HomotopyReport:
    """Assemble the `HomotopyReport` of an indecomposable indefinite matrix.

    Raises:
        `Decomposable`, `NotIndefinite`: Outside the stated hypotheses.
        `NegativeGeneratorCount`: If extraction fails.
    """
    a = as_cartan_matrix(a)
    a.require_indefinite('homotopy_report')

    eps = epsilon(a)
    flag = flag_poincare(a, max_length)
    i_even = extract_generator_sequence(a, flag, max_degree)
    i_odd = {3: eps}
    return HomotopyReport(
        n=a.n,
        epsilon=eps,
        tau=signature_tau(a) if eps else None,
        flag_series=tuple(flag[:max_degree + 1]),
        i_even=i_even,
        i_odd=i_odd,
        group_series=tuple(group_series(i_odd, i_even, max_degree)),
        max_length=max_length,
        max_degree=max_degree,
    )


def group_poincare(report: HomotopyReport, max_degree: int | None=None) -> list[int]:
    """Poincaré series of G(A), with (1 + q^{2k-1}) for each odd generator."""
    max_degree = report.max_degree if max_degree is None else max_degree
    return group_series(report.i_odd, report.i_even, max_degree)


@dataclass(frozen=True)
class CohomologyPresentation:
    """Generators and relations of H*(F(A); Q) and H*(G(A); Q).

    Attributes:
        `n` (`int`): Number of degree-2 classes ω_i.
        `relation` (`BilinearForm | None`): ψ, present iff ε = 1.
        `even_generators` (`dict[int, int]`): Degree to multiplicity of the
            polynomial generators z, shared by both spaces.
        `odd_generators` (`dict[int, int]`): {3: 1} iff ε = 1 (the class y₃
            of G(A)), else empty.
        `connectivity` (`int`): Rational connectivity of G(A).
        `connectivity_is_lower_bound` (`bool`): True when no generator
            appears below the cutoff.
        `pi_odd_dim` (`int`): dim π_odd(G(A)) ⊗ Q, equal to ε.
    """
    n: int
    relation: BilinearForm | None
    even_generators: dict[int, int]
    odd_generators: dict[int, int]
    connectivity: int
    connectivity_is_lower_bound: bool
    pi_odd_dim: int

    def _z_text(self) -> str:
        gens = [f'deg {d} x{c}' for d, c in sorted(self.even_generators.items()) if c]
        return 'Q[z: ' + ', '.join(gens) + ', ...]' if gens else 'Q'

    @property
    def flag_text(self) -> str:
        base = f'Q[w1..w{self.n}]' + ('/<psi>' if self.relation is not None else '')
        return f'{base} (x) {self._z_text()}'

    @property
    def group_text(self) -> str:
        odd = 'Lambda(y3) (x) ' if self.odd_generators else ''
        return f'{odd}{self._z_text()}'

    def to_dict(self) -> dict:
        return {
            'flag_manifold': {
                'degree_2_classes': self.n,
                'relation': self.relation.to_dict() if self.relation else None,
                'even_generators': {str(k): v for k, v in sorted(self.even_generators.items()) if v},
                'text': self.flag_text,
            },
            'group': {
                'odd_generators': {str(k): v for k, v in sorted(self.odd_generators.items())},
                'even_generators': {str(k): v for k, v in sorted(self.even_generators.items()) if v},
                'i1': 0,
                'i2': 0,
                'text': self.group_text,
            },
            'connectivity': self.connectivity,
            'connectivity_is_lower_bound': self.connectivity_is_lower_bound,
            'pi_odd_dim': self.pi_odd_dim,
        }


def cohomology_presentation(a, max_degree: int=24, max_length: int=12) -> CohomologyPresentation:
    """Presentations of the rational cohomology of F(A) and G(A).

    H*(F(A)) is Q[ω_1..ω_n]/<ψ> ⊗ Q[z...] when ε = 1 and
    Q[ω_1..ω_n] ⊗ Q[z...] when ε = 0; H*(G(A)) is Λ(y₃) ⊗ Q[z...] or
    Q[z...] respectively, with i_{2k} generators z of degree 2k.

    Raises:
        `Decomposable`, `NotIndefinite`: Outside the stated hypotheses.
    """
    report = homotopy_report(a, max_length=max_length, max_degree=max_degree)
    return CohomologyPresentation(
        n=report.n,
        relation=bilinear_form(a) if report.epsilon else None,
        even_generators=dict(report.i_even),
        odd_generators={3: 1} if report.epsilon else {},
        connectivity=report.connectivity,
        connectivity_is_lower_bound=report.connectivity_is_lower_bound,
        pi_odd_dim=report.epsilon,
    )
