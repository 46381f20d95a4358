"""Regular subalgebras whose simple roots are sums of adjacent simple roots.

When the Dynkin diagram of A is a single cycle 1 - 2 - ... - n - 1 and
every edge carries a -1 in at least one direction, the real roots
β_j = α_{j+1} + α_{j+2} (indices mod n) are the simple roots of a full-rank
regular subalgebra. Its Cartan matrix B = (β_j(H_i)) has the closed form

    b_ij = -a_{i+1,i+2}·(a_{i+2,j+1} + a_{i+2,j+2})
           - a_{i+2,i+1}·(a_{i+1,j+1} + a_{i+1,j+2}).
"""

from dataclasses import dataclass
from itertools import combinations

from .cartan import CartanMatrix, MatrixKind, MatrixType, as_cartan_matrix
from .errors import CartanAxiomError, NotACartanMatrix, PreconditionViolated, RankTooSmall
from .weyl import WeylElement, weyl_element


@dataclass(frozen=True)
class CycleLabeling:
    """An ordering of the vertices around the Dynkin cycle.

    Attributes:
        `order` (`tuple[int, ...]`): 0-based vertices; order[i] and
            order[i + 1] (mod n) are adjacent.
    """
    order: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.order)

    def to_dict(self) -> dict:
        return {'order': [i + 1 for i in self.order]}


@dataclass(frozen=True)
class CycleFailure:
    """Why a matrix does not admit the construction.

    Attributes:
        `condition` (`str`): 'cycle' when the diagram is not a single
            cycle, 'unit_entry' when some edge has no -1 entry.
        `reason` (`str`): A human-readable explanation.
    """
    condition: str
    reason: str

    def to_dict(self) -> dict:
        return {'condition': self.condition, 'reason': self.reason}


@dataclass(frozen=True)
class Unavailable:
    reason: str

    def to_dict(self) -> dict:
        return {'available': False, 'reason': self.reason}


@dataclass(frozen=True)
class RegularSubalgebra:
    """The outcome of `build_regular_chain()`.

    Attributes:
        `a` (`CartanMatrix`): The input.
        `labeling` (`CycleLabeling`): The cycle order used.
        `b` (`CartanMatrix`): The Cartan matrix of the subalgebra, indexed
            by position along the cycle.
        `b_type` (`MatrixType`): Classification of `b`.
        `b_symmetrizable` (`bool`): Whether `b` is symmetrizable.
        `b_hyperbolic` (`bool | None`): Whether `b` is hyperbolic, or `None`
            when `b` is not indecomposable and indefinite.
    """
    a: CartanMatrix
    labeling: CycleLabeling
    b: CartanMatrix
    b_type: MatrixType
    b_symmetrizable: bool
    b_hyperbolic: bool | None

    def to_dict(self) -> dict:
        return {
            'available': True,
            'a': self.a.tolist(),
            'labeling': self.labeling.to_dict()['order'],
            'b': self.b.tolist(),
            'b_type': self.b_type.kind.value,
            'b_symmetrizable': self.b_symmetrizable,
            'b_hyperbolic': self.b_hyperbolic,
        }


def check_cycle_conditions(a) -> CycleLabeling | CycleFailure:
    """Arrange the vertices around a cycle and check the edge condition.

    The diagram must be connected with every vertex of degree exactly 2.
    The labeling starts at the first vertex and moves to its
    lower-numbered neighbour. Then every pair of cyclically adjacent
    vertices (p, q) needs a[p][q] = -1 or a[q][p] = -1.

    Raises:
        `RankTooSmall`: If n < 3.

    Returns:
        `CycleLabeling | CycleFailure`: The labeling, or the first failed
        condition.
    """
    a = as_cartan_matrix(a)
    if a.n < 3:
        raise RankTooSmall(
            f'Invalid matrix for `check_cycle_conditions()`. \n  i: Rank {a.n} < 3. '
            '\n  i: A Dynkin cycle needs at least three vertices.'
        )

    graph = a.dynkin_graph()
    degrees = dict(graph.degree)
    bad = [v + 1 for v, d in sorted(degrees.items()) if d != 2]
    if bad or not a.is_indecomposable():
        reason = f'vertices {bad} do not have degree 2' if bad \
            else 'the Dynkin diagram is not connected'
        return CycleFailure('cycle', f'The Dynkin diagram is not a single cycle: {reason}.')

    order = [0, min(graph.neighbors(0))]
    while len(order) < a.n:
        prev, cur = order[-2], order[-1]
        order.append(next(v for v in graph.neighbors(cur) if v != prev))

    for k in range(a.n):
        p, q = order[k], order[(k + 1) % a.n]
        if a[p, q] != -1 and a[q, p] != -1:
            return CycleFailure(
                'unit_entry',
                f'Neither a[{p + 1}][{q + 1}] = {a[p, q]} nor '
                f'a[{q + 1}][{p + 1}] = {a[q, p]} equals -1.'
            )

    return CycleLabeling(tuple(order))


def subalgebra_cartan(a, cyc: CycleLabeling) -> CartanMatrix:
    """Compute B = (β_j(H_i)) for the cycle labeling `cyc`.

    Rows and columns of B follow positions along the cycle, so that b_ij
    pairs β_j with the coroot of β_i.

    Raises:
        `NotACartanMatrix`: If B breaks a Cartan axiom, which can happen
            when `cyc` does not satisfy the edge condition.
    """
    a = as_cartan_matrix(a)
    n = a.n
    p = a.permuted(cyc.order)

    def pair(x, j):
        return p[x, (j + 1) % n] + p[x, (j + 2) % n]

    b = []
    for i in range(n):
        i1, i2 = (i + 1) % n, (i + 2) % n
        b.append([-p[i1, i2] * pair(i2, j) - p[i2, i1] * pair(i1, j) for j in range(n)])

    try:
        return CartanMatrix(b)
    except CartanAxiomError as exc:
        raise NotACartanMatrix(
            f'The computed matrix {b} is not a Cartan matrix. '
            f'\n  i: {exc}'
        ) from exc


def beta_roots(a, cyc: CycleLabeling) -> list[tuple[int, ...]]:
    """β_j = α_{j+1} + α_{j+2} in simple-root coordinates of A (original indices)."""
    a = as_cartan_matrix(a)
    n = a.n
    roots = []
    for j in range(n):
        v = [0] * n
        v[cyc.order[(j + 1) % n]] += 1
        v[cyc.order[(j + 2) % n]] += 1
        roots.append(tuple(v))
    return roots


def beta_reflection_word(a, cyc: CycleLabeling, j: int) -> tuple[int, ...]:
    """A word in the simple reflections of A for the reflection in β_j.

    With p, q the vertices summed in β_j: σ_p(α_q) = α_p + α_q when
    a[p][q] = -1, so the reflection is σ_p·σ_q·σ_p; otherwise
    a[q][p] = -1 and it is σ_q·σ_p·σ_q.
    """
    a = as_cartan_matrix(a)
    n = a.n
    p, q = cyc.order[(j + 1) % n], cyc.order[(j + 2) % n]
    if a[p, q] == -1:
        return (p, q, p)
    if a[q, p] == -1:
        return (q, p, q)
    raise PreconditionViolated(
        f'Invalid labeling for `beta_reflection_word()`. \n  i: Neither '
        f'a[{p + 1}][{q + 1}] nor a[{q + 1}][{p + 1}] equals -1.'
    )


def beta_reflection(a, cyc: CycleLabeling, j: int) -> WeylElement:
    return weyl_element(a, beta_reflection_word(a, cyc, j))


def _has_affine_pair(a: CartanMatrix) -> bool:
    return any(
        a.principal_submatrix(pair).classify().kind is MatrixKind.AFFINE
        for pair in combinations(range(a.n), 2)
    )


def build_regular_chain(a) -> RegularSubalgebra | Unavailable:
    """Build the regular subalgebra of a non-symmetrizable hyperbolic matrix.

    Rank-3 matrices with an affine 2 x 2 principal submatrix fall outside
    the construction and come back as `Unavailable`, as do matrices that
    fail `check_cycle_conditions()`.

    Raises:
        `PreconditionViolated`: Unless `a` is indecomposable,
            non-symmetrizable, hyperbolic and of rank at least 3.
    """
    a = as_cartan_matrix(a)
    if a.n < 3:
        raise RankTooSmall(
            f'Invalid matrix for `build_regular_chain()`. \n  i: Rank {a.n} < 3.'
        )
    a.require_indefinite('build_regular_chain')
    if a.symmetrize().exists:
        raise PreconditionViolated(
            'Invalid matrix for `build_regular_chain()`. '
            '\n  i: The matrix is symmetrizable; a non-symmetrizable matrix is required.'
        )
    if not a.is_hyperbolic():
        raise PreconditionViolated(
            'Invalid matrix for `build_regular_chain()`. \n  i: The matrix is not hyperbolic.'
        )

    if a.n == 3 and _has_affine_pair(a):
        return Unavailable('affine 2x2 branch')

    cyc = check_cycle_conditions(a)
    if isinstance(cyc, CycleFailure):
        return Unavailable(cyc.reason)

    b = subalgebra_cartan(a, cyc)
    b_type = b.classify()
    b_hyperbolic = None
    if b.is_indecomposable() and b_type.kind is MatrixKind.INDEFINITE:
        b_hyperbolic = b.is_hyperbolic()

    return RegularSubalgebra(
        a=a,
        labeling=cyc,
        b=b,
        b_type=b_type,
        b_symmetrizable=b.symmetrize().exists,
        b_hyperbolic=b_hyperbolic,
    )
