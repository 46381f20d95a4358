from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations

import sympy

from .._utils import _logger
from ..errors import LemmaViolation, NotIndefinite, PreconditionViolated


class MatrixKind(Enum):
    FINITE = 'Finite'
    AFFINE = 'Affine'
    INDEFINITE = 'Indefinite'

    @property
    def generality(self) -> int:
        return list(MatrixKind).index(self)


@dataclass(frozen=True)
class MatrixType:
    """The type of a Cartan matrix.

    Attributes:
        `kind` (`MatrixKind`): The type of the matrix as a whole. For a
            decomposable matrix this is the most general kind of any block,
            in the order Finite < Affine < Indefinite.
        `blocks` (`tuple`): One `(indices, kind)` pair per indecomposable
            block, with 0-based indices, sorted by least index.
    """
    kind: MatrixKind
    blocks: tuple[tuple[tuple[int, ...], MatrixKind], ...]

    def to_dict(self) -> dict:
        return {
            'type': self.kind.value,
            'blocks': [[i + 1 for i in idx] for idx, _ in self.blocks],
            'block_types': [kind.value for _, kind in self.blocks],
        }


def _minor(key, indices) -> int:
    sub = sympy.Matrix([[key[i][j] for j in indices] for i in indices])
    return int(sub.det(method='bareiss'))


@lru_cache(maxsize=4096)
def _block_kind(key: tuple[tuple[int, ...], ...]) -> MatrixKind:
    """Classify an indecomposable block from its exact principal minors."""
    n = len(key)
    proper_positive = all(
        _minor(key, idx) > 0
        for size in range(1, n)
        for idx in combinations(range(n), size)
    )
    full = sympy.Matrix(key)
    det = int(full.det(method='bareiss'))

    if proper_positive and det > 0:
        return MatrixKind.FINITE
    if proper_positive and det == 0 and full.rank() == n - 1:
        return MatrixKind.AFFINE
    return MatrixKind.INDEFINITE


def classify(self) -> MatrixType:
    """Classify the matrix as being of finite, affine or indefinite type.

    Every indecomposable block is classified on its own: Finite if all its
    principal minors are positive, Affine if its determinant is zero, it
    has corank 1 and all proper principal minors are positive, and
    Indefinite otherwise. All determinants are exact.

    Returns:
        `MatrixType`: The overall kind plus the kind of each block.
    """
    blocks = []
    for idx in self.indecomposable_blocks():
        sub = self.principal_submatrix(idx)
        blocks.append((idx, _block_kind(sub._key)))

    kind = max((k for _, k in blocks), key=lambda k: k.generality)
    return MatrixType(kind=kind, blocks=tuple(blocks))


def require_indefinite(self, op: str) -> None:
    """Raise unless the matrix is indecomposable and of indefinite type.

    Raises:
        `Decomposable`: If the matrix is decomposable.
        `NotIndefinite`: If it is of finite or affine type.
    """
    self.require_indecomposable(op)
    kind = self.classify().kind
    if kind is not MatrixKind.INDEFINITE:
        raise NotIndefinite(
            f'Invalid matrix for `{op}()`. \n  i: The matrix is of {kind.value} type. '
            '\n  i: An indefinite matrix is required.'
        )


def is_hyperbolic(self) -> bool:
    """Whether every proper principal submatrix is of finite or affine type.

    It is enough to delete one vertex at a time: proper principal
    submatrices of a finite or affine block are always finite.

    Raises:
        `Decomposable`: If the matrix is decomposable.
        `NotIndefinite`: If the matrix is of finite or affine type.
    """
    require_indefinite(self, 'is_hyperbolic')

    for k in range(self.n):
        rest = [i for i in range(self.n) if i != k]
        sub_type = self.principal_submatrix(rest).classify()
        if sub_type.kind is MatrixKind.INDEFINITE:
            _logger.debug(f'Deleting vertex {k + 1} leaves an indefinite submatrix')
            return False
    return True


def find_indefinite_principal(self) -> int:
    """Find a vertex whose deletion leaves an indecomposable indefinite matrix.

    Such a vertex always exists for an indecomposable, indefinite,
    non-hyperbolic matrix. Vertices are tried in ascending order.

    Raises:
        `PreconditionViolated`: If the matrix is decomposable, not
            indefinite, or hyperbolic.
        `LemmaViolation`: If no vertex qualifies. This is a bug.

    Returns:
        `int`: The first qualifying 0-based vertex `k`.
    """
    require_indefinite(self, 'find_indefinite_principal')
    if self.is_hyperbolic():
        raise PreconditionViolated(
            'Invalid matrix for `find_indefinite_principal()`. '
            '\n  i: The matrix is hyperbolic, so every proper principal '
            'submatrix is of finite or affine type.'
        )

    for k in range(self.n):
        sub = self.principal_submatrix([i for i in range(self.n) if i != k])
        if sub.is_indecomposable() and sub.classify().kind is MatrixKind.INDEFINITE:
            return k

    raise LemmaViolation(
        f'No vertex of {self!r} leaves an indecomposable indefinite submatrix, '
        'although the matrix is indecomposable, indefinite and not hyperbolic.'
    )
