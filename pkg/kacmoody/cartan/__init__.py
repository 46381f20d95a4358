# ============================================================================ #
# The scripts in this folder all relate to the `CartanMatrix` class:
#   *  __init__.py: the class itself and its basic properties
#   *  _blocks.py, _classify.py, _symmetrize.py: methods
#   *  _validate.py: the axiom checks and validate()
#   *  _random.py: random_cartan_matrix(), a module-level constructor
# ============================================================================ #

from functools import cached_property

import numpy as np

from ._validate import _as_integer_array, _check_cartan_axioms


class CartanMatrix:
    """A validated generalized Cartan matrix.

    Instances are immutable: the entries are stored in a read-only NumPy
    array, so a `CartanMatrix` can be shared freely and used as a dict key.
    All indices are 0-based.

    Attributes:
        `n` (`int`): The rank, i.e. the number of rows.
        `a` (`numpy.ndarray`): The entries, as a read-only int64 array.
        `principal_submatrix()` (method): Restrict to an index subset.
        `indecomposable_blocks()` (method): Connected components of the
            Dynkin diagram.
        `is_indecomposable()` (method): Whether there is a single block.
        `require_indecomposable()`, `require_indefinite()` (methods): Gates
            that raise `Decomposable` or `NotIndefinite` for other operations.
        `dynkin_graph()` (method): The Dynkin diagram as a `networkx.Graph`.
        `classify()` (method): Finite, Affine or Indefinite, per block.
        `symmetrize()` (method): Search for a normalized symmetrizer.
        `is_hyperbolic()` (method): Whether every proper principal
            submatrix is of finite or affine type.
        `find_indefinite_principal()` (method): A vertex whose deletion
            leaves an indecomposable indefinite matrix.
    """

    # Import methods
    from ._blocks     import principal_submatrix, indecomposable_blocks, is_indecomposable, dynkin_graph, require_indecomposable
    from ._classify   import classify, is_hyperbolic, find_indefinite_principal, require_indefinite
    from ._symmetrize import symmetrize


    def __init__(self, raw):
        a = _as_integer_array(raw)
        _check_cartan_axioms(a)
        a.flags.writeable = False
        self._a = a


    @property
    def a(self) -> np.ndarray:
        """The entries as a read-only `numpy.ndarray` of int64."""
        return self._a


    @property
    def n(self) -> int:
        return self._a.shape[0]


    @cached_property
    def _key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(x) for x in row) for row in self._a)


    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self._key]


    def is_symmetric(self) -> bool:
        return bool((self._a == self._a.T).all())


    def permuted(self, perm) -> 'CartanMatrix':
        """Relabel vertices: entry (i, j) of the result is a[perm[i]][perm[j]]."""
        perm = np.asarray(perm)
        return CartanMatrix(self._a[np.ix_(perm, perm)])


    def __getitem__(self, ij) -> int:
        i, j = ij
        return int(self._a[i, j])


    def __eq__(self, other) -> bool:
        return isinstance(other, CartanMatrix) and self._key == other._key


    def __hash__(self) -> int:
        return hash(self._key)


    def __repr__(self) -> str:
        return f'CartanMatrix({self.tolist()})'


def as_cartan_matrix(raw) -> CartanMatrix:
    """Return `raw` unchanged if it is already a `CartanMatrix`, else validate it."""
    if isinstance(raw, CartanMatrix):
        return raw
    return CartanMatrix(raw)


from ._validate   import validate
from ._blocks     import principal_submatrix, indecomposable_blocks, is_indecomposable
from ._classify   import MatrixKind, MatrixType, classify, is_hyperbolic, find_indefinite_principal
from ._symmetrize import Symmetrizer, symmetrize
from ._random     import random_cartan_matrix

__all__ = [
    'CartanMatrix',
    'MatrixKind',
    'MatrixType',
    'Symmetrizer',
    'as_cartan_matrix',
    'validate',
    'principal_submatrix',
    'indecomposable_blocks',
    'is_indecomposable',
    'classify',
    'symmetrize',
    'is_hyperbolic',
    'find_indefinite_principal',
    'random_cartan_matrix',
]
