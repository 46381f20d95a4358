import networkx as nx
import numpy as np

from .._utils import _check_indices
from ..errors import Decomposable


def principal_submatrix(self, indices) -> 'CartanMatrix':
    """Restrict to the rows and columns in `indices`.

    Args:
        `indices`: A non-empty collection of 0-based indices (or a single
            index). Order and duplicates are ignored; the result keeps the
            original relative order.

    Raises:
        `EmptyIndexSet`: If `indices` is empty.
        `IndexOutOfRange`: If an index is not in `range(n)`.

    Returns:
        `CartanMatrix`: The principal submatrix (a[i][j]) for i, j in
        `indices`, which always satisfies the Cartan axioms again.
    """
    indices = _check_indices(indices, self.n, name='indices')
    return type(self)(self.a[np.ix_(indices, indices)])


def dynkin_graph(self) -> nx.Graph:
    """The undirected graph with an edge (i, j) whenever a[i][j] != 0."""
    graph = nx.Graph()
    graph.add_nodes_from(range(self.n))
    graph.add_edges_from(
        (i, j)
        for i in range(self.n)
        for j in range(i + 1, self.n)
        if self.a[i, j] != 0
    )
    return graph


def indecomposable_blocks(self) -> list[tuple[int, ...]]:
    """Partition the index set into indecomposable blocks.

    Returns:
        `list[tuple[int, ...]]`: The connected components of the Dynkin
        diagram, each sorted ascending, and sorted by least index.
    """
    components = nx.connected_components(dynkin_graph(self))
    return sorted(tuple(sorted(c)) for c in components)


def is_indecomposable(self) -> bool:
    return nx.is_connected(dynkin_graph(self))


def require_indecomposable(self, op: str) -> None:
    """Raise `Decomposable` unless the matrix is indecomposable.

    Args:
        `op` (`str`): The name of the calling operation, used in the message.
    """
    if not self.is_indecomposable():
        blocks = [[i + 1 for i in b] for b in self.indecomposable_blocks()]
        raise Decomposable(
            f'Invalid matrix for `{op}()`. \n  i: The matrix has blocks {blocks}. '
            '\n  i: An indecomposable matrix is required.'
        )
