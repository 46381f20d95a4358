from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from .._utils import _format_fraction


@dataclass(frozen=True)
class Symmetrizer:
    """Result of a symmetrizer search.

    Attributes:
        `d` (`tuple[Fraction, ...]`): Nonzero rationals with d = 1 at the
            least index of each indecomposable block. When `exists` is
            `False` these are the spanning-tree values, which fail the
            constraint on at least one edge.
        `exists` (`bool`): Whether a[i][j]·d[j] = a[j][i]·d[i] for all i, j.
    """
    d: tuple[Fraction, ...]
    exists: bool

    def to_dict(self) -> dict:
        return {
            'exists': self.exists,
            'd': [_format_fraction(x) for x in self.d] if self.exists else None,
        }


def symmetrize(self) -> Symmetrizer:
    """Search for a diagonal symmetrizer D with DA^T = AD.

    On each block, d is fixed to 1 at the least index and propagated along
    a breadth-first spanning tree of the Dynkin diagram using
    d[j] = d[i]·a[j][i]/a[i][j]. Every remaining edge is then checked.

    Returns:
        `Symmetrizer`: Non-symmetrizable input is a valid result, reported
        with `exists=False`.
    """
    graph = self.dynkin_graph()
    d = [Fraction(0)] * self.n

    for block in self.indecomposable_blocks():
        root = block[0]
        d[root] = Fraction(1)
        for i, j in nx.bfs_edges(graph, root):
            d[j] = d[i] * Fraction(self[j, i], self[i, j])

    exists = all(
        self[i, j] * d[j] == self[j, i] * d[i]
        for i, j in graph.edges
    )
    return Symmetrizer(d=tuple(d), exists=exists)
