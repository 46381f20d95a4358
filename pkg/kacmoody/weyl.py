"""The Weyl group of a Cartan matrix, acting exactly on weight space.

Weights are written in the basis of fundamental weights ω_1, ..., ω_n and
the simple roots are α_i = Σ_j a[j][i]·ω_j. The simple reflection σ_i fixes
ω_j for j != i and sends ω_i to ω_i - α_i.

Matrices are NumPy arrays of dtype `object` holding Python ints, so
products never overflow. Group elements are identified by their exact
weight-space matrix.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from ._utils import _as_fraction, _check_index, _logger
from .cartan import as_cartan_matrix
from .errors import DimensionMismatch, NotDominant


@dataclass(frozen=True)
class WeightVector:
    """Exact coordinates in the basis ω_1, ..., ω_n."""
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coords', tuple(_as_fraction(x) for x in self.coords))

    @property
    def n(self) -> int:
        return len(self.coords)

    @classmethod
    def fundamental(cls, i: int, n: int) -> 'WeightVector':
        i = _check_index(i, n, 'i')
        return cls(tuple(int(k == i) for k in range(n)))

    def is_dominant(self) -> bool:
        return all(x >= 0 for x in self.coords)

    def __add__(self, other: 'WeightVector') -> 'WeightVector':
        if other.n != self.n:
            raise DimensionMismatch(f'Cannot add weights of length {self.n} and {other.n}.')
        return WeightVector(tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: 'WeightVector') -> 'WeightVector':
        return self + WeightVector(tuple(-x for x in other.coords))

    def __str__(self) -> str:
        return '(' + ', '.join(str(x) for x in self.coords) + ')'


def _identity(n: int) -> np.ndarray:
    return np.array([[int(i == j) for j in range(n)] for i in range(n)], dtype=object)


def _key(m: np.ndarray) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(row) for row in m.tolist())


def simple_reflection_matrix(a, i: int) -> np.ndarray:
    """The action of σ_i on weight coordinates.

    Column j is the image of ω_j: ω_j itself for j != i, and
    ω_i - α_i = -ω_i - Σ_{k != i} a[k][i]·ω_k for j = i.

    Args:
        `a`: A `CartanMatrix` (or anything `validate()` accepts).
        `i` (`int`): The 0-based generator index.

    Raises:
        `IndexOutOfRange`: If `i` is not in `range(n)`.

    Returns:
        `numpy.ndarray`: An n x n involution with Python-int entries.
    """
    a = as_cartan_matrix(a)
    i = _check_index(i, a.n, 'i')
    m = _identity(a.n)
    for k in range(a.n):
        m[k, i] -= a[k, i]
    return m


def simple_root_reflection_matrix(a, i: int) -> np.ndarray:
    """The action of σ_i on root coordinates: σ_i(α_j) = α_j - a[i][j]·α_i."""
    a = as_cartan_matrix(a)
    i = _check_index(i, a.n, 'i')
    m = _identity(a.n)
    for j in range(a.n):
        m[i, j] -= a[i, j]
    return m


def coxeter_matrix(a) -> list[list[int | float]]:
    """Coxeter exponents m_ij: the order of σ_iσ_j.

    m_ii = 1, and for i != j, m_ij = 2, 3, 4, 6 as a[i][j]·a[j][i] = 0, 1,
    2, 3. Products of 4 or more give `math.inf`.
    """
    a = as_cartan_matrix(a)
    orders = {0: 2, 1: 3, 2: 4, 3: 6}
    return [
        [1 if i == j else orders.get(a[i, j] * a[j, i], math.inf) for j in range(a.n)]
        for i in range(a.n)
    ]


class WeylElement:
    """An element of the Weyl group, as a word plus its exact matrices.

    Elements produced by `enumerate_by_length()` carry reduced words.
    `weyl_element()` keeps whatever word it is given.

    Attributes:
        `word` (`tuple[int, ...]`): 0-based generator indices, applied
            right to left: (i, j) is σ_i·σ_j.
        `matrix` (`numpy.ndarray`): Action on weight coordinates.
        `root_matrix` (`numpy.ndarray`): Action on root coordinates.
    """

    def __init__(self, word: Sequence[int], matrix: np.ndarray, root_matrix: np.ndarray):
        self.word = tuple(int(i) for i in word)
        self.matrix = matrix
        self.root_matrix = root_matrix


    @property
    def n(self) -> int:
        return self.matrix.shape[0]


    @property
    def length(self) -> int:
        return len(self.word)


    @property
    def key(self) -> tuple[tuple[int, ...], ...]:
        return _key(self.matrix)


    def is_identity(self) -> bool:
        return self.key == _key(_identity(self.n))


    def has_right_descent(self, i: int) -> bool:
        """Whether w(α_i) is a negative root, i.e. ℓ(w·σ_i) < ℓ(w)."""
        return all(x <= 0 for x in self.root_matrix[:, i])


    def __mul__(self, other: 'WeylElement') -> 'WeylElement':
        if other.n != self.n:
            raise DimensionMismatch(
                f'Cannot multiply Weyl elements of rank {self.n} and {other.n}.'
            )
        return WeylElement(
            self.word + other.word,
            self.matrix.dot(other.matrix),
            self.root_matrix.dot(other.root_matrix)
        )


    def __pow__(self, k: int) -> 'WeylElement':
        result = WeylElement((), _identity(self.n), _identity(self.n))
        for _ in range(k):
            result = result * self
        return result


    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self.key == other.key


    def __hash__(self) -> int:
        return hash(self.key)


    def __repr__(self) -> str:
        word = '·'.join(f's{i + 1}' for i in self.word) or 'e'
        return f'WeylElement({word})'


def weyl_element(a, word: Sequence[int]) -> WeylElement:
    """Multiply out the simple reflections in `word`."""
    a = as_cartan_matrix(a)
    m, r = _identity(a.n), _identity(a.n)
    for i in word:
        m = m.dot(simple_reflection_matrix(a, i))
        r = r.dot(simple_root_reflection_matrix(a, i))
    return WeylElement(word, m, r)


def act(w: WeylElement, v: WeightVector) -> WeightVector:
    """Apply `w` to the weight `v`.

    Raises:
        `DimensionMismatch`: If `v` does not have one coordinate per
            generator of `w`.
    """
    if v.n != w.n:
        raise DimensionMismatch(
            f'Invalid weight {v}. \n  i: Expected {w.n} coordinates, got {v.n}.'
        )
    return WeightVector(tuple(
        sum((w.matrix[k, j] * v.coords[j] for j in range(w.n)), Fraction(0))
        for k in range(w.n)
    ))


@dataclass(frozen=True)
class GrowthSeries:
    """Counts of Weyl group elements by length.

    Attributes:
        `counts` (`tuple[int, ...]`): counts[l] is the number of elements
            of length l, for l = 0, ..., `truncation`.
        `truncation` (`int`): The largest length counted.
        `exhausted` (`bool`): Whether the group ran out of elements before
            `truncation`, in which case it is finite and `counts` is
            complete.
    """
    counts: tuple[int, ...]
    truncation: int
    exhausted: bool = field(default=False)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def to_dict(self) -> dict:
        return {'counts': list(self.counts), 'truncation': self.truncation}


def enumerate_by_length(a, max_length: int, *, return_elements: bool=False):
    """Count Weyl group elements by length, breadth first.

    Starting from the identity, each element w of length l spawns w·σ_i
    for every i with w(α_i) > 0; those are exactly the elements of length
    l + 1 with a reduced word ending in σ_i. Duplicates within a level are
    merged by exact matrix equality. The counts do not depend on the order
    of traversal.

    Args:
        `a`: A `CartanMatrix`.
        `max_length` (`int`): Largest length to count.
        `return_elements` (`bool`): If `True`, also return the elements of
            each level.

    Returns:
        `GrowthSeries`: Or `(GrowthSeries, list[list[WeylElement]])` when
        `return_elements` is `True`.
    """
    a = as_cartan_matrix(a)
    if max_length < 0:
        raise ValueError(
            f'Invalid `max_length`. \n  i: Check {max_length!r}. \n  i: Must be >= 0.'
        )

    reflections = [simple_reflection_matrix(a, i) for i in range(a.n)]
    root_reflections = [simple_root_reflection_matrix(a, i) for i in range(a.n)]

    level = [WeylElement((), _identity(a.n), _identity(a.n))]
    levels = [level]
    counts = [1]
    exhausted = False

    for length in range(1, max_length + 1):
        found = {}
        for w in level:
            for i in range(a.n):
                if w.has_right_descent(i):
                    continue
                m = w.matrix.dot(reflections[i])
                k = _key(m)
                if k not in found:
                    found[k] = WeylElement(w.word + (i,), m, w.root_matrix.dot(root_reflections[i]))

        level = list(found.values())
        _logger.debug(f'Length {length}: {len(level)} elements')
        if len(level) == 0:
            exhausted = True
            counts.extend([0] * (max_length - length + 1))
            break
        counts.append(len(level))
        if return_elements:
            levels.append(level)

    _logger.info(f'Enumerated {sum(counts)} Weyl group elements up to length {max_length}')
    series = GrowthSeries(counts=tuple(counts), truncation=max_length, exhausted=exhausted)
    if return_elements:
        return series, levels
    return series


def orbit_size_at_least(a, v: WeightVector, threshold: int) -> bool:
    """Whether the W-orbit of the dominant weight `v` has at least `threshold` points.

    Raises:
        `NotDominant`: If a coordinate of `v` is negative.
        `DimensionMismatch`: If `v` has the wrong number of coordinates.
    """
    a = as_cartan_matrix(a)
    if v.n != a.n:
        raise DimensionMismatch(
            f'Invalid weight {v}. \n  i: Expected {a.n} coordinates, got {v.n}.'
        )
    if not v.is_dominant():
        raise NotDominant(
            f'Invalid weight {v}. \n  i: All coordinates must be >= 0.'
        )

    alphas = [WeightVector(tuple(a[k, i] for k in range(a.n))) for i in range(a.n)]
    seen = {v.coords}
    frontier = [v]
    while frontier and len(seen) < threshold:
        next_frontier = []
        for u in frontier:
            for i in range(a.n):
                if u.coords[i] == 0:
                    continue
                image = u - WeightVector(tuple(u.coords[i] * x for x in alphas[i].coords))
                if image.coords not in seen:
                    seen.add(image.coords)
                    next_frontier.append(image)
        frontier = next_frontier

    return len(seen) >= threshold
