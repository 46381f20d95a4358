from numbers import Integral

import numpy as np

from ..errors import DiagonalNotTwo, ParseError, PositiveOffDiagonal, ZeroAsymmetry


def validate(raw):
    """Check the Cartan axioms and wrap a square integer matrix.

    The three axioms are checked in order (diagonal, sign, zero pattern),
    scanning entries row by row, and the first violation is raised.

    Args:
        `raw`: A square matrix of integers, as nested lists, tuples or a
            NumPy integer array.

    Raises:
        `ParseError`: If `raw` is not a non-empty square integer matrix.
        `DiagonalNotTwo`: If some a[i][i] != 2.
        `PositiveOffDiagonal`: If some a[i][j] > 0 with i != j.
        `ZeroAsymmetry`: If a[i][j] == 0 but a[j][i] != 0. The reported
            position is that of the zero entry.

    Returns:
        `CartanMatrix`: The validated matrix.
    """
    from . import CartanMatrix

    return CartanMatrix(raw)


def _check_cartan_axioms(a: np.ndarray) -> None:
    n = a.shape[0]

    for i in range(n):
        if a[i, i] != 2:
            raise DiagonalNotTwo(
                f'Invalid Cartan matrix: a[{i + 1}][{i + 1}] = {a[i, i]}. '
                '\n  i: Every diagonal entry must equal 2.',
                (i, i)
            )

    for i in range(n):
        for j in range(n):
            if i != j and a[i, j] > 0:
                raise PositiveOffDiagonal(
                    f'Invalid Cartan matrix: a[{i + 1}][{j + 1}] = {a[i, j]}. '
                    '\n  i: Off-diagonal entries must be <= 0.',
                    (i, j)
                )

    for i in range(n):
        for j in range(n):
            if i != j and a[i, j] == 0 and a[j, i] != 0:
                raise ZeroAsymmetry(
                    f'Invalid Cartan matrix: a[{i + 1}][{j + 1}] = 0 but '
                    f'a[{j + 1}][{i + 1}] = {a[j, i]}. '
                    '\n  i: Zero entries must be mirrored across the diagonal.',
                    (i, j)
                )


def _as_integer_array(raw) -> np.ndarray:
    """Coerce `raw` to a square 2-D int64 array, or raise ParseError."""

    try:
        rows = [list(row) for row in raw]
    except TypeError as exc:
        raise ParseError(
            'Invalid matrix. \n  i: Check that the input is a list of rows.'
        ) from exc

    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise ParseError(
            f'Invalid matrix: row lengths {[len(r) for r in rows]}. '
            '\n  i: A Cartan matrix must be square and non-empty.'
        )

    for row in rows:
        for x in row:
            if isinstance(x, bool) or not isinstance(x, Integral):
                raise ParseError(
                    f'Invalid matrix entry {x!r}. '
                    '\n  i: Cartan matrices have integer entries.'
                )

    try:
        return np.array(rows, dtype=np.int64).reshape(n, n)
    except OverflowError as exc:
        raise ParseError(
            'Invalid matrix: an entry does not fit in 64 bits. '
            '\n  i: Cartan matrix entries must lie between -2**63 and 2**63 - 1.'
        ) from exc
