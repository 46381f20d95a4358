import importlib.resources
import logging
from fractions import Fraction
from numbers import Integral, Rational

import numpy as np

from .errors import EmptyIndexSet, IndexOutOfRange

_logger = logging.getLogger('kacmoody')


def _check_arg(arg, name, allowed_vals):
    """Check that a function argument is either None or a subset of allowed_vals."""

    if arg in [None, []]:
        return list(allowed_vals)

    if isinstance(arg, str):
        arg = [arg]

    if not set(arg) <= set(allowed_vals):
        raise ValueError(
            "Invalid `{}`. \n  i: Check '{}'. \n  i: Allowed values are: '{}'.".format(
                name,
                "', '".join(str(a) for a in arg if a not in allowed_vals),
                "', '".join(str(a) for a in allowed_vals)
            )
        )

    return list(arg)


def _to_vector(x):
    """Convert a scalar to a vector, or leave a vector unchanged."""
    scalars = [int, np.integer]
    vectors = [list, tuple, range, set, frozenset, np.ndarray]
    if any([isinstance(x, t) for t in scalars]):
        return [x]
    if any([isinstance(x, t) for t in vectors]):
        return x
    raise TypeError(f'Cannot convert {type(x)} to vector')


def _check_indices(indices, n, name='indices'):
    """Return a sorted tuple of distinct 0-based indices, all in range(n)."""

    indices = sorted(set(int(i) for i in _to_vector(indices)))

    if len(indices) == 0:
        raise EmptyIndexSet(
            f'Invalid `{name}`. \n  i: Check that at least one index is given.'
        )

    bad = [i for i in indices if not 0 <= i < n]
    if len(bad) > 0:
        raise IndexOutOfRange(
            f'Invalid `{name}`. \n  i: Check {bad}. '
            f'\n  i: Indices are 0-based and must lie in [0, {n - 1}].'
        )

    return tuple(indices)


def _check_index(i, n, name='i'):
    """Validate a single 0-based index."""
    if not isinstance(i, Integral) or not 0 <= i < n:
        raise IndexOutOfRange(
            f'Invalid `{name}`. \n  i: Check {i!r}. '
            f'\n  i: Indices are 0-based and must lie in [0, {n - 1}].'
        )
    return int(i)


def _as_fraction(x) -> Fraction:
    """Convert ints, Fractions and sympy/gmpy rationals to `Fraction`."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Integral):
        return Fraction(int(x))
    # sympy.Rational exposes p and q
    if hasattr(x, 'p') and hasattr(x, 'q'):
        return Fraction(int(x.p), int(x.q))
    if isinstance(x, Rational) or hasattr(x, 'numerator'):
        return Fraction(int(x.numerator), int(x.denominator))
    raise TypeError(f'Cannot convert {type(x)} to an exact rational')


def _format_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f'{x.numerator}/{x.denominator}'


def _pkg_file(path):
    """Ensure paths to resources work regardless of how the package is installed."""
    path = importlib.resources \
        .files('kacmoody') \
        .joinpath(path)

    if not path.exists():
        raise FileNotFoundError(f'File not found: {path}')

    return str(path)
