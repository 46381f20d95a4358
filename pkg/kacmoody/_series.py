"""Truncated power series in one variable.

Series are passed around as lists [c_0, c_1, ..., c_N] of exact
coefficients and computed in sympy's sparse ring QQ[t] with the
`ring_series` helpers. Every function truncates its result to the
requested order N (inclusive).
"""

from typing import Sequence

from sympy import QQ
from sympy.polys.ring_series import rs_mul, rs_pow, rs_series_inversion
from sympy.polys.rings import ring

from ._utils import _as_fraction

_RING, _T = ring('t', QQ)


def _to_ring(a: Sequence, order: int):
    terms = {}
    for k, c in enumerate(a[:order + 1]):
        c = _as_fraction(c)
        if c:
            terms[(k,)] = QQ(c.numerator, c.denominator)
    return _RING.from_dict(terms)


def _from_ring(p, order: int) -> list:
    out = []
    for k in range(order + 1):
        c = _as_fraction(p.get((k,), QQ.zero))
        out.append(c.numerator if c.denominator == 1 else c)
    return out


def _check_invertible(a: Sequence) -> None:
    if len(a) == 0 or _as_fraction(a[0]) == 0:
        raise ZeroDivisionError('Cannot invert a power series with zero constant term.')


def unit(order: int) -> list:
    return [1] + [0] * order


def mul_trunc(a: Sequence, b: Sequence, order: int) -> list:
    return _from_ring(rs_mul(_to_ring(a, order), _to_ring(b, order), _T, order + 1), order)


def inverse(a: Sequence, order: int) -> list:
    """The reciprocal series. Requires a[0] != 0."""
    _check_invertible(a)
    return _from_ring(rs_series_inversion(_to_ring(a, order), _T, order + 1), order)


def power(a: Sequence, k: int, order: int) -> list:
    """a^k for any integer k. Negative powers require a[0] != 0."""
    if k == 0:
        return unit(order)
    if k < 0:
        _check_invertible(a)
    return _from_ring(rs_pow(_to_ring(a, order), int(k), _T, order + 1), order)


def binomial(degree: int, sign: int, exponent: int, order: int) -> list:
    """(1 + sign·t^degree)^exponent, truncated."""
    base = unit(order)
    if degree <= order:
        base[degree] += sign
    return power(base, exponent, order)


def product(factors: Sequence[Sequence], order: int) -> list:
    out = _RING.one
    for f in factors:
        out = rs_mul(out, _to_ring(f, order), _T, order + 1)
    return _from_ring(out, order)
