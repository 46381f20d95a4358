import numpy as np


def random_cartan_matrix(n: int,
                         rng: np.random.Generator | None=None,
                         *,
                         min_entry: int=-3,
                         zero_prob: float=0.3,
                         indecomposable: bool=True):
    """Draw a random generalized Cartan matrix.

    Each off-diagonal pair is zero with probability `zero_prob`; otherwise
    both entries are drawn independently from `min_entry..-1`, so the
    zero pattern is always symmetric.

    Args:
        `n` (`int`): The rank.
        `rng` (`numpy.random.Generator | None`): Source of randomness. Pass
            `numpy.random.default_rng(seed)` for reproducible draws.
        `min_entry` (`int`): The most negative allowed off-diagonal entry.
        `zero_prob` (`float`): Probability that an off-diagonal pair is 0.
        `indecomposable` (`bool`): If `True` (the default), redraw until
            the Dynkin diagram is connected.

    Returns:
        `CartanMatrix`: The random matrix.
    """
    from . import CartanMatrix

    if n < 1:
        raise ValueError(f'Invalid `n`. \n  i: Check {n!r}. \n  i: The rank must be positive.')
    if min_entry > -1:
        raise ValueError(f'Invalid `min_entry`. \n  i: Check {min_entry!r}. \n  i: Must be at most -1.')

    rng = rng if rng is not None else np.random.default_rng()

    while True:
        a = np.eye(n, dtype=np.int64) * 2
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < zero_prob:
                    continue
                a[i, j], a[j, i] = rng.integers(min_entry, 0, size=2)
        cm = CartanMatrix(a)
        if not indecomposable or cm.is_indecomposable():
            return cm
