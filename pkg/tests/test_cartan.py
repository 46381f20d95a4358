import pytest

from kacmoody.cartan import CartanMatrix, MatrixKind, validate, random_cartan_matrix
from kacmoody.errors import (
    Decomposable,
    DiagonalNotTwo,
    EmptyIndexSet,
    NotIndefinite,
    ParseError,
    PositiveOffDiagonal,
    PreconditionViolated,
    ZeroAsymmetry,
)
from fractions import Fraction
from itertools import combinations
import numpy as np
import sympy

A2      = [[2, -1], [-1, 2]]
A22     = [[2, -2], [-2, 2]]
A23     = [[2, -2], [-3, 2]]
HYP_3   = [[2, -1, -1], [-1, 2, -1], [-2, -1, 2]]
CHAIN_4 = [[2, -2, 0, 0], [-3, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
ALL_3_4 = [[2 if i == j else -3 for j in range(4)] for i in range(4)]


def test_validate():
    a = validate(A2)
    assert isinstance(a, CartanMatrix), 'validate() should return a CartanMatrix'
    assert a.n == 2,                   'A2 should have rank 2'
    assert a.tolist() == A2,           'Entries should be preserved'
    assert validate(HYP_3).n == 3,     'The hyperbolic 3-cycle should be valid'

    with pytest.raises(ZeroAsymmetry) as err:
        validate([[2, -1], [0, 2]])
    assert err.value.position == (1, 0), 'The zero entry should be reported'
    assert 'a[2][1] = 0'      in str(err.value), 'Positions should be 1-based in messages'

    with pytest.raises(DiagonalNotTwo) as err:
        validate([[2, -1], [-1, 3]])
    assert err.value.position == (1, 1), 'The bad diagonal entry should be reported'

    with pytest.raises(PositiveOffDiagonal) as err:
        validate([[2, 1], [-1, 2]])
    assert err.value.position == (0, 1), 'The positive entry should be reported'


def test_validate_rejects_non_matrices():
    with pytest.raises(ParseError) as err:
        validate([[2, -1, 0], [-1, 2]])
    assert 'square' in str(err.value), 'Ragged input should be rejected as non-square'

    with pytest.raises(ParseError):
        validate([])
    with pytest.raises(ParseError):
        validate([[2, -0.5], [-1, 2]])
    with pytest.raises(ParseError):
        validate(5)

    with pytest.raises(ParseError) as err:
        validate([[2, -2 ** 70], [-1, 2]])
    assert '64 bits' in str(err.value), 'Entries too large for int64 should be a parse error'
    assert isinstance(err.value.__cause__, OverflowError), 'The overflow should be chained'


def test_cartan_matrix_is_immutable_and_hashable():
    a = CartanMatrix(A23)
    with pytest.raises(ValueError):
        a.a[0, 1] = 0
    assert a == CartanMatrix(np.array(A23)),       'Equal entries should give equal matrices'
    assert len({a, CartanMatrix(A23)}) == 1,       'Equal matrices should hash equally'
    assert a[1, 0] == -3,                          'Indexing should return entries as ints'
    assert a.permuted([1, 0]).tolist() == [[2, -3], [-2, 2]], 'permuted() should relabel rows and columns'


def test_principal_submatrix():
    a2 = CartanMatrix(A2)
    hyp = CartanMatrix(HYP_3)

    assert a2.principal_submatrix([0]).tolist() == [[2]],                'A single index should give [[2]]'
    assert hyp.principal_submatrix([0, 2]).tolist() == [[2, -1], [-2, 2]], 'Should keep rows and columns 1 and 3'
    assert hyp.principal_submatrix(range(3)) == hyp,                     'The full index set should give the matrix back'

    with pytest.raises(EmptyIndexSet):
        hyp.principal_submatrix([])


def test_principal_submatrices_are_cartan_matrices():
    rng = np.random.default_rng(2024)
    for _ in range(30):
        a = random_cartan_matrix(int(rng.integers(2, 6)), rng)
        size = int(rng.integers(1, a.n + 1))
        idx = rng.choice(a.n, size=size, replace=False)
        sub = a.principal_submatrix(idx)
        assert sub.n == size, 'Submatrix should have one row per index'
        assert validate(sub.tolist()) == sub, 'Submatrices should satisfy the Cartan axioms'


def test_indecomposable_blocks():
    two_a2 = [[2, -1, 0, 0], [-1, 2, 0, 0], [0, 0, 2, -1], [0, 0, -1, 2]]
    assert CartanMatrix(two_a2).indecomposable_blocks() == [(0, 1), (2, 3)], 'Two A2 blocks should be found'
    assert CartanMatrix(HYP_3).indecomposable_blocks() == [(0, 1, 2)],       'A connected diagram is one block'
    assert CartanMatrix([[2]]).indecomposable_blocks() == [(0,)],            'Rank one is one block'

    interleaved = CartanMatrix([[2, 0, -1], [0, 2, 0], [-1, 0, 2]])
    assert interleaved.indecomposable_blocks() == [(0, 2), (1,)], 'Blocks should be sorted by least index'
    assert not interleaved.is_indecomposable(),                   'The matrix should be decomposable'


def test_classify():
    assert CartanMatrix(A2).classify().kind  is MatrixKind.FINITE,     'ab = 1 should be Finite'
    assert CartanMatrix(A22).classify().kind is MatrixKind.AFFINE,     'ab = 4 should be Affine'
    assert CartanMatrix(A23).classify().kind is MatrixKind.INDEFINITE, 'ab = 6 should be Indefinite'
    assert CartanMatrix([[2, -1], [-4, 2]]).classify().kind is MatrixKind.AFFINE, 'ab = 4 should be Affine'

    affine_a2 = CartanMatrix([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])
    assert affine_a2.classify().kind is MatrixKind.AFFINE, 'The affine A2 cycle should be Affine'

    assert CartanMatrix(A2).classify().to_dict() == {'type': 'Finite', 'blocks': [[1, 2]], 'block_types': ['Finite']}, \
        'to_dict() should report 1-based blocks'


def test_classify_decomposable():
    a = CartanMatrix([[2, -1, 0, 0], [-1, 2, 0, 0], [0, 0, 2, -3], [0, 0, -3, 2]])
    t = a.classify()
    assert [kind for _, kind in t.blocks] == [MatrixKind.FINITE, MatrixKind.INDEFINITE], \
        'Each block should get its own kind'
    assert t.kind is MatrixKind.INDEFINITE, 'The overall kind should be the most general block kind'


def test_classify_is_permutation_invariant():
    rng = np.random.default_rng(7)
    for _ in range(20):
        a = random_cartan_matrix(int(rng.integers(2, 5)), rng)
        perm = rng.permutation(a.n)
        assert a.permuted(perm).classify().kind is a.classify().kind, \
            f'Relabelling {a!r} by {perm} should not change its type'


def test_classify_symmetric_matches_leading_minors():
    rng = np.random.default_rng(11)
    for _ in range(25):
        n = int(rng.integers(1, 6))
        m = np.eye(n, dtype=np.int64) * 2
        for i in range(n):
            for j in range(i + 1, n):
                m[i, j] = m[j, i] = -int(rng.integers(0, 3))
        a = CartanMatrix(m)
        leading = all(sympy.Matrix(m[:k, :k].tolist()).det() > 0 for k in range(1, n + 1))
        finite = all(kind is MatrixKind.FINITE for _, kind in a.classify().blocks)
        assert leading == finite, f'Sylvester criterion and classify() should agree on {a!r}'


def test_symmetrize():
    s = CartanMatrix(A23).symmetrize()
    assert s.exists,                          'A rank-2 matrix is always symmetrizable'
    assert s.d == (Fraction(1), Fraction(3, 2)), 'd should solve a12·d2 = a21·d1 with d1 = 1'
    assert s.to_dict() == {'exists': True, 'd': ['1', '3/2']}, 'to_dict() should print exact fractions'

    assert not CartanMatrix(HYP_3).symmetrize().exists, 'The hyperbolic 3-cycle is not symmetrizable'

    symmetric = CartanMatrix(ALL_3_4).symmetrize()
    assert symmetric.exists and symmetric.d == (1, 1, 1, 1), 'Symmetric matrices need d = 1'


def test_symmetrizer_satisfies_constraint():
    rng = np.random.default_rng(5)
    for _ in range(30):
        a = random_cartan_matrix(int(rng.integers(2, 5)), rng, indecomposable=False)
        s = a.symmetrize()
        for block in a.indecomposable_blocks():
            assert s.d[block[0]] == 1, 'd should be 1 at the least index of each block'
        holds = all(a[i, j] * s.d[j] == a[j, i] * s.d[i] for i in range(a.n) for j in range(a.n))
        assert holds == s.exists, f'exists should be True exactly when the constraint holds for {a!r}'


def test_symmetrizable_rank_3_cycle_products():
    rng = np.random.default_rng(3)
    for _ in range(30):
        a = random_cartan_matrix(3, rng)
        forward = a[0, 1] * a[1, 2] * a[2, 0]
        backward = a[1, 0] * a[2, 1] * a[0, 2]
        assert a.symmetrize().exists == (forward == backward), \
            f'The cycle condition should decide symmetrizability of {a!r}'


def test_is_hyperbolic():
    assert CartanMatrix(HYP_3).is_hyperbolic(),    'The 3-cycle should be hyperbolic'
    assert CartanMatrix(A23).is_hyperbolic(),      'Rank-2 indefinite matrices are hyperbolic'
    assert not CartanMatrix(ALL_3_4).is_hyperbolic(), 'Deleting a vertex of the all -3 matrix leaves an indefinite block'

    with pytest.raises(NotIndefinite) as err:
        CartanMatrix(A22).is_hyperbolic()
    assert 'Affine' in str(err.value), 'Error message should name the actual type'


def test_hyperbolic_implies_indefinite():
    rng = np.random.default_rng(13)
    for _ in range(20):
        a = random_cartan_matrix(3, rng)
        if a.classify().kind is MatrixKind.INDEFINITE and a.is_hyperbolic():
            assert all(
                a.principal_submatrix(idx).classify().kind is not MatrixKind.INDEFINITE
                for idx in combinations(range(3), 2)
            ), 'Every proper principal submatrix of a hyperbolic matrix should be Finite or Affine'


def test_find_indefinite_principal():
    assert CartanMatrix(CHAIN_4).find_indefinite_principal() == 3, \
        'Deleting the last vertex keeps the indefinite chain 1-2-3'
    assert CartanMatrix(ALL_3_4).find_indefinite_principal() == 0, \
        'The first vertex should be returned when every vertex qualifies'

    with pytest.raises(PreconditionViolated) as err:
        CartanMatrix(HYP_3).find_indefinite_principal()
    assert 'hyperbolic' in str(err.value), 'Hyperbolic input should be rejected'

    with pytest.raises(Decomposable):
        CartanMatrix([[2, 0], [0, 2]]).find_indefinite_principal()


def test_random_cartan_matrix():
    a = random_cartan_matrix(4, np.random.default_rng(1), min_entry=-2)
    b = random_cartan_matrix(4, np.random.default_rng(1), min_entry=-2)
    assert a == b,                    'Equal seeds should give equal matrices'
    assert a.is_indecomposable(),     'Matrices should be indecomposable by default'
    assert a.a.min() >= -2,           'Entries should respect min_entry'

    with pytest.raises(ValueError) as err:
        random_cartan_matrix(0)
    assert 'Invalid `n`.' in str(err.value), 'Error message should name the argument'
