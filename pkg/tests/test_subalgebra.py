import pytest

from kacmoody.cartan import CartanMatrix, MatrixKind
from kacmoody.errors import DiagonalNotTwo, NotACartanMatrix, NotIndefinite, PreconditionViolated, RankTooSmall
from kacmoody.matrix_io import read_matrix
from kacmoody.subalgebra import (
    CycleFailure,
    CycleLabeling,
    RegularSubalgebra,
    Unavailable,
    beta_reflection,
    beta_roots,
    build_regular_chain,
    check_cycle_conditions,
    subalgebra_cartan,
)
from kacmoody.weyl import enumerate_by_length
import numpy as np

HYP_3   = [[2, -1, -1], [-1, 2, -1], [-2, -1, 2]]
B_HYP_3 = [[2, -2, -2], [-3, 2, -1], [-1, -1, 2]]
CYCLE_4 = [[2, -1, 0, -1], [-2, 2, -1, 0], [0, -1, 2, -1], [-1, 0, -2, 2]]
B_CYCLE_4 = [[2, 0, -3, -1], [0, 2, -1, -3], [-3, -1, 2, 0], [-1, -3, 0, 2]]


def test_check_cycle_conditions():
    cyc = check_cycle_conditions(HYP_3)
    assert isinstance(cyc, CycleLabeling), 'The 3-cycle should admit a labeling'
    assert cyc.order == (0, 1, 2),         'The labeling should start at vertex 1 and move to its lower neighbour'
    assert cyc.to_dict() == {'order': [1, 2, 3]}, 'to_dict() should be 1-based'

    cyc = check_cycle_conditions(CYCLE_4)
    assert cyc.order == (0, 1, 2, 3), 'The 4-cycle should be walked in order'


def test_check_cycle_conditions_failures():
    chain = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]
    failure = check_cycle_conditions(chain)
    assert isinstance(failure, CycleFailure), 'A chain is not a cycle'
    assert failure.condition == 'cycle',      'The failed condition should be named'
    assert '[1, 3]' in failure.reason,        'The vertices of the wrong degree should be listed'

    no_unit = [[2, -2, -2], [-2, 2, -2], [-2, -2, 2]]
    failure = check_cycle_conditions(no_unit)
    assert failure.condition == 'unit_entry', 'An edge without a -1 entry should fail the second condition'

    with pytest.raises(RankTooSmall):
        check_cycle_conditions([[2, -3], [-3, 2]])


def test_subalgebra_cartan_golden():
    b = subalgebra_cartan(HYP_3, check_cycle_conditions(HYP_3))
    assert b.tolist() == B_HYP_3, 'B should match the closed form for the hyperbolic 3-cycle'
    assert b.classify().kind is MatrixKind.INDEFINITE, 'B should be indefinite'
    assert not b.symmetrize().exists,                 'B should not be symmetrizable'
    assert b == read_matrix('fixture:hyperbolic-3-cycle-subalgebra'), 'B should match the bundled fixture'


def test_subalgebra_cartan_rejects_bad_labelings():
    all_two = [[2, -2, -2], [-2, 2, -2], [-2, -2, 2]]
    with pytest.raises(NotACartanMatrix) as err:
        subalgebra_cartan(all_two, CycleLabeling((0, 1, 2)))
    assert 'not a Cartan matrix' in str(err.value), 'Error message should say B failed the axioms'
    assert err.value.__cause__ is not None,         'The axiom error should be chained'


def _random_cycle(rng, n):
    a = np.eye(n, dtype=int) * 2
    for k in range(n):
        p, q = k, (k + 1) % n
        if rng.random() < 0.5:
            p, q = q, p
        a[p, q] = -1
        a[q, p] = -int(rng.integers(1, 4))
    return CartanMatrix(a)


def test_subalgebra_diagonal_is_two_on_random_cycles():
    rng = np.random.default_rng(47)
    for _ in range(40):
        a = _random_cycle(rng, int(rng.integers(3, 6)))
        cyc = check_cycle_conditions(a)
        assert isinstance(cyc, CycleLabeling), f'{a!r} should pass both cycle conditions'
        try:
            b = subalgebra_cartan(a, cyc)
        except NotACartanMatrix as err:
            assert not isinstance(err.__cause__, DiagonalNotTwo), f'b_ii should be 2 for {a!r}'
            continue
        assert all(b[i, i] == 2 for i in range(a.n)), f'b_ii should be 2 for {a!r}'


@pytest.mark.parametrize('a', [HYP_3, CYCLE_4])
def test_beta_reflections_lie_in_weyl_group(a):
    a = CartanMatrix(a)
    cyc = check_cycle_conditions(a)
    _, levels = enumerate_by_length(a, 4, return_elements=True)
    keys = {w.key for level in levels for w in level}
    for i in range(a.n):
        s = beta_reflection(a, cyc, i)
        assert s.key in keys, f's_β{i + 1} should be an element of W(A) of length at most 4'


@pytest.mark.parametrize('a', [HYP_3, CYCLE_4])
def test_beta_reflections(a):
    a = CartanMatrix(a)
    cyc = check_cycle_conditions(a)
    b = subalgebra_cartan(a, cyc)
    betas = [np.array(v, dtype=object) for v in beta_roots(a, cyc)]
    for i in range(a.n):
        s = beta_reflection(a, cyc, i)
        assert (s * s).is_identity(), 'A reflection should be an involution'
        for j in range(a.n):
            image = s.root_matrix.dot(betas[j])
            expected = betas[j] - b[i, j] * betas[i]
            assert list(image) == list(expected), f's_β{i + 1}(β{j + 1}) should be β{j + 1} - b_{i + 1}{j + 1}·β{i + 1}'


def test_build_regular_chain():
    result = build_regular_chain(HYP_3)
    assert isinstance(result, RegularSubalgebra),  'The hyperbolic 3-cycle should give a subalgebra'
    assert result.b.tolist() == B_HYP_3,          'B should match the golden matrix'
    assert result.b_hyperbolic is False,          'B should not be hyperbolic'
    assert result.to_dict()['b_type'] == 'Indefinite', 'to_dict() should report the type of B'

    result = build_regular_chain(CYCLE_4)
    assert result.b.tolist() == B_CYCLE_4,        'B should match the golden matrix for the 4-cycle'
    assert result.b.is_indecomposable(),          'B should be indecomposable'
    assert result.b_type.kind is MatrixKind.INDEFINITE, 'B should be indefinite'
    assert result.b_hyperbolic is False,          'B should not be hyperbolic'


def test_build_regular_chain_affine_branch():
    result = build_regular_chain(read_matrix('fixture:affine-branch-3'))
    assert isinstance(result, Unavailable),  'A rank-3 matrix with an affine pair falls outside the construction'
    assert result.to_dict() == {'available': False, 'reason': 'affine 2x2 branch'}, 'The reason should be reported'


def test_build_regular_chain_preconditions():
    with pytest.raises(PreconditionViolated) as err:
        build_regular_chain([[2, -2, -2], [-2, 2, -2], [-2, -2, 2]])
    assert 'symmetrizable' in str(err.value), 'Symmetrizable input should be rejected'

    with pytest.raises(NotIndefinite):
        build_regular_chain([[2, -1, 0], [-1, 2, -1], [0, -1, 2]])

    with pytest.raises(RankTooSmall):
        build_regular_chain([[2, -2], [-3, 2]])

    not_hyperbolic = [[2, -1, -4, -1], [-4, 2, -1, -1], [-1, -4, 2, -1], [-1, -1, -2, 2]]
    with pytest.raises(PreconditionViolated) as err:
        build_regular_chain(not_hyperbolic)
    assert 'not hyperbolic' in str(err.value), 'Non-hyperbolic input should be rejected'
