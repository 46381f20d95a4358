import pytest

from kacmoody import _series
from kacmoody.cartan import MatrixKind
from kacmoody.errors import Decomposable, NonSymmetrizable, NotIndefinite
from kacmoody.invariants import bilinear_form
from kacmoody.matrix_io import list_fixtures, read_matrix
from kacmoody.topology import (
    PRINTED_GROUP_SERIES_FORM,
    Signature,
    cohomology_presentation,
    congruence_diagonalize,
    epsilon,
    extract_generator_sequence,
    flag_poincare,
    from_t_grading,
    group_poincare,
    homotopy_report,
    reconstruct_flag_series,
    signature_of,
    signature_tau,
    to_t_grading,
)
from kacmoody.weyl import enumerate_by_length
from fractions import Fraction

A2     = [[2, -1], [-1, 2]]
A22    = [[2, -2], [-2, 2]]
A23    = [[2, -2], [-3, 2]]
HYP_3  = [[2, -1, -1], [-1, 2, -1], [-2, -1, 2]]
SYM_3  = [[2, -2, -2], [-2, 2, -2], [-2, -2, 2]]
INF_3  = [[2, -1, -4], [-4, 2, -1], [-1, -4, 2]]


def _indefinite_fixtures():
    names = []
    for name in list_fixtures():
        a = read_matrix(f'fixture:{name}')
        if a.is_indecomposable() and a.classify().kind is MatrixKind.INDEFINITE:
            names.append(name)
    return names


def test_epsilon():
    assert epsilon(A23) == 1,   'Rank-2 matrices are symmetrizable'
    assert epsilon(HYP_3) == 0, 'The hyperbolic 3-cycle is not symmetrizable'

    with pytest.raises(Decomposable):
        epsilon([[2, 0], [0, 2]])


def test_congruence_diagonalize():
    assert signature_of([[0, 1], [1, 0]]) == Signature(1, 1, 0), 'A hyperbolic plane has signature (1, 1, 0)'
    assert signature_of([[1, 2], [2, 4]]) == Signature(1, 0, 1), 'A rank-1 form has one zero'
    assert signature_of([[0, 0], [0, 0]]) == Signature(0, 0, 2), 'The zero form has no nonzero inertia'

    diag = congruence_diagonalize([[2, -3, -3], [-3, 3, 0], [-3, 0, 1]])
    assert len(diag) == 3, 'There should be one diagonal entry per row'

    with pytest.raises(ValueError) as err:
        congruence_diagonalize([[1, 2], [3, 4]])
    assert 'symmetric' in str(err.value), 'Non-symmetric input should be rejected'


def test_signature_tau():
    assert signature_tau(A23).as_tuple() == (1, 1, 0), 'ψ of A_{2,3} should be indefinite'
    assert signature_tau(A22).as_tuple() == (1, 0, 1), 'ψ of an affine matrix should be degenerate'
    assert signature_tau(SYM_3).as_tuple() == (2, 1, 0), 'ψ of the all -2 matrix should have one negative direction'

    with pytest.raises(NonSymmetrizable):
        signature_tau(HYP_3)


def test_signature_under_scaling_of_psi():
    for cm in (A23, SYM_3):
        lam = bilinear_form(cm).lam
        base = signature_of(lam)
        assert signature_of([[3 * x for x in row] for row in lam]) == base, \
            'A positive multiple of ψ should have the same inertia'
        assert signature_of([[-x for x in row] for row in lam]) == Signature(base.q, base.p, base.r), \
            'A negative multiple of ψ should swap p and q'

    assert signature_of([[-x for x in row] for row in bilinear_form(SYM_3).lam]) == Signature(1, 2, 0), \
        '-ψ of the all -2 matrix should have inertia (1, 2, 0)'


def test_flag_poincare():
    assert flag_poincare(A23, 3) == [1, 0, 2, 0, 2, 0, 2], 'Lengths should be graded by q^(2l)'
    assert to_t_grading(from_t_grading([1, 2, 3])) == [1, 2, 3], 'to_t_grading() should invert from_t_grading()'


def test_growth_series_of_hyperbolic_3_cycle():
    assert enumerate_by_length(HYP_3, 6).counts == (1, 3, 6, 10, 15, 22, 31), \
        'The hyperbolic 3-cycle should grow as 1, 3, 6, 10, 15, 22, 31'


def test_extract_generator_sequence():
    i_even = extract_generator_sequence(HYP_3, flag_poincare(HYP_3, 6), 12)
    assert i_even == {4: 0, 6: 0, 8: 0, 10: 1, 12: i_even[12]}, 'The first generator of the 3-cycle should be in degree 10'

    assert extract_generator_sequence(A23, flag_poincare(A23, 8), 16) == {d: 0 for d in range(4, 17, 2)}, \
        'Rank-2 indefinite matrices have no even generators'

    i_even = extract_generator_sequence(INF_3, flag_poincare(INF_3, 4), 8)
    assert (i_even[4], i_even[6]) == (0, 2), 'The non-symmetrizable universal group should have i4 = 0, i6 = 2'

    i_even = extract_generator_sequence(SYM_3, flag_poincare(SYM_3, 4), 8)
    assert (i_even[4], i_even[6]) == (1, 2), 'The symmetrizable universal group should have i4 = 1, i6 = 2'

    with pytest.raises(ValueError) as err:
        extract_generator_sequence(A23, flag_poincare(A23, 2), 24)
    assert 'Increase the length cutoff' in str(err.value), 'A short series should be rejected'

    with pytest.raises(NotIndefinite):
        extract_generator_sequence(A2, flag_poincare(A2, 4), 8)


@pytest.mark.parametrize('name', _indefinite_fixtures())
def test_generator_sequence_round_trip(name):
    a = read_matrix(f'fixture:{name}')
    report = homotopy_report(a, max_length=12, max_degree=24)

    assert all(c >= 0 for c in report.i_even.values()), 'Every i_2k should be non-negative'
    assert report.i_odd == {3: report.epsilon}, 'The only odd generator should be in degree 3, iff symmetrizable'
    assert reconstruct_flag_series(a.n, report.epsilon, report.i_even, 24) == list(report.flag_series), \
        'The generator counts should rebuild the flag series to order q^24'


def test_flag_and_group_series_relation():
    for cm in (HYP_3, SYM_3):
        report = homotopy_report(cm, max_length=8, max_degree=16)
        eps, n = report.epsilon, report.n
        lhs = _series.product([
            report.flag_series,
            _series.binomial(3, 1, eps, 16),
            _series.binomial(2, -1, n, 16),
        ], 16)
        rhs = _series.product([report.group_series, _series.binomial(4, -1, eps, 16)], 16)
        assert lhs == rhs, 'P_F·(1 + q³)^ε·(1 - q²)^n should equal P_G·(1 - q⁴)^ε'
        assert group_poincare(report) == list(report.group_series), 'group_poincare() should match the report'


def test_homotopy_report_depends_only_on_epsilon_for_universal_groups():
    non_symmetrizable = [INF_3, [[2, -2, -4], [-4, 2, -2], [-2, -4, 2]], [[2, -1, -5], [-5, 2, -1], [-1, -5, 2]]]
    symmetric = [SYM_3, [[2, -3, -3], [-3, 2, -3], [-3, -3, 2]], [[2, -2, -3], [-2, 2, -4], [-3, -4, 2]]]
    for group in (non_symmetrizable, symmetric):
        reports = [homotopy_report(cm, max_length=8, max_degree=16).to_dict() for cm in group]
        assert reports[0] == reports[1] == reports[2], \
            'Matrices with every product a_ij·a_ji >= 4 and equal ε should give identical reports'


def test_homotopy_report():
    report = homotopy_report(A23, max_length=8, max_degree=16)
    assert report.epsilon == 1,                          'A_{2,3} is symmetrizable'
    assert report.tau == Signature(1, 1, 0),             'τ should be the inertia of ψ'
    assert report.group_series[:5] == (1, 0, 0, 1, 0),   'G(A_{2,3}) should look like S³ rationally'
    assert report.connectivity == 2,                     'The degree-3 generator makes G 2-connected'
    assert not report.connectivity_is_lower_bound,       'A generator was found below the cutoff'
    assert report.to_dict()['printed_group_series_form'] == PRINTED_GROUP_SERIES_FORM, \
        'The printed series convention should be recorded'

    report = homotopy_report(INF_3, max_length=8, max_degree=16)
    assert report.tau is None,        'τ is only defined for symmetrizable matrices'
    assert report.connectivity == 5,  'The first generator of the non-symmetrizable universal group is in degree 6'

    with pytest.raises(NotIndefinite):
        homotopy_report(A22)


def test_cohomology_presentation():
    p = cohomology_presentation(SYM_3, max_degree=8, max_length=4)
    assert p.relation is not None,             'A symmetrizable matrix should have the relation ψ'
    assert p.odd_generators == {3: 1},         'G(A) should have one odd generator y3'
    assert p.flag_text == 'Q[w1..w3]/<psi> (x) Q[z: deg 4 x1, deg 6 x2, deg 8 x3, ...]', \
        'The flag manifold presentation should list ψ and the generators z'
    assert p.group_text.startswith('Lambda(y3) (x) Q[z: deg 4 x1'), 'The group presentation should start with Λ(y3)'
    assert p.pi_odd_dim == 1,                  'π_odd should have dimension ε'

    d = p.to_dict()
    assert d['group']['i1'] == 0 and d['group']['i2'] == 0, 'There are no generators in degrees 1 and 2'

    p = cohomology_presentation(INF_3, max_degree=8, max_length=4)
    assert p.relation is None and p.odd_generators == {}, 'Non-symmetrizable matrices have no ψ and no y3'
    assert p.flag_text.startswith('Q[w1..w3] (x) Q[z: deg 6 x2'), 'The first generators should be in degree 6'
    assert p.connectivity == 5, 'G(A) should be 5-connected'


def test_series_helpers():
    assert _series.inverse([1, -1], 4) == [1, 1, 1, 1, 1],      '1/(1 - t) should expand to 1 + t + t² + ...'
    assert _series.power([1, 1], -2, 3) == [1, -2, 3, -4],      'Negative powers should go through inverse()'
    assert _series.binomial(2, -1, 2, 5) == [1, 0, -2, 0, 1, 0], '(1 - t²)² should be 1 - 2t² + t⁴'
    assert _series.inverse([2, 1], 3) == [Fraction(1, 2), Fraction(-1, 4), Fraction(1, 8), Fraction(-1, 16)], \
        'Non-integral coefficients should stay exact'
    assert _series.mul_trunc([1, 1, 1], [1, -1], 3) == [1, 0, 0, -1], '(1 + t + t²)(1 - t) should be 1 - t³'
    assert _series.product([], 2) == [1, 0, 0],                       'The empty product should be 1'

    with pytest.raises(ZeroDivisionError):
        _series.inverse([0, 1], 3)
