from fractions import Fraction

import pytest

from src.algebra.errors import NotPrimitiveError, RankError, ShapeMismatchError, SymmetryError
from src.algebra.freealg import MultiTensor
from src.algebra.lie import lyndon_basis
from src.algebra.qlba import (
    Bivector,
    QlbaData,
    alt_condition_check,
    cocycle_check,
    cojacobi_rank_test,
    cyb,
    delta_s,
    euclidean,
    lambda2_check,
    lambda3_check,
    minkowski,
    parse_bivector,
    phi_s,
    pr_qlba,
    qlba_from_bivector,
    quasi_cojacobi_check,
    twist_qlba,
    vector_tensor,
)


def _elementary() -> Bivector:
    return Bivector.outer((1, 0), (0, 1))


def _zero_qlba(dim: int) -> QlbaData:
    return qlba_from_bivector(Bivector.zero(dim))


def test_metric_cobracket_on_a_generator():
    image = pr_qlba(minkowski(2)).delta[1]
    assert image.is_zero() is False
    first = pr_qlba(minkowski(2)).delta[0]
    assert {key: coeff.constant_term for key, coeff in first.items()} == {
        ((1, 0), (1,)): 1,
        ((0, 1), (1,)): -1,
        ((1,), (1, 0)): -1,
        ((1,), (0, 1)): 1,
    }
    assert str(first) == '-e0e1 ⊗ e1 + e1 ⊗ e0e1 - e1 ⊗ e1e0 + e1e0 ⊗ e1'


def test_metric_structure_equals_delta_s_of_the_metric():
    g = minkowski(3)
    q = pr_qlba(g)
    assert q == QlbaData(3, delta_s(g), phi_s(g))


def test_metric_must_be_symmetric():
    with pytest.raises(SymmetryError):
        pr_qlba(_elementary())


def test_bivector_parts_and_parsing():
    s = parse_bivector([['1/2', 1], [0, '-3']])
    assert s.entry(0, 0) == Fraction(1, 2)
    assert s.symmetric_part() + s.skew_part() == s
    assert s.symmetric_part().is_symmetric()
    assert s.skew_part().is_skew()
    assert s.to_rows() == [['1/2', '1'], ['0', '-3']]
    with pytest.raises(ShapeMismatchError):
        Bivector(2, ((1, 0),))


def test_decompose_rank_one():
    s = Bivector.outer((2, 0, 1), (0, 3, 1))
    v, w = s.decompose()
    assert Bivector.outer(v, w) == s
    with pytest.raises(RankError):
        euclidean(2).decompose()
    assert vector_tensor(v).legs == 1


@pytest.mark.parametrize('g', [minkowski(2), euclidean(2), minkowski(3)], ids=str)
def test_quasi_cojacobi_holds_on_words(g):
    q = pr_qlba(g)
    for letters in [(0,), (1,), (0, 1), (1, 0, 1)]:
        assert quasi_cojacobi_check(q, MultiTensor.word(letters, g.dim, 1))


def test_alt_condition_and_lambda3():
    q = pr_qlba(minkowski(3))
    assert alt_condition_check(q)
    assert lambda3_check(q.phi)


def test_lambda2_on_lyndon_brackets():
    q = pr_qlba(minkowski(2))
    for bracketing in lyndon_basis(2, 3):
        assert lambda2_check(q, bracketing.expansion), bracketing.word


def test_cocycle_on_lyndon_brackets():
    q = pr_qlba(minkowski(2))
    basis = lyndon_basis(2, 2)
    for x in basis:
        for y in basis:
            assert cocycle_check(q, x.expansion, y.expansion)


def test_cocycle_needs_primitive_arguments():
    q = pr_qlba(minkowski(2))
    with pytest.raises(NotPrimitiveError):
        cocycle_check(q, MultiTensor.word((0, 1), 2, 1), MultiTensor.generator(0, 2, 1))


def test_strict_cojacobi_iff_rank_at_most_one():
    assert cojacobi_rank_test(_elementary())
    assert cojacobi_rank_test(Bivector.zero(2))
    failure = cojacobi_rank_test(minkowski(2))
    assert not failure
    assert failure.witness.legs == 3


def test_phi_of_skew_bivector_is_minus_cyb():
    s = Bivector.from_rows([[0, 1, -2], [-1, 0, 1], [2, -1, 0]])
    assert phi_s(s) == -cyb(s.to_tensor())


def test_twist_by_skew_part_recovers_metric_structure():
    s = _elementary()
    twisted = twist_qlba(qlba_from_bivector(s), s.skew_part())
    assert twisted == pr_qlba(s.symmetric_part())


def test_coboundary_twist_is_trivial():
    s = Bivector.from_rows([[0, 2], [-2, 0]])
    assert twist_qlba(qlba_from_bivector(s), s) == _zero_qlba(2)


def test_twists_are_additive():
    q = pr_qlba(euclidean(3))
    f1 = Bivector.from_rows([[0, 1, 0], [-1, 0, 2], [0, -2, 0]])
    f2 = Bivector.from_rows([[0, 0, -1], [0, 0, 1], [1, -1, 0]])
    assert twist_qlba(twist_qlba(q, f1), f2) == twist_qlba(q, f1 + f2)


def test_twist_requires_antisymmetric_element():
    with pytest.raises(SymmetryError):
        twist_qlba(pr_qlba(minkowski(2)), minkowski(2))
