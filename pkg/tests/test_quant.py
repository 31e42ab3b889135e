from fractions import Fraction

import pytest

from src.algebra.errors import (
    InvariantError,
    LegCountError,
    NotInvertibleError,
    RankError,
    SymmetryError,
)
from src.algebra.freealg import MultiTensor, mt_exp, words_up_to
from src.algebra.qlba import (
    Bivector,
    euclidean,
    minkowski,
    pr_qlba,
    qlba_from_bivector,
    twist_qlba,
    vector_tensor,
)
from src.algebra.quant import (
    ORDER2_TERM_NAMES,
    EndoMap,
    QhData,
    antipode_closed_form,
    classical_limit,
    coassoc_defect,
    coboundary_quantize,
    convolution,
    counit_defects,
    extend_coproduct,
    order2_family,
    order2_solve,
    pentagon_defect,
    rank2_quantize,
    skew_classical_part,
    twist_qh,
    undeformed,
    unit_counit,
)

ELEMENTARY = Bivector.outer((1, 0), (0, 1))


def _words(dim: int, degree: int, order: int) -> list:
    return [MultiTensor.word(word, dim, order) for word in words_up_to(dim, degree) if word]


def _is_quasi_hopf(qh: QhData, degree: int = 2) -> bool:
    return (all(coassoc_defect(qh, t).is_zero() for t in _words(qh.dim, degree, qh.order))
            and pentagon_defect(qh).is_zero()
            and all(d.is_zero() for d in counit_defects(qh).values()))


@pytest.fixture(scope='module')
def rank2():
    return rank2_quantize(ELEMENTARY, 3)


def test_undeformed_structure():
    qh = undeformed(2, 3)
    assert _is_quasi_hopf(qh)
    assert classical_limit(qh) == qlba_from_bivector(Bivector.zero(2))


def test_coproduct_is_extended_multiplicatively():
    qh = undeformed(2, 2)
    assert str(extend_coproduct(qh, MultiTensor.word((0, 1), 2, 2))) == \
        '1 ⊗ e0e1 + e0 ⊗ e1 + e0e1 ⊗ 1 + e1 ⊗ e0'


def test_rank2_structures_are_quasi_hopf(rank2):
    aprime, a = rank2
    assert aprime.phi == MultiTensor.unit(2, 3, 3)
    assert _is_quasi_hopf(aprime)
    assert _is_quasi_hopf(a)
    assert a.phi.h_coefficient(1).is_zero()


def test_rank2_classical_limits(rank2):
    aprime, a = rank2
    assert classical_limit(a) == pr_qlba(ELEMENTARY.symmetric_part())
    assert classical_limit(aprime) == qlba_from_bivector(ELEMENTARY)


def test_rank2_needs_decomposable_bivector():
    with pytest.raises(RankError):
        rank2_quantize(euclidean(2), 3)


def test_classical_limit_preconditions(rank2):
    aprime, _ = rank2
    with pytest.raises(InvariantError):
        classical_limit(undeformed(2, 2))
    bad_phi = MultiTensor.unit(2, 3, 3) + MultiTensor.pure(((0,), (1,), ()), 2, 3).scale_h(1)
    with pytest.raises(InvariantError):
        classical_limit(QhData(2, 3, aprime.delta, bad_phi))


def test_twists_compose_as_products():
    qh = undeformed(2, 3)
    F1 = MultiTensor.unit(2, 2, 3) + ELEMENTARY.to_tensor(3).scale_h(1)
    F2 = MultiTensor.unit(2, 2, 3) + minkowski(2).to_tensor(3).scale_h(1)
    assert twist_qh(twist_qh(qh, F1), F2) == twist_qh(qh, F2 * F1)
    with pytest.raises(LegCountError):
        twist_qh(qh, MultiTensor.unit(2, 1, 3))
    with pytest.raises(NotInvertibleError):
        twist_qh(qh, MultiTensor.unit(2, 2, 3).scale(2) - MultiTensor.unit(2, 2, 3).scale(3))


def test_skew_classical_part_of_exponential_twist():
    F = mt_exp(ELEMENTARY.to_tensor(3).scale(Fraction(-1, 2)).scale_h(1))
    assert skew_classical_part(F) == ELEMENTARY.skew_part().to_tensor()
    with pytest.raises(InvariantError):
        skew_classical_part(ELEMENTARY.to_tensor(3))


def test_quantum_twist_lifts_classical_twist(rank2):
    aprime, _ = rank2
    F = mt_exp(ELEMENTARY.to_tensor(3).scale(Fraction(-1, 2)).scale_h(1))
    f = skew_classical_part(F)
    assert classical_limit(twist_qh(aprime, F)) == twist_qlba(classical_limit(aprime), f)


def test_coboundary_quantization():
    s = Bivector.from_rows([[0, 1, -1], [-1, 0, 2], [1, -2, 0]])
    qh = coboundary_quantize(s, 3)
    assert _is_quasi_hopf(qh, degree=1)
    assert classical_limit(qh) == qlba_from_bivector(s)
    with pytest.raises(SymmetryError):
        coboundary_quantize(minkowski(2), 3)


def test_antipode_is_convolution_inverse_of_identity(rank2):
    aprime, _ = rank2
    antipode = antipode_closed_form(ELEMENTARY, 3)
    identity = EndoMap.identity(2, 3)
    for t in [MultiTensor.unit(2, 1, 3)] + _words(2, 2, 3):
        assert convolution(antipode, identity, aprime, t) == unit_counit(t)


def test_antipode_on_the_left_vector():
    antipode = antipode_closed_form(ELEMENTARY, 3)
    v, _ = ELEMENTARY.decompose()
    v = vector_tensor(v, 3)
    assert antipode(v) == -v
    with pytest.raises(RankError):
        antipode_closed_form(minkowski(2), 3)


def test_endo_map_needs_one_leg_images(rank2):
    aprime, _ = rank2
    with pytest.raises(LegCountError):
        EndoMap(aprime.delta)


def test_order2_family_is_quasi_hopf_mod_h3():
    g = minkowski(2)
    for alpha2, beta2 in [(0, 0), (Fraction(1, 2), Fraction(1, 2)), (1, -2)]:
        qh = order2_family(g, alpha2, beta2, 3)
        for i in range(2):
            assert coassoc_defect(qh, MultiTensor.generator(i, 2, 3)).is_zero()
        assert pentagon_defect(qh).is_zero()
        assert classical_limit(qh) == pr_qlba(g)


@pytest.mark.slow
def test_order2_system_at_three_dimensions():
    solution = order2_solve(minkowski(3))
    assert len(ORDER2_TERM_NAMES) == 12
    assert solution.rank == 10
    assert solution.solutions.dimension == 2
    assert solution.matches
    for parameters in [(0, 0), (1, 0), (Fraction(-3, 2), 2)]:
        point = solution.family.point(parameters)
        assert not any(solution.system.residual(point))
    off = list(solution.family.particular)
    off[1] += 1
    assert any(solution.system.residual(off))
    report = solution.to_json()
    assert report['rank'] == 10
    assert report['matches_closed_form'] is True


def test_order2_needs_symmetric_metric():
    with pytest.raises(SymmetryError):
        order2_solve(ELEMENTARY)
    with pytest.raises(SymmetryError):
        order2_family(ELEMENTARY)
