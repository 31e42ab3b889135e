import itertools
import json
from fractions import Fraction
from pathlib import Path

import pytest

from src.algebra.coalgebra import delta0_word
from src.algebra.errors import IndexRangeError, InvariantError
from src.algebra.freealg import MultiTensor
from src.algebra.qlba import minkowski, pr_qlba
from src.algebra.traces import (
    CyclicTensor,
    WordFunctional,
    bracket_D,
    bracket_constant,
    canonical_rotation,
    cyclic_classes,
    decompose_z,
    find_jacobi_witness,
    first_nonzero_bracket,
    is_cyclic,
    jacobiator,
    leibniz_defect,
    memoized_bracket,
    pr_bracket,
    pr_bracket_direct,
    shuffle_words,
    unshuffle_product,
    z_symbol,
)

GOLDEN = Path(__file__).parent / 'golden' / 'jacobi_witness.json'


@pytest.fixture(scope='module')
def q2():
    return pr_qlba(minkowski(2))


def test_z_symbol_counts_periodic_rotations():
    assert z_symbol((0, 1), 2).terms == {(0, 1): 1, (1, 0): 1}
    assert z_symbol((0, 0), 1).terms == {(0, 0): 2}
    assert decompose_z(z_symbol((0, 0), 1)) == [((0, 0), 1)]
    assert decompose_z(z_symbol((1, 0, 1), 2)) == [((0, 1, 1), 1)]
    with pytest.raises(IndexRangeError):
        z_symbol((), 2)
    with pytest.raises(IndexRangeError):
        z_symbol((2,), 2)


def test_canonical_rotation_and_classes():
    assert canonical_rotation((1, 0, 0)) == (0, 0, 1)
    assert cyclic_classes(2, 3) == [(0, 0, 0), (0, 0, 1), (0, 1, 1), (1, 1, 1)]


def test_cyclic_tensor_rejects_non_invariant_coefficients():
    with pytest.raises(InvariantError):
        CyclicTensor(2, {(0, 1): 1})
    assert not is_cyclic(WordFunctional.word((0, 1), 2))


def test_text_and_json_forms():
    assert str(z_symbol((0, 1), 2).scale(2).as_cyclic()) == '2*Z(0,1)'
    assert WordFunctional(2, {(0, 1, 0): Fraction(1, 2)}).to_json() == {'010': '1/2'}
    assert str(CyclicTensor.zero(2)) == '0'


def test_pairing_uses_the_constant_term():
    f = WordFunctional(2, {(0,): 3, (0, 1): 1})
    t = MultiTensor.word((0,), 2, 2) + MultiTensor.word((0, 1), 2, 2).scale_h(1)
    assert f.pair(t) == 3


def test_unshuffle_product():
    assert shuffle_words((0,), (1,)) == {(0, 1): 1, (1, 0): 1}
    product = unshuffle_product(WordFunctional.word((0,), 2), WordFunctional.word((1,), 2))
    assert product.terms == {(0, 1): 1, (1, 0): 1}
    squared = unshuffle_product(z_symbol((0,), 2), z_symbol((0,), 2))
    assert isinstance(squared, CyclicTensor)
    assert squared.terms == {(0, 0): 2}


def test_unshuffle_product_is_dual_to_delta0():
    a = WordFunctional(2, {(0,): 1, (1, 1): 2})
    b = WordFunctional(2, {(1,): -1, (0, 1): 1})
    product = unshuffle_product(a, b)
    for word in [(0, 1), (1, 0, 1), (0, 1, 1, 1), (1, 1, 0, 1)]:
        expected = sum((a.value(u) * b.value(w) * coeff.constant_term
                        for (u, w), coeff in delta0_word(word, 2, 1).items()), Fraction(0))
        assert product.value(word) == expected


@pytest.fixture(scope='module')
def q3():
    return pr_qlba(minkowski(3))


@pytest.fixture(scope='module')
def first_pair(q3):
    return first_nonzero_bracket(q3)


def test_bracket_vanishes_below_total_degree_seven(q3):
    assert bracket_D(z_symbol((0, 1), 3), z_symbol((2,), 3), q3).is_zero()
    assert str(bracket_D(z_symbol((0, 1, 2), 3), z_symbol((0, 1, 2), 3), q3)) == '0'
    with pytest.raises(InvariantError):
        first_nonzero_bracket(q3, max_total=6)


def test_first_nonzero_bracket_has_total_degree_seven(q3, first_pair):
    mu, nu = first_pair
    assert len(mu) + len(nu) == 7
    assert not bracket_D(z_symbol(mu, 3), z_symbol(nu, 3), q3).is_zero()


def test_bracket_constant_is_one(q3, first_pair):
    assert bracket_constant(q3, minkowski(3), pair=first_pair) == 1


def test_direct_bracket_agrees_with_algebraic_bracket_at_total_degree_seven(q3):
    g = minkowski(3)
    nonzero = 0
    for mu in cyclic_classes(3, 4):
        for nu in cyclic_classes(3, 3):
            a, b = z_symbol(mu, 3), z_symbol(nu, 3)
            algebraic = bracket_D(a, b, q3)
            assert pr_bracket_direct(a, b, g) == algebraic, (mu, nu)
            nonzero += not algebraic.is_zero()
    assert nonzero > 0


def test_bilinear_extension(first_pair):
    g = minkowski(3)
    mu, nu = first_pair
    other = next(word for word in cyclic_classes(3, len(mu)) if word != mu)
    a = z_symbol(mu, 3) + z_symbol(other, 3).scale(2)
    b = z_symbol(nu, 3)
    expected = (pr_bracket_direct(z_symbol(mu, 3), b, g)
                + pr_bracket_direct(z_symbol(other, 3), b, g).scale(2))
    assert not expected.is_zero()
    assert pr_bracket(a.as_cyclic(), b, g) == expected
    with pytest.raises(InvariantError):
        pr_bracket_direct(a.as_cyclic(), b, g)


def test_bracket_is_antisymmetric_on_words(q2):
    words = [(0,), (1,), (0, 1), (1, 1, 0), (0, 1, 0)]
    for u, w in itertools.product(words, repeat=2):
        a, b = WordFunctional.word(u, 2), WordFunctional.word(w, 2)
        assert bracket_D(a, b, q2) == -bracket_D(b, a, q2)


def test_bracket_keeps_cyclic_classes_closed(q2):
    value = bracket_D(z_symbol((0, 0, 1), 2), z_symbol((0, 1, 1), 2), q2)
    assert isinstance(value, CyclicTensor)


@pytest.mark.slow
def test_jacobi_holds_around_a_nonzero_inner_bracket(q3, first_pair):
    bracket = memoized_bracket(q3)
    mu, nu = first_pair
    b, c = z_symbol(mu, 3), z_symbol(nu, 3)
    assert not bracket(b, c).is_zero()
    for word in [(0, 1, 2), (0, 0, 1)]:
        assert jacobiator(bracket, z_symbol(word, 3), b, c).is_zero(), word


def test_golden_jacobi_witness(q2):
    golden = json.loads(GOLDEN.read_text(encoding='utf-8'))
    a, b, c = (WordFunctional.word(golden[key], golden['dim']) for key in ('a', 'b', 'c'))
    value = jacobiator(memoized_bracket(q2), a, b, c)
    assert value.to_json() == golden['jacobiator']
    assert sum(len(golden[key]) for key in ('a', 'b', 'c')) == golden['total_degree']


def test_no_jacobi_witness_below_total_degree_five(q2):
    assert find_jacobi_witness(q2, 4) is None


@pytest.mark.slow
def test_jacobi_witness_search_finds_total_degree_five(q2):
    a, b, c, value = find_jacobi_witness(q2, 5)
    assert sum(len(next(iter(f.terms))) for f in (a, b, c)) == 5
    assert value


def test_bracket_is_a_derivation_of_the_unshuffle_product(q2):
    words = [(0,), (1,), (0, 1), (1, 1, 0)]
    for u, v, w in itertools.product(words, repeat=3):
        a, b, c = (WordFunctional.word(x, 2) for x in (u, v, w))
        assert leibniz_defect(q2, a, b, c).is_zero()
