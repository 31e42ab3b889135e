import pytest
from hypothesis import given

from src.algebra.coalgebra import (
    GeneratorMap,
    MorphismExtension,
    Verdict,
    apply_delta0_to_leg,
    co_leibniz_check,
    counit,
    counit_leg,
    delta0,
    delta0_word,
    derivation_extend,
    iterated_delta0,
)
from src.algebra.errors import LegCountError, ShapeMismatchError
from src.algebra.freealg import MultiTensor
from src.algebra.qlba import minkowski, pr_qlba
from src.algebra.scalars import HSeries

from strategies import multitensors


def test_delta0_of_a_word():
    assert str(delta0_word((0, 1), 2, 1)) == '1 ⊗ e0e1 + e0 ⊗ e1 + e0e1 ⊗ 1 + e1 ⊗ e0'
    repeated = delta0_word((0, 0), 2, 1)
    assert repeated.coefficient(((0,), (0,))) == HSeries.constant(2, 1)


@given(multitensors(legs=1, order=1))
def test_delta0_is_coassociative(t):
    coproduct = delta0(t)
    assert apply_delta0_to_leg(coproduct, 1) == apply_delta0_to_leg(coproduct, 2)


@given(multitensors(legs=1, order=1), multitensors(legs=1, order=1))
def test_delta0_is_multiplicative(a, b):
    assert delta0(a * b) == delta0(a) * delta0(b)


@given(multitensors(legs=1, order=1))
def test_counit_on_either_leg(t):
    coproduct = delta0(t)
    assert counit_leg(coproduct, 1) == t
    assert counit_leg(coproduct, 2) == t


def test_counit():
    t = MultiTensor.unit(2, 1, 1).scale(3) + MultiTensor.generator(1, 2, 1)
    assert counit(t) == HSeries.constant(3, 1)
    with pytest.raises(LegCountError):
        counit(MultiTensor.unit(2, 2, 1))
    with pytest.raises(LegCountError):
        counit_leg(t, 1)


def test_iterated_delta0_of_a_generator():
    x = MultiTensor.generator(0, 2, 1)
    expected = (MultiTensor.pure(((0,), (), ()), 2, 1)
                + MultiTensor.pure(((), (0,), ()), 2, 1)
                + MultiTensor.pure(((), (), (0,)), 2, 1))
    assert iterated_delta0(x, 3) == expected


def test_antihomomorphism_reverses_products():
    generators = GeneratorMap.from_function(
        2, 1, 1, lambda i: MultiTensor.generator(i, 2, 1).scale(-1))
    reverse = MorphismExtension(generators, antihomomorphism=True)
    forward = MorphismExtension(generators)
    word = MultiTensor.word((0, 0, 1), 2, 1)
    assert reverse(word) == -MultiTensor.word((1, 0, 0), 2, 1)
    assert forward(word) == -word


def test_generator_map_shapes_are_checked():
    with pytest.raises(ShapeMismatchError):
        GeneratorMap(2, 1, 2, (MultiTensor.unit(2, 2, 1),))
    with pytest.raises(ShapeMismatchError):
        GeneratorMap(2, 1, 2, (MultiTensor.unit(2, 2, 1), MultiTensor.unit(2, 1, 1)))


def test_co_leibniz_holds_for_the_metric_cobracket():
    derivation = pr_qlba(minkowski(2)).derivation
    for letters in [(0,), (0, 1), (1, 0, 1), (0, 0, 1, 1)]:
        assert co_leibniz_check(derivation, MultiTensor.word(letters, 2, 1))


def test_co_leibniz_fails_when_first_leg_is_not_primitive():
    images = GeneratorMap.from_function(
        2, 1, 2, lambda i: MultiTensor.pure(((0, 0), (i,)), 2, 1))
    verdict = co_leibniz_check(derivation_extend(images), MultiTensor.generator(0, 2, 1))
    assert not verdict
    assert verdict.witness.legs == 3


def test_derivation_needs_two_legs_over_delta0():
    images = GeneratorMap.from_function(2, 1, 1, lambda i: MultiTensor.generator(i, 2, 1))
    with pytest.raises(LegCountError):
        derivation_extend(images)


def test_verdict_combine_returns_first_failure():
    failure = Verdict(False, 'first')
    assert Verdict.combine([Verdict(True), failure, Verdict(False, 'second')]) is failure
    assert Verdict.combine([Verdict(True)]).ok
