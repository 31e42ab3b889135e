from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from src.algebra.errors import InconsistentSystemError, ShapeMismatchError
from src.algebra.linsolve import (
    AffineSpace,
    LinearSystem,
    bareiss_rank,
    nullspace,
    rref,
    solve_affine,
)

from strategies import rationals

matrices = st.integers(1, 4).flatmap(
    lambda cols: st.lists(st.lists(rationals, min_size=cols, max_size=cols),
                          min_size=1, max_size=5))


@given(matrices)
def test_bareiss_rank_agrees_with_sympy(rows):
    expected = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row]
                             for row in rows]).rank()
    assert bareiss_rank(rows) == expected


@pytest.mark.parametrize('rows, rank', [
    ([[0, 0], [0, 0]], 0),
    ([[1, 2], [2, 4]], 1),
    ([[0, 1], [1, 0]], 2),
    ([['1/2', '1/3'], [3, 2]], 1),
    ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], 2),
    ([], 0),
])
def test_bareiss_rank_cases(rows, rank):
    assert bareiss_rank(rows) == rank


def test_rows_must_have_the_same_length():
    with pytest.raises(ShapeMismatchError):
        bareiss_rank([[1, 2], [3]])


def test_rref_and_nullspace():
    reduced, pivots = rref([[1, 2, 3], [2, 4, 7]])
    assert pivots == (0, 2)
    assert reduced[0] == (1, 2, 0)
    assert nullspace([[1, 2, 3], [2, 4, 7]]) == ((Fraction(-2), Fraction(1), Fraction(0)),)


def test_solve_affine():
    space = solve_affine([[1, 1, 0], [0, 0, 1]], [3, '1/2'])
    assert space.dimension == 1
    assert space.ambient == 3
    assert space.particular == (3, 0, Fraction(1, 2))
    assert space.contains((1, 2, '1/2'))
    assert not space.contains((1, 1, '1/2'))
    assert space.point([1]) in {(2, 1, Fraction(1, 2)), (4, -1, Fraction(1, 2))}


def test_inconsistent_system():
    with pytest.raises(InconsistentSystemError):
        solve_affine([[1, 1], [2, 2]], [1, 3])


def test_affine_spaces_compare_as_sets():
    a = AffineSpace((Fraction(1), Fraction(0)), ((Fraction(1), Fraction(1)),))
    b = AffineSpace((Fraction(3), Fraction(2)), ((Fraction(-2), Fraction(-2)),))
    c = AffineSpace((Fraction(0), Fraction(0)), ((Fraction(1), Fraction(1)),))
    assert a.equals(b)
    assert not a.equals(c)
    with pytest.raises(ShapeMismatchError):
        a.point([])


def test_linear_system_residual_and_json():
    system = LinearSystem(((1, 2), (0, 1)), (5, 2))
    assert system.rank() == 2
    assert system.unknowns == 2
    assert system.residual((1, 2)) == (0, 0)
    assert system.solve().particular == (1, 2)
    assert system.to_json() == {'matrix': [['1', '2'], ['0', '1']], 'rhs': ['5', '2']}
    with pytest.raises(ShapeMismatchError):
        LinearSystem(((1,),), (1, 2))
