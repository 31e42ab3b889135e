"""
linsolve.py

Álgebra linear exata sobre Q para o sistema de ordem h² da quantização geral:
posto por eliminação livre de frações (Bareiss), forma escalonada reduzida,
solução particular, base do núcleo e igualdade de subespaços afins.

Classes:
    LinearSystem: matriz e lado direito racionais, com serialização para JSON.
    AffineSpace: ponto particular mais o span de uma base de direções.

Functions:
    bareiss_rank(matrix): posto por eliminação livre de frações.
    rref(matrix): forma escalonada reduzida e colunas pivô (sympy).
    nullspace(matrix): base do núcleo (sympy).
    solve_affine(matrix, rhs): conjunto solução de M c = rhs.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

import sympy

from src.algebra.errors import InconsistentSystemError, ShapeMismatchError
from src.algebra.scalars import to_rational

logger = logging.getLogger(__name__)

Vector = tuple
Matrix = tuple


def _as_matrix(rows: Sequence[Sequence]) -> Matrix:
    matrix = tuple(tuple(to_rational(x) for x in row) for row in rows)
    if matrix and len({len(row) for row in matrix}) != 1:
        raise ShapeMismatchError('linhas de comprimentos diferentes')
    return matrix


def _to_sympy(rows: Matrix, cols: int) -> sympy.Matrix:
    if not rows:
        return sympy.zeros(0, cols)
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row]
                         for row in rows])


def _from_sympy(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def bareiss_rank(matrix: Sequence[Sequence]) -> int:
    """
    Posto exato pela eliminação de Bareiss, depois de limpar os denominadores
    linha a linha; todas as divisões da eliminação são exatas em Z.
    """
    rows = []
    for row in _as_matrix(matrix):
        scale = lcm(*(x.denominator for x in row)) if row else 1
        rows.append([int(x * scale) for x in row])
    if not rows or not rows[0]:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    rank = 0
    previous_pivot = 1
    for col in range(n_cols):
        pivot_row = next((r for r in range(rank, n_rows) if rows[r][col]), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        for r in range(rank + 1, n_rows):
            factor = rows[r][col]
            for c in range(col, n_cols):
                rows[r][c] = (pivot * rows[r][c] - factor * rows[rank][c]) // previous_pivot
        previous_pivot = pivot
        rank += 1
        if rank == n_rows:
            break
    return rank


def rref(matrix: Sequence[Sequence]) -> tuple:
    """
    Returns:
        tuple[Matrix, tuple[int, ...]]: a forma escalonada reduzida e os
        índices das colunas pivô.
    """
    rows = _as_matrix(matrix)
    cols = len(rows[0]) if rows else 0
    reduced, pivots = _to_sympy(rows, cols).rref()
    result = tuple(tuple(_from_sympy(x) for x in reduced.row(i)) for i in range(reduced.rows))
    return result, tuple(pivots)


def nullspace(matrix: Sequence[Sequence], cols: int = None) -> tuple:
    rows = _as_matrix(matrix)
    cols = len(rows[0]) if rows else cols
    basis = _to_sympy(rows, cols).nullspace()
    return tuple(tuple(_from_sympy(x) for x in vector) for vector in basis)


def _in_span(basis: Sequence[Vector], vector: Vector) -> bool:
    if not any(vector):
        return True
    if not basis:
        return False
    return bareiss_rank(list(basis) + [vector]) == bareiss_rank(basis)


@dataclass(frozen=True)
class AffineSpace:
    """
    Conjunto {particular + sum t_k basis[k]} em Q^n.

    Attrs:
        particular (Vector): um ponto do conjunto.
        basis (tuple[Vector, ...]): direções linearmente independentes.
    """
    particular: Vector
    basis: tuple

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def ambient(self) -> int:
        return len(self.particular)

    def point(self, parameters: Sequence) -> Vector:
        if len(parameters) != self.dimension:
            raise ShapeMismatchError(
                f'{len(parameters)} parâmetros para um espaço de dimensão {self.dimension}'
            )
        point = list(self.particular)
        for t, direction in zip(parameters, self.basis):
            t = to_rational(t)
            point = [p + t * x for p, x in zip(point, direction)]
        return tuple(point)

    def contains(self, point: Sequence) -> bool:
        offset = tuple(to_rational(p) - q for p, q in zip(point, self.particular))
        return _in_span(self.basis, offset)

    def equals(self, other: 'AffineSpace') -> bool:
        """Igualdade como subespaços afins, independente da parametrização."""
        if self.ambient != other.ambient or self.dimension != other.dimension:
            return False
        if not self.contains(other.particular):
            return False
        return all(_in_span(self.basis, direction) for direction in other.basis)


@dataclass(frozen=True)
class LinearSystem:
    """
    Sistema M c = rhs sobre Q.

    Attrs:
        matrix (Matrix): linhas de M.
        rhs (Vector): lado direito.
    """
    matrix: Matrix
    rhs: Vector

    def __post_init__(self) -> None:
        object.__setattr__(self, 'matrix', _as_matrix(self.matrix))
        object.__setattr__(self, 'rhs', tuple(to_rational(x) for x in self.rhs))
        if len(self.matrix) != len(self.rhs):
            raise ShapeMismatchError(f'{len(self.matrix)} linhas e {len(self.rhs)} termos independentes')

    @property
    def unknowns(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    def rank(self) -> int:
        return bareiss_rank(self.matrix)

    def residual(self, point: Sequence) -> Vector:
        point = tuple(to_rational(x) for x in point)
        return tuple(sum((a * x for a, x in zip(row, point)), Fraction(0)) - b
                     for row, b in zip(self.matrix, self.rhs))

    def solve(self) -> AffineSpace:
        return solve_affine(self.matrix, self.rhs)

    def to_json(self) -> dict:
        return {
            'matrix': [[str(x) for x in row] for row in self.matrix],
            'rhs': [str(x) for x in self.rhs],
        }


def solve_affine(matrix: Sequence[Sequence], rhs: Sequence) -> AffineSpace:
    """
    Conjunto solução de M c = rhs.

    Params:
        matrix (Sequence[Sequence]): M, com entradas racionais.
        rhs (Sequence): lado direito.

    Raises:
        InconsistentSystemError: se o sistema não tiver solução.

    Returns:
        AffineSpace: solução particular (variáveis livres em zero) e base do núcleo.
    """
    rows = _as_matrix(matrix)
    rhs = tuple(to_rational(x) for x in rhs)
    cols = len(rows[0]) if rows else 0
    augmented = tuple(row + (b,) for row, b in zip(rows, rhs))
    reduced, pivots = rref(augmented) if augmented else ((), ())
    if cols in pivots:
        raise InconsistentSystemError('sistema linear sem solução')
    particular = [Fraction(0)] * cols
    for i, col in enumerate(pivots):
        particular[col] = reduced[i][cols]
    basis = nullspace(rows, cols)
    logger.debug('sistema %sx%s: posto %s, núcleo de dimensão %s',
                 len(rows), cols, len(pivots), len(basis))
    return AffineSpace(tuple(particular), basis)
