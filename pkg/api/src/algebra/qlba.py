"""
qlba.py

Construção e verificação da quasi-biálgebra de Lie de Pohlmeyer-Rehren sobre a
álgebra de Lie livre: δ_s, φ_s, δ_g, φ_g, CYB, twists e todas as identidades
que definem uma QLBA.

Classes:
    Bivector: matriz d×d racional que representa s (ou a métrica g) em V⊗V.
    QlbaData: a estrutura (δ nos geradores, φ).

Functions:
    minkowski(dim): métrica diag(-1, 1, ..., 1).
    euclidean(dim): métrica identidade.
    parse_bivector(rows): lê uma matriz de racionais (ints ou textos "p/q").
    delta_s(s): δ_s(x) = [s, x⊗1] - [s^{21}, 1⊗x] nos geradores.
    phi_s(s): φ_s = -cp[s^{12}, s^{13}].
    pr_qlba(g): a QLBA de Pohlmeyer-Rehren de uma métrica simétrica.
    cyb(f): [f^{12},f^{13}] + [f^{12},f^{23}] + [f^{13},f^{23}].
    twist_qlba(q, f): twist por um elemento antissimétrico de Λ²L(V).
    cocycle_check(q, x, y): δ([x,y]) = x·δ(y) - y·δ(x).
    quasi_cojacobi_check(q, t): cp(D⊗id)D(t) = [(id⊗Δ₀)Δ₀(t), φ].
    alt_condition_check(q): Alt(δ⊗id⊗id)(φ) = 0.
    cojacobi_rank_test(s): se δ_s satisfaz co-Jacobi estrito.
    lambda2_check(q, element): δ(element) antissimétrico com pernas primitivas.
    lambda3_check(phi): Alt(φ)/6 = φ com pernas primitivas.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence, Union

import sympy

from src.algebra.coalgebra import (
    Derivation,
    GeneratorMap,
    Verdict,
    delta0,
    derivation_extend,
    iterated_delta0,
)
from src.algebra.errors import (
    LegCountError,
    NotPrimitiveError,
    RankError,
    ShapeMismatchError,
    SymmetryError,
)
from src.algebra.freealg import (
    MultiTensor,
    alt_sum,
    cyclic_sum3,
    leg_embed,
    mt_commutator,
    swap,
)
from src.algebra.lie import is_primitive, legs_primitive
from src.algebra.scalars import to_rational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Bivector:
    """
    Elemento de V⊗V dado pela matriz dos coeficientes.

    Attrs:
        dim (int): dimensão d.
        matrix (tuple[tuple[Fraction, ...], ...]): entrada (i, j) é o
        coeficiente de e_i⊗e_j.
    """
    dim: int
    matrix: tuple

    def __post_init__(self) -> None:
        rows = tuple(tuple(to_rational(x) for x in row) for row in self.matrix)
        if len(rows) != self.dim or any(len(row) != self.dim for row in rows):
            raise ShapeMismatchError(f'o bivetor precisa ser {self.dim}×{self.dim}')
        object.__setattr__(self, 'matrix', rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> 'Bivector':
        return cls(len(rows), tuple(tuple(row) for row in rows))

    @classmethod
    def zero(cls, dim: int) -> 'Bivector':
        return cls(dim, ((0,) * dim,) * dim)

    @classmethod
    def outer(cls, v: Sequence, w: Sequence) -> 'Bivector':
        """v⊗w a partir dos vetores de coordenadas."""
        return cls(len(v), tuple(tuple(to_rational(a) * to_rational(b) for b in w) for a in v))

    def entry(self, i: int, j: int) -> Fraction:
        return self.matrix[i][j]

    def transpose(self) -> 'Bivector':
        return Bivector(self.dim, tuple(zip(*self.matrix)))

    def __add__(self, other: 'Bivector') -> 'Bivector':
        return Bivector(self.dim, tuple(
            tuple(a + b for a, b in zip(row_a, row_b))
            for row_a, row_b in zip(self.matrix, other.matrix)
        ))

    def __neg__(self) -> 'Bivector':
        return self.scale(-1)

    def __sub__(self, other: 'Bivector') -> 'Bivector':
        return self + (-other)

    def scale(self, factor) -> 'Bivector':
        factor = to_rational(factor)
        return Bivector(self.dim, tuple(tuple(x * factor for x in row) for row in self.matrix))

    def symmetric_part(self) -> 'Bivector':
        return (self + self.transpose()).scale(Fraction(1, 2))

    def skew_part(self) -> 'Bivector':
        return (self - self.transpose()).scale(Fraction(1, 2))

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def is_skew(self) -> bool:
        return self == -self.transpose()

    def rank(self) -> int:
        matrix = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row]
                               for row in self.matrix])
        return int(matrix.rank())

    def decompose(self) -> tuple:
        """
        Vetores (v, w) com s = v⊗w, para s de posto <= 1.

        Raises:
            RankError: se o posto for >= 2.
        """
        if self.rank() > 1:
            raise RankError(f'bivetor de posto {self.rank()} não é decomponível')
        for i0, row in enumerate(self.matrix):
            for j0, pivot in enumerate(row):
                if pivot:
                    v = tuple(self.matrix[i][j0] for i in range(self.dim))
                    w = tuple(self.matrix[i0][j] / pivot for j in range(self.dim))
                    return v, w
        zero = (Fraction(0),) * self.dim
        return zero, zero

    def to_tensor(self, order: int = 1) -> MultiTensor:
        return MultiTensor(self.dim, 2, order, {
            ((i,), (j,)): x
            for i, row in enumerate(self.matrix) for j, x in enumerate(row) if x
        })

    def to_rows(self) -> list:
        return [[str(x) for x in row] for row in self.matrix]


def minkowski(dim: int) -> Bivector:
    return Bivector(dim, tuple(
        tuple((-1 if i == 0 else 1) if i == j else 0 for j in range(dim))
        for i in range(dim)
    ))


def euclidean(dim: int) -> Bivector:
    return Bivector(dim, tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim)))


def parse_bivector(rows: Sequence[Sequence]) -> Bivector:
    return Bivector.from_rows(rows)


def vector_tensor(coords: Sequence, order: int = 1) -> MultiTensor:
    """sum_i coords[i] e_i como tensor de 1 perna."""
    return MultiTensor(len(coords), 1, order,
                       {((i,),): c for i, c in enumerate(coords) if c})


def _legs_of_generator(index: int, dim: int, order: int, legs: int) -> list:
    x = MultiTensor.generator(index, dim, order)
    return [leg_embed(x, legs, (k,)) for k in range(1, legs + 1)]


@dataclass(frozen=True)
class QlbaData:
    """
    Uma QLBA (δ, φ) sobre L(V).

    Attrs:
        dim (int): dimensão d.
        delta (GeneratorMap): δ nos geradores, imagens de 2 pernas.
        phi (MultiTensor): φ, com 3 pernas.
    """
    dim: int
    delta: GeneratorMap
    phi: MultiTensor

    def __post_init__(self) -> None:
        if self.delta.target_legs != 2 or self.phi.legs != 3:
            raise LegCountError('δ precisa de 2 pernas e φ de 3')
        if self.phi.shape[0] != self.dim or self.delta.dim != self.dim:
            raise ShapeMismatchError('dimensões diferentes entre δ e φ')

    @property
    def order(self) -> int:
        return self.delta.order

    @cached_property
    def derivation(self) -> Derivation:
        """Extensão de δ a T(V) como derivação sobre Δ₀."""
        return derivation_extend(self.delta)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QlbaData):
            return NotImplemented
        return self.delta.images == other.delta.images and self.phi == other.phi

    def __hash__(self) -> int:
        return hash((self.delta.images, self.phi))


def delta_s(s: Bivector, order: int = 1) -> GeneratorMap:
    """δ_s(x) = [s, x⊗1] - [s^{21}, 1⊗x] em cada gerador."""
    tensor = s.to_tensor(order)
    flipped = swap(tensor)

    def image(index: int) -> MultiTensor:
        x1, x2 = _legs_of_generator(index, s.dim, order, 2)
        return mt_commutator(tensor, x1) - mt_commutator(flipped, x2)

    return GeneratorMap.from_function(s.dim, order, 2, image)


def phi_s(s: Bivector, order: int = 1) -> MultiTensor:
    tensor = s.to_tensor(order)
    s12 = leg_embed(tensor, 3, (1, 2))
    s13 = leg_embed(tensor, 3, (1, 3))
    return -cyclic_sum3(mt_commutator(s12, s13))


def pr_qlba(g: Bivector, order: int = 1) -> QlbaData:
    """
    A QLBA de Pohlmeyer-Rehren: δ_g(x) = [g, x⊗1 - 1⊗x] e
    φ_g = -[g^{12},g^{13}] + [g^{12},g^{23}] - [g^{13},g^{23}].

    Raises:
        SymmetryError: se g não for simétrico.
    """
    if not g.is_symmetric():
        raise SymmetryError('a métrica do colchete de Pohlmeyer-Rehren precisa ser simétrica')
    tensor = g.to_tensor(order)

    def image(index: int) -> MultiTensor:
        x1, x2 = _legs_of_generator(index, g.dim, order, 2)
        return mt_commutator(tensor, x1 - x2)

    g12 = leg_embed(tensor, 3, (1, 2))
    g13 = leg_embed(tensor, 3, (1, 3))
    g23 = leg_embed(tensor, 3, (2, 3))
    phi = (-mt_commutator(g12, g13) + mt_commutator(g12, g23)
           - mt_commutator(g13, g23))
    return QlbaData(g.dim, GeneratorMap.from_function(g.dim, order, 2, image), phi)


def qlba_from_bivector(s: Bivector, order: int = 1) -> QlbaData:
    """(δ_s, φ_s) para um s qualquer."""
    return QlbaData(s.dim, delta_s(s, order), phi_s(s, order))


def cyb(f: MultiTensor) -> MultiTensor:
    if f.legs != 2:
        raise LegCountError(f'CYB exige 2 pernas, recebeu {f.legs}')
    f12 = leg_embed(f, 3, (1, 2))
    f13 = leg_embed(f, 3, (1, 3))
    f23 = leg_embed(f, 3, (2, 3))
    return mt_commutator(f12, f13) + mt_commutator(f12, f23) + mt_commutator(f13, f23)


def twist_qlba(q: QlbaData, f: Union[Bivector, MultiTensor]) -> QlbaData:
    """
    Twist por f antissimétrico: δ^f(x) = δ(x) + [x⊗1 + 1⊗x, f] e
    φ^f = φ + cp(δ⊗id)(f) - CYB(f), com (δ⊗id) pela derivação na perna 1.

    Params:
        q (QlbaData): a estrutura de partida.
        f (Bivector | MultiTensor): bivetor ou tensor de 2 pernas em Λ²L(V).

    Raises:
        SymmetryError: se f não for antissimétrico.
    """
    if isinstance(f, Bivector):
        f = f.to_tensor(q.order)
    if f.legs != 2:
        raise LegCountError(f'o twist exige 2 pernas, recebeu {f.legs}')
    tensor = f.with_order(q.order)
    if swap(tensor) != -tensor:
        raise SymmetryError('o twist de uma QLBA exige f antissimétrico')

    def image(index: int) -> MultiTensor:
        x1, x2 = _legs_of_generator(index, q.dim, q.order, 2)
        return q.delta[index] + mt_commutator(x1 + x2, tensor)

    delta = GeneratorMap.from_function(q.dim, q.order, 2, image)
    phi = q.phi + cyclic_sum3(q.derivation.on_leg(tensor, 1)) - cyb(tensor)
    return QlbaData(q.dim, delta, phi)


def cocycle_check(q: QlbaData, x: MultiTensor, y: MultiTensor) -> Verdict:
    """
    δ([x,y]) = x·δ(y) - y·δ(x), com a ação adjunta pelo coproduto diagonal.

    Raises:
        NotPrimitiveError: se x ou y não for primitivo.
    """
    for element in (x, y):
        if not is_primitive(element):
            raise NotPrimitiveError(f'elemento não primitivo: {element}')
    derivation = q.derivation
    lhs = derivation(mt_commutator(x, y))
    rhs = (mt_commutator(delta0(x), derivation(y))
           - mt_commutator(delta0(y), derivation(x)))
    return Verdict.from_difference(lhs - rhs)


def cojacobiator(q: QlbaData, t: MultiTensor) -> MultiTensor:
    """cp(D⊗id)D(t), com 3 pernas."""
    derivation = q.derivation
    return cyclic_sum3(derivation.on_leg(derivation(t), 1))


def quasi_cojacobi_check(q: QlbaData, t: MultiTensor) -> Verdict:
    lhs = cojacobiator(q, t)
    rhs = mt_commutator(iterated_delta0(t, 3), q.phi)
    return Verdict.from_difference(lhs - rhs)


def alt_condition_check(q: QlbaData) -> Verdict:
    return Verdict.from_difference(alt_sum(q.derivation.on_leg(q.phi, 1)))


def cojacobi_rank_test(s: Bivector) -> Verdict:
    """
    Se cp(D⊗id)D se anula em todos os geradores para D estendendo δ_s; deve
    concordar com posto(s) <= 1. A testemunha é o primeiro valor não nulo.
    """
    q = qlba_from_bivector(s)
    for index in range(s.dim):
        value = cojacobiator(q, MultiTensor.generator(index, s.dim, q.order))
        if value:
            logger.debug('co-Jacobi falha em e%s para posto %s', index, s.rank())
            return Verdict(False, value)
    return Verdict(True)


def lambda2_check(q: QlbaData, element: MultiTensor) -> Verdict:
    """δ(element) em Λ²L(V): antissimétrico sob a troca e com pernas primitivas."""
    value = q.derivation(element)
    skew_defect = swap(value) + value
    if skew_defect:
        return Verdict(False, skew_defect)
    if not legs_primitive(value):
        return Verdict(False, value)
    return Verdict(True)


def lambda3_check(phi: MultiTensor) -> Verdict:
    """φ em Λ³: Alt(φ)/6 = φ (normalização 1/6) e pernas primitivas."""
    defect = alt_sum(phi).scale(Fraction(1, 6)) - phi
    if defect:
        return Verdict(False, defect)
    if not legs_primitive(phi):
        return Verdict(False, phi)
    return Verdict(True)
