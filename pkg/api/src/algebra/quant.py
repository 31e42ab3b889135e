"""
quant.py

Estruturas quase-Hopf módulo h^N sobre T(V), com a multiplicação μ₀ fixa:
verificação de coassociatividade, pentágono e counidade, twists, limite
clássico, a quantização exata de posto <= 2 com a sua antípoda e o sistema
linear de ordem h² do caso geral.

Classes:
    QhData: coproduto nos geradores mais o associador Φ.
    EndoMap: (anti)homomorfismo de T(V) dado nos geradores.
    Order2Solution: sistema de ordem h², posto e espaço de soluções.

Functions:
    undeformed(dim, order): (Δ₀, 1⊗1⊗1).
    extend_coproduct(qh, t): Δ estendido como morfismo de álgebras.
    coassoc_defect(qh, t): (id⊗Δ)Δ(t)Φ - Φ(Δ⊗id)Δ(t).
    pentagon_defect(qh): Φ^{1,2,34}Φ^{12,3,4} - Φ^{2,3,4}Φ^{1,23,4}Φ^{1,2,3}.
    counit_defects(qh): desvios dos axiomas da counidade.
    twist_qh(qh, F): Δ^F e Φ^F.
    classical_limit(qh): a QLBA (δ, φ) de uma quantização.
    skew_classical_part(F): f = (F^{21} - F)/h mod h.
    rank2_quantize(s, order): as estruturas A'_h (Hopf) e A_h (quase-Hopf).
    coboundary_quantize(s, order): twist de (Δ₀, 1) por e^{hs/2}.
    convolution(f, g2, qh, t): μ₀(f⊗g2)Δ(t).
    antipode_closed_form(s, order): S(x) = -e^{-h L_v R_w}(x) γ^{-1}.
    order2_terms(g, x): os 12 termos do ansatz de Δ₂.
    order2_family(g, alpha2, beta2, order): a família fechada de Δ₂.
    order2_solve(g, order): o sistema linear de ordem h² e a sua solução.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence, Union

from src.algebra.coalgebra import (
    GeneratorMap,
    MorphismExtension,
    counit,
    counit_leg,
    delta0,
)
from src.algebra.errors import InvariantError, LegCountError, ShapeMismatchError, SymmetryError
from src.algebra.freealg import (
    MultiTensor,
    alt_sum,
    leg_embed,
    mt_commutator,
    mt_exp,
    mt_invert_unital,
    mu_flatten,
    swap,
    tau_on_leg,
)
from src.algebra.linsolve import AffineSpace, LinearSystem, bareiss_rank, solve_affine
from src.algebra.qlba import Bivector, QlbaData, vector_tensor

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QhData:
    """
    Quase-biálgebra (T(V)[[h]]/h^N, μ₀, Δ, Φ) com unidade e counidade não
    deformadas.

    Attrs:
        dim (int): dimensão d.
        order (int): ordem de truncamento N.
        delta (GeneratorMap): Δ(e_i), com 2 pernas.
        phi (MultiTensor): o associador, com 3 pernas.
    """
    dim: int
    order: int
    delta: GeneratorMap
    phi: MultiTensor

    def __post_init__(self) -> None:
        if self.delta.target_legs != 2 or self.phi.legs != 3:
            raise LegCountError('Δ precisa de 2 pernas e Φ de 3')
        if self.delta.order != self.order or self.phi.order != self.order:
            raise ShapeMismatchError('ordens diferentes entre Δ, Φ e a estrutura')

    @cached_property
    def coproduct(self) -> MorphismExtension:
        return MorphismExtension(self.delta)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QhData):
            return NotImplemented
        return self.delta.images == other.delta.images and self.phi == other.phi

    def __hash__(self) -> int:
        return hash((self.delta.images, self.phi))


@dataclass(frozen=True)
class EndoMap(MorphismExtension):
    """
    Endomorfismo (ou antiendomorfismo) de T(V) dado nos geradores, com imagens
    de 1 perna.
    """

    def __post_init__(self) -> None:
        if self.generators.target_legs != 1:
            raise LegCountError('um EndoMap tem imagens de 1 perna')

    @classmethod
    def identity(cls, dim: int, order: int) -> 'EndoMap':
        return cls(GeneratorMap.from_function(
            dim, order, 1, lambda i: MultiTensor.generator(i, dim, order)))


def undeformed(dim: int, order: int) -> QhData:
    delta = GeneratorMap.from_function(
        dim, order, 2, lambda i: delta0(MultiTensor.generator(i, dim, order)))
    return QhData(dim, order, delta, MultiTensor.unit(dim, 3, order))


def extend_coproduct(qh: QhData, t: MultiTensor) -> MultiTensor:
    return qh.coproduct(t)


def coassoc_defect(qh: QhData, t: MultiTensor) -> MultiTensor:
    coproduct = qh.coproduct
    once = coproduct(t)
    right = coproduct.on_leg(once, 2)
    left = coproduct.on_leg(once, 1)
    return right * qh.phi - qh.phi * left


def pentagon_defect(qh: QhData) -> MultiTensor:
    """
    Φ^{1,2,34}Φ^{12,3,4} - Φ^{2,3,4}Φ^{1,23,4}Φ^{1,2,3}, com os índices
    compostos obtidos aplicando Δ à perna indicada.
    """
    phi, coproduct = qh.phi, qh.coproduct
    lhs = coproduct.on_leg(phi, 3) * coproduct.on_leg(phi, 1)
    rhs = (leg_embed(phi, 4, (2, 3, 4)) * coproduct.on_leg(phi, 2)
           * leg_embed(phi, 4, (1, 2, 3)))
    return lhs - rhs


def counit_defects(qh: QhData) -> dict:
    """
    Desvios de (ε⊗id)Δ = (id⊗ε)Δ = id nos geradores e de Φ com ε em cada
    perna igual a 1⊗1.

    Returns:
        dict[str, MultiTensor]: nome da condição -> desvio (nulo quando vale).
    """
    defects = {}
    for i, image in enumerate(qh.delta.images):
        x = MultiTensor.generator(i, qh.dim, qh.order)
        defects[f'(ε⊗id)Δ(e{i})'] = counit_leg(image, 1) - x
        defects[f'(id⊗ε)Δ(e{i})'] = counit_leg(image, 2) - x
    unit = MultiTensor.unit(qh.dim, 2, qh.order)
    for leg in (1, 2, 3):
        defects[f'Φ com ε na perna {leg}'] = counit_leg(qh.phi, leg) - unit
    return defects


def twist_qh(qh: QhData, F: MultiTensor) -> QhData:
    """
    Δ^F(x) = FΔ(x)F^{-1} e Φ^F = F^{23}F^{1,23}Φ(F^{-1})^{12,3}(F^{-1})^{12}.

    Raises:
        NotInvertibleError: se F não for unitário módulo h.
    """
    if F.legs != 2:
        raise LegCountError(f'o twist exige 2 pernas, recebeu {F.legs}')
    inverse = mt_invert_unital(F)
    coproduct = qh.coproduct
    delta = qh.delta.map_images(lambda image: F * image * inverse)
    phi = (leg_embed(F, 3, (2, 3)) * coproduct.on_leg(F, 2) * qh.phi
           * coproduct.on_leg(inverse, 1) * leg_embed(inverse, 3, (1, 2)))
    return QhData(qh.dim, qh.order, delta, phi)


def classical_limit(qh: QhData) -> QlbaData:
    """
    δ(e_i) = coeficiente de h em Δ(e_i) - Δ(e_i)^{21} e φ = coeficiente de h²
    em Alt(Φ), sem normalização.

    Raises:
        InvariantError: se N < 3, se Δ ≢ Δ₀ mod h ou se Φ ≢ 1 mod h².
    """
    if qh.order < 3:
        raise InvariantError('o limite clássico precisa de N >= 3')
    for i, image in enumerate(qh.delta.images):
        expected = delta0(MultiTensor.generator(i, qh.dim, 1))
        if image.h_coefficient(0) != expected:
            raise InvariantError(f'Δ(e{i}) não reduz a Δ₀ módulo h')
    unit = MultiTensor.unit(qh.dim, 3, 1)
    if qh.phi.h_coefficient(0) != unit or qh.phi.h_coefficient(1):
        raise InvariantError('Φ não é 1⊗1⊗1 módulo h²')
    delta = qh.delta.map_images(lambda image: (image - swap(image)).h_coefficient(1))
    phi = alt_sum(qh.phi).h_coefficient(2)
    return QlbaData(qh.dim, delta, phi)


def skew_classical_part(F: MultiTensor) -> MultiTensor:
    """
    f = (F^{21} - F)/h mod h, o elemento de Λ² que corresponde ao twist F.

    Raises:
        InvariantError: se F não for 1⊗1 módulo h.
    """
    if F.h_coefficient(0) != MultiTensor.unit(F.dim, 2, 1):
        raise InvariantError('F precisa ser 1⊗1 módulo h')
    return (swap(F) - F).h_coefficient(1)


def _exp_h(s: Bivector, order: int, factor: Fraction) -> MultiTensor:
    return mt_exp(s.to_tensor(order).scale(factor).scale_h(1))


def rank2_quantize(s: Bivector, order: int) -> tuple:
    """
    Quantização exata para s = v⊗w decomponível.

    A'_h: Δ'(x) = G(x⊗1)G^{-1} + 1⊗x com G = e^{hs}, e Φ' = 1.
    A_h: twist de A'_h por J = e^{-hs/2}, ou seja
    Δ(x) = J^{-1}(x⊗1)J + J(1⊗x)J^{-1} e Φ = (J^{-1})^{23}J^{12}J^{23}(J^{-1})^{12}.

    Params:
        s (Bivector): o bivetor, de posto <= 1.
        order (int): ordem de truncamento N.

    Raises:
        RankError: se posto(s) >= 2.

    Returns:
        tuple[QhData, QhData]: (A'_h, A_h).
    """
    s.decompose()  # RankError para posto >= 2
    dim = s.dim
    G = _exp_h(s, order, Fraction(1))
    G_inv = mt_invert_unital(G)
    J = _exp_h(s, order, Fraction(-1, 2))
    J_inv = mt_invert_unital(J)

    def legs(i: int) -> tuple:
        x = MultiTensor.generator(i, dim, order)
        return leg_embed(x, 2, (1,)), leg_embed(x, 2, (2,))

    def hopf_image(i: int) -> MultiTensor:
        x1, x2 = legs(i)
        return G * x1 * G_inv + x2

    def quasi_image(i: int) -> MultiTensor:
        x1, x2 = legs(i)
        return J_inv * x1 * J + J * x2 * J_inv

    aprime = QhData(dim, order, GeneratorMap.from_function(dim, order, 2, hopf_image),
                    MultiTensor.unit(dim, 3, order))
    phi = (leg_embed(J_inv, 3, (2, 3)) * leg_embed(J, 3, (1, 2))
           * leg_embed(J, 3, (2, 3)) * leg_embed(J_inv, 3, (1, 2)))
    a = QhData(dim, order, GeneratorMap.from_function(dim, order, 2, quasi_image), phi)
    logger.debug('quantização de posto 2, N=%s: Φ com %s termos', order, len(phi))
    return aprime, a


def coboundary_quantize(s: Bivector, order: int) -> QhData:
    """
    Quantização do caso cobordo: twist de (Δ₀, 1) por F = e^{hs/2}.

    Raises:
        SymmetryError: se s não for antissimétrico.
    """
    if not s.is_skew():
        raise SymmetryError('o caso cobordo exige s antissimétrico')
    return twist_qh(undeformed(s.dim, order), _exp_h(s, order, Fraction(1, 2)))


def convolution(f: MorphismExtension, g2: MorphismExtension, qh: QhData,
                t: MultiTensor) -> MultiTensor:
    coproduct = extend_coproduct(qh, t)
    return mu_flatten(g2.on_leg(f.on_leg(coproduct, 1), 2))


def unit_counit(t: MultiTensor) -> MultiTensor:
    """1·ε(t), a unidade do produto de convolução."""
    return MultiTensor.unit(t.dim, 1, t.order).scale(counit(t))


def antipode_closed_form(s: Bivector, order: int) -> EndoMap:
    """
    S(x) = -(sum_{r<N} (-h)^r v^r x w^r / r!) γ^{-1} nos geradores, com
    γ = μ₀(G^{-1}) e G = e^{hs}, estendida como antihomomorfismo.

    Raises:
        RankError: se s não for decomponível.
    """
    v_coords, w_coords = s.decompose()
    dim = s.dim
    v = vector_tensor(v_coords, order)
    w = vector_tensor(w_coords, order)
    gamma = mu_flatten(mt_invert_unital(_exp_h(s, order, Fraction(1))))
    gamma_inv = mt_invert_unital(gamma)

    def image(i: int) -> MultiTensor:
        x = MultiTensor.generator(i, dim, order)
        total = MultiTensor.zero(dim, 1, order)
        left, right = MultiTensor.unit(dim, 1, order), MultiTensor.unit(dim, 1, order)
        factorial = 1
        for r in range(order):
            if r:
                left, right, factorial = v * left, right * w, factorial * r
            term = (left * x * right).scale(Fraction((-1) ** r, factorial)).scale_h(r)
            total = total + term
        return -(total * gamma_inv)

    return EndoMap(GeneratorMap.from_function(dim, order, 1, image), antihomomorphism=True)


ORDER2_TERM_NAMES = (
    'g²x₁', 'gx₁g', 'x₁g²',
    '(id⊗τ)(g²x₁)', '(id⊗τ)(gx₁g)', '(id⊗τ)(x₁g²)',
    'g²x₂', 'gx₂g', 'x₂g²',
    '(τ⊗id)(g²x₂)', '(τ⊗id)(gx₂g)', '(τ⊗id)(x₂g²)',
)

# solução particular e direções α, β da família fechada de Δ₂
ORDER2_PARTICULAR = tuple(Fraction(x) for x in (
    0, '-1/2', '1/2', '1/2', '-1/2', 0, '-1/2', '1/2', 0, '1/2', '-1/2', 0))
ORDER2_ALPHA = tuple(Fraction(x) for x in (1, 0, -1, -1, 0, 1, 0, 0, 0, 0, 0, 0))
ORDER2_BETA = tuple(Fraction(x) for x in (0, 0, 0, 0, 0, 0, 1, 0, -1, -1, 0, 1))


def order2_terms(g: MultiTensor, x: MultiTensor) -> tuple:
    """
    Os 12 termos do ansatz para Δ₂(x), na ordem de ORDER2_TERM_NAMES; τ
    inverte a palavra de grau 2 formada pelas duas letras de g (perna 2 nos
    termos com x₁, perna 1 nos termos com x₂).
    """
    x1 = leg_embed(x, 2, (1,))
    x2 = leg_embed(x, 2, (2,))
    first = (g * g * x1, g * x1 * g, x1 * g * g)
    second = (g * g * x2, g * x2 * g, x2 * g * g)
    return (first + tuple(tau_on_leg(t, 2) for t in first)
            + second + tuple(tau_on_leg(t, 1) for t in second))


def _order2_qh(g: Bivector, coefficients: Sequence, order: int) -> QhData:
    tensor = g.to_tensor(order)
    dim = g.dim

    def image(i: int) -> MultiTensor:
        x = MultiTensor.generator(i, dim, order)
        x1 = leg_embed(x, 2, (1,))
        second = MultiTensor.zero(dim, 2, order)
        for c, term in zip(coefficients, order2_terms(tensor, x)):
            if c:
                second = second + term.scale(c)
        return delta0(x) + mt_commutator(tensor, x1).scale_h(1) + second.scale_h(2)

    g12 = leg_embed(tensor, 3, (1, 2))
    g13 = leg_embed(tensor, 3, (1, 3))
    phi = (MultiTensor.unit(dim, 3, order)
           - mt_commutator(g12, g13).scale(Fraction(1, 2)).scale_h(2))
    return QhData(dim, order, GeneratorMap.from_function(dim, order, 2, image), phi)


def order2_family(g: Bivector, alpha2: Union[int, Fraction] = 0,
                  beta2: Union[int, Fraction] = 0, order: int = 3) -> QhData:
    """
    Δ = Δ₀ + h[g, x⊗1] + h²Δ₂(α, β) e Φ = 1 - ½h²[g^{12}, g^{13}].

    Raises:
        SymmetryError: se g não for simétrico.
    """
    if not g.is_symmetric():
        raise SymmetryError('a quantização de ordem 2 exige g simétrico')
    alpha2, beta2 = Fraction(alpha2), Fraction(beta2)
    coefficients = tuple(c + alpha2 * a + beta2 * b
                         for c, a, b in zip(ORDER2_PARTICULAR, ORDER2_ALPHA, ORDER2_BETA))
    return _order2_qh(g, coefficients, order)


@dataclass(frozen=True)
class Order2Solution:
    """
    Attrs:
        system (LinearSystem): M c = -b, empilhado sobre os geradores.
        rank (int): posto de M.
        solutions (AffineSpace): conjunto solução em Q^12.
        family (AffineSpace): a família fechada (α, β).
        matches (bool): se os dois conjuntos coincidem como subespaços afins.
    """
    system: LinearSystem
    rank: int
    solutions: AffineSpace
    family: AffineSpace
    matches: bool

    def to_json(self) -> dict:
        return {
            'unknowns': list(ORDER2_TERM_NAMES),
            'system': self.system.to_json(),
            'rank': self.rank,
            'solution_dimension': self.solutions.dimension,
            'particular': [str(x) for x in self.solutions.particular],
            'basis': [[str(x) for x in vector] for vector in self.solutions.basis],
            'matches_closed_form': self.matches,
        }


def order2_solve(g: Bivector, order: int = 3) -> Order2Solution:
    """
    Monta e resolve o sistema de ordem h² para os 12 coeficientes de Δ₂.

    O defeito de coassociatividade em h² é afim nos coeficientes; a coluna k
    é o defeito com c = e_k menos o defeito com c = 0, e o lado direito é
    menos o defeito com c = 0. As equações de todos os geradores são
    empilhadas.

    Raises:
        SymmetryError: se g não for simétrico.
        InconsistentSystemError: se o sistema não tiver solução.
    """
    if not g.is_symmetric():
        raise SymmetryError('a quantização de ordem 2 exige g simétrico')
    order = max(order, 3)
    unknowns = len(ORDER2_TERM_NAMES)

    def defects(coefficients: Sequence) -> list:
        qh = _order2_qh(g, coefficients, order)
        return [coassoc_defect(qh, MultiTensor.generator(i, g.dim, order)).h_coefficient(2)
                for i in range(g.dim)]

    base = defects((0,) * unknowns)
    columns = [[d - b for d, b in zip(defects(tuple(int(j == k) for j in range(unknowns))), base)]
               for k in range(unknowns)]
    keys_per_generator = []
    for i in range(g.dim):
        keys = {key for key, _ in base[i].items()}
        for column in columns:
            keys.update(key for key, _ in column[i].items())
        keys_per_generator.append(sorted(keys))
    matrix, rhs = [], []
    for i, keys in enumerate(keys_per_generator):
        for key in keys:
            matrix.append([column[i].coefficient(key).constant_term for column in columns])
            rhs.append(-base[i].coefficient(key).constant_term)
    system = LinearSystem(matrix, rhs)
    rank = bareiss_rank(system.matrix)
    solutions = solve_affine(system.matrix, system.rhs)
    family = AffineSpace(ORDER2_PARTICULAR, (ORDER2_ALPHA, ORDER2_BETA))
    logger.debug('sistema de ordem 2: %s equações, posto %s', len(matrix), rank)
    return Order2Solution(system, rank, solutions, family, solutions.equals(family))
