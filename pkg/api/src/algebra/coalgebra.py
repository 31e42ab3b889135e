"""
coalgebra.py

A coálgebra não deformada de T(V): o coproduto de embaralhamento Δ₀, a counidade,
as extensões de mapas definidos nos geradores (morfismos, antimorfismos e
derivações sobre um morfismo) e a verificação da regra de co-Leibniz.

Classes:
    GeneratorMap: imagens dos geradores e_0, ..., e_{d-1} em T(V)^{⊗n}.
    MorphismExtension: extensão multiplicativa (ou antimultiplicativa) de um
    GeneratorMap, memorizada palavra a palavra.
    Derivation: extensão única de um GeneratorMap a uma derivação sobre um
    morfismo de álgebras, D(xy) = D(x)φ(y) + φ(x)D(y).
    Verdict: resultado de uma verificação, com a testemunha em caso de falha.

Functions:
    delta0_word(word, dim, order): Δ₀ de uma palavra.
    delta0(t): Δ₀ de um tensor de 1 perna.
    apply_delta0_to_leg(t, leg): (id⊗..⊗Δ₀⊗..⊗id)(t).
    iterated_delta0(t, legs): (Δ₀⊗id⊗...)∘...∘Δ₀ com o número de pernas pedido.
    counit(t): coeficiente da palavra vazia.
    counit_leg(t, leg): aplica ε₀ a uma perna, removendo-a.
    derivation_extend(d_map, morphism): constrói a Derivation.
    co_leibniz_check(D, t): (Δ₀⊗id)D = (id⊗D)Δ₀ + σ₂₃(D⊗id)Δ₀ em t.
"""

import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

from src.algebra.errors import LegCountError, LegPositionError, ShapeMismatchError
from src.algebra.freealg import MultiTensor, Word, map_leg, permute_legs
from src.algebra.scalars import HSeries

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Verdict:
    """
    Resultado de uma verificação.

    Attrs:
        ok (bool): se a identidade vale.
        witness (Optional[object]): a diferença entre os lados quando não vale,
        ou uma testemunha registrada mesmo quando a falha é a esperada.
    """
    ok: bool
    witness: Optional[object] = None

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def from_difference(cls, difference) -> 'Verdict':
        if difference.is_zero():
            return cls(True)
        return cls(False, difference)

    @classmethod
    def combine(cls, verdicts) -> 'Verdict':
        """Primeira falha da sequência, ou sucesso se todas passarem."""
        for verdict in verdicts:
            if not verdict.ok:
                return verdict
        return cls(True)


@lru_cache(maxsize=None)
def _unshuffle_splits(word: Word) -> tuple:
    # cada subconjunto de posições vai para a perna 1, o complemento para a 2
    counts = {}
    for mask in itertools.product((0, 1), repeat=len(word)):
        left = tuple(letter for letter, side in zip(word, mask) if side == 0)
        right = tuple(letter for letter, side in zip(word, mask) if side == 1)
        counts[(left, right)] = counts.get((left, right), 0) + 1
    return tuple(counts.items())


def delta0_word(word: Word, dim: int, order: int) -> MultiTensor:
    """
    Δ₀ de uma palavra: soma sobre todas as maneiras de repartir as letras
    entre as duas pernas preservando a ordem, que é a extensão multiplicativa
    de x -> x⊗1 + 1⊗x.
    """
    return MultiTensor(dim, 2, order, dict(_unshuffle_splits(tuple(word))))


def delta0(t: MultiTensor) -> MultiTensor:
    if t.legs != 1:
        raise LegCountError(f'Δ₀ atua em tensores de 1 perna, recebeu {t.legs}')
    return apply_delta0_to_leg(t, 1)


def apply_delta0_to_leg(t: MultiTensor, leg: int) -> MultiTensor:
    return map_leg(t, leg, lambda word: delta0_word(word, t.dim, t.order), 2)


def iterated_delta0(t: MultiTensor, legs: int) -> MultiTensor:
    """Coproduto iterado de um tensor de 1 perna até o número de pernas pedido."""
    result = t
    while result.legs < legs:
        result = apply_delta0_to_leg(result, 1)
    return result


def counit(t: MultiTensor) -> HSeries:
    if t.legs != 1:
        raise LegCountError(f'ε₀ atua em tensores de 1 perna, recebeu {t.legs}')
    return t.coefficient(((),))


def counit_leg(t: MultiTensor, leg: int) -> MultiTensor:
    """
    Aplica ε₀ à perna indicada: mantém os termos com palavra vazia nessa
    perna e remove a perna.
    """
    if t.legs < 2:
        raise LegCountError('counit_leg exige ao menos 2 pernas; use counit')
    if not 1 <= leg <= t.legs:
        raise LegPositionError(f'perna {leg} fora de [1, {t.legs}]')
    accumulator = {}
    for key, coeff in t.items():
        if key[leg - 1]:
            continue
        new_key = key[:leg - 1] + key[leg:]
        accumulator[new_key] = accumulator[new_key] + coeff if new_key in accumulator else coeff
    return MultiTensor._build(t.dim, t.legs - 1, t.order, accumulator)


@dataclass(frozen=True)
class GeneratorMap:
    """
    Imagens dos geradores de V.

    Attrs:
        dim (int): dimensão d.
        order (int): ordem N comum a todas as imagens.
        target_legs (int): número de pernas das imagens.
        images (tuple[MultiTensor, ...]): imagem de e_i na posição i.
    """
    dim: int
    order: int
    target_legs: int
    images: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, 'images', tuple(self.images))
        if len(self.images) != self.dim:
            raise ShapeMismatchError(
                f'{len(self.images)} imagens para {self.dim} geradores'
            )
        for image in self.images:
            if image.shape != (self.dim, self.target_legs, self.order):
                raise ShapeMismatchError(
                    f'imagem de forma {image.shape}, esperado '
                    f'{(self.dim, self.target_legs, self.order)}'
                )

    @classmethod
    def from_function(cls, dim: int, order: int, target_legs: int,
                      image: Callable[[int], MultiTensor]) -> 'GeneratorMap':
        return cls(dim, order, target_legs, tuple(image(i) for i in range(dim)))

    def __getitem__(self, index: int) -> MultiTensor:
        return self.images[index]

    def map_images(self, transform: Callable[[MultiTensor], MultiTensor]) -> 'GeneratorMap':
        images = tuple(transform(image) for image in self.images)
        first = images[0]
        return GeneratorMap(self.dim, first.order, first.legs, images)

    def __add__(self, other: 'GeneratorMap') -> 'GeneratorMap':
        return GeneratorMap(self.dim, self.order, self.target_legs,
                            tuple(a + b for a, b in zip(self.images, other.images)))


@dataclass(frozen=True)
class MorphismExtension:
    """
    Extensão de um GeneratorMap a T(V) como homomorfismo (ou antihomomorfismo)
    de álgebras unitárias. As imagens das palavras ficam em cache.

    Attrs:
        generators (GeneratorMap): imagens dos geradores.
        antihomomorphism (bool): se a extensão inverte a ordem dos produtos.
    """
    generators: GeneratorMap
    antihomomorphism: bool = False
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def target_legs(self) -> int:
        return self.generators.target_legs

    def word_image(self, word: Word) -> MultiTensor:
        word = tuple(word)
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        g = self.generators
        if not word:
            image = MultiTensor.unit(g.dim, g.target_legs, g.order)
        elif len(word) == 1:
            image = g[word[0]]
        elif self.antihomomorphism:
            image = self.word_image(word[1:]) * self.word_image(word[:1])
        else:
            image = self.word_image(word[:-1]) * self.word_image(word[-1:])
        self._cache[word] = image
        return image

    def __call__(self, t: MultiTensor) -> MultiTensor:
        if t.legs != 1:
            raise LegCountError(f'a extensão atua em 1 perna, recebeu {t.legs}')
        return self.on_leg(t, 1)

    def on_leg(self, t: MultiTensor, leg: int) -> MultiTensor:
        return map_leg(t, leg, self.word_image, self.target_legs)


@dataclass(frozen=True)
class Derivation:
    """
    Derivação D: T(V) -> A sobre um morfismo φ, determinada pelos geradores.

    Calculada pela recorrência D(x·w) = D(x)φ(w) + φ(x)D(w), tirando uma letra
    por vez; o resultado não depende da fatoração escolhida.

    Attrs:
        generators (GeneratorMap): D nos geradores.
        morphism (Callable[[Word], MultiTensor]): φ palavra a palavra.
    """
    generators: GeneratorMap
    morphism: Callable
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def target_legs(self) -> int:
        return self.generators.target_legs

    def word_image(self, word: Word) -> MultiTensor:
        word = tuple(word)
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        g = self.generators
        if not word:
            image = MultiTensor.zero(g.dim, g.target_legs, g.order)
        elif len(word) == 1:
            image = g[word[0]]
        else:
            head, tail = word[:1], word[1:]
            image = (self.word_image(head) * self.morphism(tail)
                     + self.morphism(head) * self.word_image(tail))
        self._cache[word] = image
        return image

    def __call__(self, t: MultiTensor) -> MultiTensor:
        if t.legs != 1:
            raise LegCountError(f'a derivação atua em 1 perna, recebeu {t.legs}')
        return self.on_leg(t, 1)

    def on_leg(self, t: MultiTensor, leg: int) -> MultiTensor:
        return map_leg(t, leg, self.word_image, self.target_legs)


def derivation_extend(d_map: GeneratorMap,
                      morphism: Optional[Callable[[Word], MultiTensor]] = None) -> Derivation:
    """
    Estende d_map a uma derivação sobre o morfismo dado (Δ₀ por padrão).

    Params:
        d_map (GeneratorMap): imagens dos geradores.
        morphism (Optional[Callable]): morfismo de álgebras palavra a palavra,
        com a mesma forma de imagem de d_map. É responsabilidade de quem chama
        garantir que se trata de um morfismo.

    Returns:
        Derivation: a única derivação com D|_V = d_map.
    """
    if morphism is None:
        if d_map.target_legs != 2:
            raise LegCountError('sobre Δ₀ as imagens precisam ter 2 pernas')
        dim, order = d_map.dim, d_map.order
        morphism = lru_cache(maxsize=None)(lambda word: delta0_word(word, dim, order))
    return Derivation(d_map, morphism)


def co_leibniz_check(derivation: Derivation, t: MultiTensor) -> Verdict:
    """
    Confere (Δ₀⊗id)D(t) = (id⊗D)Δ₀(t) + σ₂₃(D⊗id)Δ₀(t).

    Returns:
        Verdict: com a diferença dos lados como testemunha em caso de falha.
    """
    lhs = apply_delta0_to_leg(derivation(t), 1)
    coproduct = delta0(t)
    right_leg = derivation.on_leg(coproduct, 2)
    left_leg = permute_legs(derivation.on_leg(coproduct, 1), (1, 3, 2))
    return Verdict.from_difference(lhs - right_leg - left_leg)
