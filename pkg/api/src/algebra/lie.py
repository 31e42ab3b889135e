"""
lie.py

Suporte à álgebra de Lie livre L(V) dentro de T(V): palavras de Lyndon, a sua
fatoração padrão, os colchetes iterados correspondentes e o teste de
primitividade Δ₀(x) = x⊗1 + 1⊗x.

Classes:
    LyndonBracketing: palavra de Lyndon com o colchete expandido em T(V).

Functions:
    lyndon_words(dim, max_degree): palavras de Lyndon por comprimento e ordem
    lexicográfica.
    is_lyndon(word): se a palavra é de Lyndon.
    standard_factorization(word): w = uv com v o maior sufixo próprio de Lyndon.
    lyndon_basis(dim, max_degree, order): colchetes de todas as palavras de Lyndon.
    witt_dimension(dim, degree): fórmula de Witt para dim L(V)_m.
    is_primitive(t): teste de primitividade.
    legs_primitive(t): se todas as pernas de um tensor são primitivas.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

from sympy.functions.combinatorial.numbers import mobius
from sympy.ntheory import divisors

from src.algebra.coalgebra import apply_delta0_to_leg, delta0
from src.algebra.errors import IndexRangeError, LegCountError
from src.algebra.freealg import MultiTensor, Word, leg_embed, mt_commutator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LyndonBracketing:
    """
    Attrs:
        word (Word): a palavra de Lyndon.
        expansion (MultiTensor): o colchete iterado expandido, com 1 perna.
    """
    word: Word
    expansion: MultiTensor

    @property
    def degree(self) -> int:
        return len(self.word)


def is_lyndon(word: Word) -> bool:
    word = tuple(word)
    return bool(word) and all(word < word[i:] for i in range(1, len(word)))


def lyndon_words(dim: int, max_degree: int) -> list:
    """
    Todas as palavras de Lyndon de comprimento <= max_degree sobre {0..dim-1},
    pelo algoritmo de Duval, ordenadas por comprimento e depois
    lexicograficamente.
    """
    words = []
    w = [-1]
    while w:
        w[-1] += 1
        words.append(tuple(w))
        m = len(w)
        while len(w) < max_degree:
            w.append(w[-m])
        while w and w[-1] == dim - 1:
            w.pop()
    return sorted(words, key=lambda word: (len(word), word))


def standard_factorization(word: Word) -> tuple:
    """
    Fatoração padrão de uma palavra de Lyndon de comprimento >= 2: w = uv com v
    o maior sufixo próprio que é de Lyndon; u e v são de Lyndon.
    """
    word = tuple(word)
    for i in range(1, len(word)):
        if is_lyndon(word[i:]):
            return word[:i], word[i:]
    raise IndexRangeError(f'{word} não tem fatoração padrão')


@lru_cache(maxsize=None)
def _bracket(word: Word, dim: int, order: int) -> MultiTensor:
    if len(word) == 1:
        return MultiTensor.generator(word[0], dim, order)
    left, right = standard_factorization(word)
    return mt_commutator(_bracket(left, dim, order), _bracket(right, dim, order))


def lyndon_basis(dim: int, max_degree: int, order: int = 1) -> list:
    """
    Uma LyndonBracketing por palavra de Lyndon de comprimento <= max_degree.

    Params:
        dim (int): número de geradores, >= 1.
        max_degree (int): comprimento máximo, >= 1.
        order (int): ordem de truncamento dos coeficientes.

    Returns:
        list[LyndonBracketing]: por grau e depois ordem lexicográfica.
    """
    basis = [LyndonBracketing(word, _bracket(word, dim, order))
             for word in lyndon_words(dim, max_degree)]
    logger.debug('base de Lyndon d=%s grau<=%s: %s elementos', dim, max_degree, len(basis))
    return basis


def witt_dimension(dim: int, degree: int) -> int:
    """(1/m) sum_{k | m} mobius(m/k) d^k, a dimensão de L(V) em grau m."""
    total = sum(mobius(degree // k) * dim ** k for k in divisors(degree))
    return int(total) // degree


def is_primitive(t: MultiTensor) -> bool:
    if t.legs != 1:
        raise LegCountError(f'primitividade se testa em 1 perna, recebeu {t.legs}')
    expected = leg_embed(t, 2, (1,)) + leg_embed(t, 2, (2,))
    return delta0(t) == expected


def legs_primitive(t: MultiTensor) -> bool:
    """
    Se cada perna de t está em L(V), sem decompor t: para cada perna k,
    aplicar Δ₀ nela deve dar a soma dos dois mergulhos com a perna vazia
    de cada lado.
    """
    n = t.legs
    for leg in range(1, n + 1):
        split = apply_delta0_to_leg(t, leg)
        others = [p for p in range(1, n + 2)]
        first = others[:leg] + others[leg + 1:]
        second = others[:leg - 1] + others[leg:]
        if split != leg_embed(t, n + 1, first) + leg_embed(t, n + 1, second):
            return False
    return True
