"""
freealg.py

Aritmética exata e esparsa em T(V)^{⊗n}.

Um MultiTensor é uma combinação linear finita de n-uplas de palavras (tuplas de
índices de geradores) com coeficientes HSeries. A forma canônica guarda apenas
coeficientes não nulos, com as chaves em ordem lexicográfica, de modo que a
igualdade é comparação direta das formas canônicas.

Classes:
    MultiTensor: elemento esparso de T(V)^{⊗n} com coeficientes em Q[h]/(h^N).

Functions:
    mt_product(a, b, max_degree): produto perna a perna (concatenação).
    mt_commutator(a, b, max_degree): ab - ba.
    leg_embed(t, target_legs, positions): notação de índices s^{13}, F^{23}...
    permute_legs(t, perm): a perna i vai para a posição perm(i).
    swap(t): a troca de pernas de um tensor de 2 pernas (t^{21}).
    cyclic_sum3(t): soma sobre as permutações cíclicas de 3 pernas (cp).
    alt_sum(t): soma alternada sobre todas as permutações (Alt).
    mt_exp(t, max_degree): exponencial truncada; exige valuação >= 1 em h.
    mt_invert_unital(t): inverso de 1 + r pela série de Neumann.
    mu_flatten(t): concatenação das duas pernas (mu_0).
    map_leg(t, leg, image, image_legs): aplica um mapa definido em palavras a
    uma perna, inserindo as pernas da imagem no lugar dela.
    tau_on_leg(t, leg): inverte as palavras de grau 2 de uma perna.
"""

import itertools
import logging
from fractions import Fraction
from types import MappingProxyType
from typing import Callable, Iterable, Mapping, Optional, Sequence

from sympy.combinatorics import Permutation

from src.algebra.errors import (
    IndexRangeError,
    InvalidPermutationError,
    LegCountError,
    LegPositionError,
    NonzeroConstantTermError,
    NotInvertibleError,
    OrderMismatchError,
    ParseError,
    ShapeMismatchError,
)
from src.algebra.scalars import HSeries

logger = logging.getLogger(__name__)

Word = tuple
Key = tuple


class MultiTensor:
    """
    Elemento esparso de T(V)^{⊗n}.

    Attrs:
        dim (int): dimensão d de V; as letras estão em [0, d).
        legs (int): número n >= 1 de pernas.
        order (int): ordem N de truncamento dos coeficientes.
        terms (Mapping[Key, HSeries]): termos não nulos em ordem canônica.
    """
    __slots__ = ('dim', 'legs', 'order', '_terms')

    def __init__(self, dim: int, legs: int, order: int,
                 terms: Optional[Mapping] = None) -> None:
        if dim < 1 or legs < 1 or order < 1:
            raise ShapeMismatchError(
                f'forma inválida: dim={dim}, legs={legs}, order={order}'
            )
        self.dim = dim
        self.legs = legs
        self.order = order
        accumulator = {}
        for key, coeff in (terms or {}).items():
            key = tuple(tuple(word) for word in key)
            if len(key) != legs:
                raise LegCountError(
                    f'termo com {len(key)} pernas em tensor de {legs} pernas'
                )
            for word in key:
                for letter in word:
                    if not 0 <= letter < dim:
                        raise IndexRangeError(
                            f'letra {letter} fora de [0, {dim})'
                        )
            coeff = _as_series(coeff, order)
            previous = accumulator.get(key)
            accumulator[key] = coeff if previous is None else previous + coeff
        self._terms = _canonical(accumulator)

    @classmethod
    def _build(cls, dim: int, legs: int, order: int, accumulator: dict) -> 'MultiTensor':
        # caminho interno: chaves e coeficientes já validados
        tensor = cls.__new__(cls)
        tensor.dim = dim
        tensor.legs = legs
        tensor.order = order
        tensor._terms = _canonical(accumulator)
        return tensor

    @classmethod
    def zero(cls, dim: int, legs: int, order: int) -> 'MultiTensor':
        return cls._build(dim, legs, order, {})

    @classmethod
    def unit(cls, dim: int, legs: int, order: int) -> 'MultiTensor':
        return cls._build(dim, legs, order, {((),) * legs: HSeries.one(order)})

    @classmethod
    def pure(cls, words: Sequence, dim: int, order: int, coeff=1) -> 'MultiTensor':
        """Tensor puro coeff * w1 ⊗ ... ⊗ wn."""
        return cls(dim, len(words), order, {tuple(tuple(w) for w in words): coeff})

    @classmethod
    def word(cls, letters: Sequence, dim: int, order: int, coeff=1) -> 'MultiTensor':
        return cls.pure((tuple(letters),), dim, order, coeff)

    @classmethod
    def generator(cls, index: int, dim: int, order: int) -> 'MultiTensor':
        return cls.word((index,), dim, order)

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, key: Sequence) -> HSeries:
        key = tuple(tuple(w) for w in key)
        return self._terms.get(key, HSeries.zero(self.order))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def same_shape(self, other: 'MultiTensor') -> bool:
        return (self.dim, self.legs, self.order) == (other.dim, other.legs, other.order)

    def _check_shape(self, other: 'MultiTensor') -> None:
        if not isinstance(other, MultiTensor) or not self.same_shape(other):
            raise ShapeMismatchError(
                f'formas incompatíveis: {self.shape} e '
                f'{getattr(other, "shape", type(other).__name__)}'
            )

    @property
    def shape(self) -> tuple:
        return (self.dim, self.legs, self.order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiTensor):
            return NotImplemented
        return self.shape == other.shape and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.shape, tuple(self._terms.items())))

    def __add__(self, other: 'MultiTensor') -> 'MultiTensor':
        self._check_shape(other)
        accumulator = dict(self._terms)
        for key, coeff in other._terms.items():
            previous = accumulator.get(key)
            accumulator[key] = coeff if previous is None else previous + coeff
        return MultiTensor._build(self.dim, self.legs, self.order, accumulator)

    def __neg__(self) -> 'MultiTensor':
        return MultiTensor._build(
            self.dim, self.legs, self.order,
            {key: -coeff for key, coeff in self._terms.items()},
        )

    def __sub__(self, other: 'MultiTensor') -> 'MultiTensor':
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, MultiTensor):
            return mt_product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        if isinstance(other, MultiTensor):
            return mt_product(other, self)
        return self.scale(other)

    def scale(self, scalar) -> 'MultiTensor':
        """Multiplica todos os coeficientes por um int, Fraction ou HSeries."""
        factor = _as_series(scalar, self.order)
        return MultiTensor._build(
            self.dim, self.legs, self.order,
            {key: coeff * factor for key, coeff in self._terms.items()},
        )

    def scale_h(self, power: int) -> 'MultiTensor':
        """Multiplica por h^power."""
        return MultiTensor._build(
            self.dim, self.legs, self.order,
            {key: coeff.shift(power) for key, coeff in self._terms.items()},
        )

    def h_coefficient(self, power: int, order: int = 1) -> 'MultiTensor':
        """
        Coeficiente de h^power como tensor de coeficientes constantes.

        Params:
            power (int): potência de h extraída.
            order (int): ordem de truncamento do tensor devolvido.

        Returns:
            MultiTensor: o tensor sum_k c_k[power] * key_k.
        """
        return MultiTensor._build(
            self.dim, self.legs, order,
            {key: HSeries.constant(coeff.coefficient(power), order)
             for key, coeff in self._terms.items()},
        )

    def with_order(self, order: int) -> 'MultiTensor':
        """Reinterpreta os coeficientes em Q[h]/(h^order), truncando ou completando com zeros."""
        def resize(coeff: HSeries) -> HSeries:
            padded = coeff.coeffs[:order] + (Fraction(0),) * max(0, order - coeff.order)
            return HSeries(padded)
        return MultiTensor._build(
            self.dim, self.legs, order,
            {key: resize(coeff) for key, coeff in self._terms.items()},
        )

    def with_dim(self, dim: int) -> 'MultiTensor':
        """Mesmo tensor visto com mais geradores disponíveis."""
        if dim < self.max_letter() + 1:
            raise IndexRangeError(f'dimensão {dim} pequena demais para o tensor')
        return MultiTensor._build(dim, self.legs, self.order, dict(self._terms))

    def max_letter(self) -> int:
        return max((letter for key in self._terms for word in key for letter in word),
                   default=-1)

    def truncate_degree(self, max_degree: int) -> 'MultiTensor':
        """Descarta os termos com alguma palavra de comprimento > max_degree."""
        return MultiTensor._build(
            self.dim, self.legs, self.order,
            {key: coeff for key, coeff in self._terms.items()
             if all(len(word) <= max_degree for word in key)},
        )

    def valuation(self) -> int:
        """Menor valuação em h entre os coeficientes (order, se nulo)."""
        return min((coeff.valuation() for coeff in self._terms.values()),
                   default=self.order)

    def to_records(self, limit: Optional[int] = None) -> list:
        """
        Serializa o tensor como lista de registros {coeff, words}.

        Params:
            limit (Optional[int]): número máximo de registros devolvidos.

        Returns:
            list: registros em ordem canônica.
        """
        records = []
        for key, coeff in self._terms.items():
            if limit is not None and len(records) >= limit:
                break
            records.append({
                'coeff': str(coeff),
                'words': [list(word) for word in key],
            })
        return records

    @classmethod
    def from_records(cls, records: Iterable[dict], dim: int, legs: int,
                     order: int) -> 'MultiTensor':
        terms = {}
        for record in records:
            key = tuple(tuple(word) for word in record['words'])
            coeff = HSeries.parse(record['coeff'], order)
            terms[key] = terms[key] + coeff if key in terms else coeff
        return cls(dim, legs, order, terms)

    def __str__(self) -> str:
        if not self._terms:
            return '0'
        parts = []
        for key, coeff in self._terms.items():
            body = ' ⊗ '.join(
                ''.join(f'e{letter}' for letter in word) or '1' for word in key
            )
            text = str(coeff)
            if text == '1':
                parts.append(body)
            elif text == '-1':
                parts.append(f'-{body}')
            elif len(coeff.coeffs) > 1 and sum(1 for c in coeff.coeffs if c) > 1:
                parts.append(f'({text})·{body}')
            else:
                parts.append(f'{text}·{body}')
        return ' + '.join(parts).replace('+ -', '- ')

    def __repr__(self) -> str:
        return f'MultiTensor(dim={self.dim}, legs={self.legs}, order={self.order}, {self})'


def _as_series(value, order: int) -> HSeries:
    if isinstance(value, HSeries):
        if value.order != order:
            raise OrderMismatchError(
                f'coeficiente de ordem {value.order} em tensor de ordem {order}'
            )
        return value
    return HSeries.constant(value, order)


def _canonical(accumulator: dict) -> dict:
    return {key: accumulator[key] for key in sorted(accumulator) if accumulator[key]}


def _exceeds(key: Key, max_degree: Optional[int]) -> bool:
    return max_degree is not None and any(len(word) > max_degree for word in key)


def mt_product(a: MultiTensor, b: MultiTensor,
               max_degree: Optional[int] = None) -> MultiTensor:
    """
    Produto de T(V)^{⊗n}: concatenação perna a perna, estendida bilinearmente.

    Params:
        a (MultiTensor): fator da esquerda.
        b (MultiTensor): fator da direita, com a mesma forma.
        max_degree (Optional[int]): se informado, descarta termos com alguma
        palavra mais longa que isso. Por padrão nada é descartado.

    Raises:
        ShapeMismatchError: se dim, pernas ou ordem diferirem.

    Returns:
        MultiTensor: o produto a·b.
    """
    a._check_shape(b)
    accumulator = {}
    for key_a, coeff_a in a._terms.items():
        for key_b, coeff_b in b._terms.items():
            key = tuple(u + w for u, w in zip(key_a, key_b))
            if _exceeds(key, max_degree):
                continue
            coeff = coeff_a * coeff_b
            previous = accumulator.get(key)
            accumulator[key] = coeff if previous is None else previous + coeff
    return MultiTensor._build(a.dim, a.legs, a.order, accumulator)


def mt_commutator(a: MultiTensor, b: MultiTensor,
                  max_degree: Optional[int] = None) -> MultiTensor:
    return mt_product(a, b, max_degree) - mt_product(b, a, max_degree)


def leg_embed(t: MultiTensor, target_legs: int, positions: Sequence[int]) -> MultiTensor:
    """
    Coloca as pernas de t nas posições indicadas (1-based) de um tensor com
    target_legs pernas; as demais recebem a palavra vazia.

    Raises:
        LegPositionError: posição fora de [1, target_legs] ou repetida.
        LegCountError: número de posições diferente do número de pernas de t.

    Returns:
        MultiTensor: o tensor com target_legs pernas.
    """
    positions = tuple(positions)
    if len(positions) != t.legs:
        raise LegCountError(
            f'{len(positions)} posições para um tensor de {t.legs} pernas'
        )
    if len(set(positions)) != len(positions):
        raise LegPositionError(f'posições repetidas: {positions}')
    if any(not 1 <= p <= target_legs for p in positions):
        raise LegPositionError(f'posições {positions} fora de [1, {target_legs}]')
    accumulator = {}
    for key, coeff in t._terms.items():
        new_key = [()] * target_legs
        for word, position in zip(key, positions):
            new_key[position - 1] = word
        accumulator[tuple(new_key)] = coeff
    return MultiTensor._build(t.dim, target_legs, t.order, accumulator)


def _check_permutation(perm: Sequence[int], n: int) -> tuple:
    perm = tuple(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise InvalidPermutationError(f'{perm} não é permutação de 1..{n}')
    return perm


def permute_legs(t: MultiTensor, perm: Sequence[int]) -> MultiTensor:
    """
    A perna i de cada termo vai para a posição perm[i-1]; coeficientes
    inalterados. Ex.: sigma_23 = (1, 3, 2).

    Raises:
        InvalidPermutationError: se perm não for permutação de 1..n.
    """
    perm = _check_permutation(perm, t.legs)
    accumulator = {}
    for key, coeff in t._terms.items():
        new_key = [()] * t.legs
        for word, position in zip(key, perm):
            new_key[position - 1] = word
        accumulator[tuple(new_key)] = coeff
    return MultiTensor._build(t.dim, t.legs, t.order, accumulator)


def compose_permutations(rho: Sequence[int], pi: Sequence[int]) -> tuple:
    """rho∘pi no mesmo formato 1-based de permute_legs."""
    return tuple(rho[p - 1] for p in pi)


def swap(t: MultiTensor) -> MultiTensor:
    if t.legs != 2:
        raise LegCountError(f'swap exige 2 pernas, recebeu {t.legs}')
    return permute_legs(t, (2, 1))


def cyclic_sum3(t: MultiTensor) -> MultiTensor:
    """cp(t) = t + t com o ciclo (123) aplicado + t com o ciclo (132) aplicado."""
    if t.legs != 3:
        raise LegCountError(f'cp exige 3 pernas, recebeu {t.legs}')
    return t + permute_legs(t, (2, 3, 1)) + permute_legs(t, (3, 1, 2))


def alt_sum(t: MultiTensor) -> MultiTensor:
    """Alt(t) = soma de sign(pi) * permute_legs(t, pi) sobre S_n, sem normalização."""
    result = MultiTensor.zero(t.dim, t.legs, t.order)
    for perm in itertools.permutations(range(1, t.legs + 1)):
        sign = Permutation([p - 1 for p in perm]).signature()
        term = permute_legs(t, perm)
        result = result + term if sign > 0 else result - term
    return result


def mt_exp(t: MultiTensor, max_degree: Optional[int] = None) -> MultiTensor:
    """
    Exponencial truncada sum_{r<N} t^r / r!.

    Raises:
        NonzeroConstantTermError: se algum coeficiente tiver termo constante,
        caso em que a série não termina módulo h^N.
    """
    if any(coeff.constant_term for _, coeff in t.items()):
        raise NonzeroConstantTermError('exp exige coeficientes com valuação >= 1 em h')
    result = MultiTensor.unit(t.dim, t.legs, t.order)
    power = result
    for r in range(1, t.order):
        power = mt_product(power, t, max_degree).scale(Fraction(1, r))
        if not power:
            break
        result = result + power
    return result


def mt_invert_unital(t: MultiTensor, max_degree: Optional[int] = None) -> MultiTensor:
    """
    Inverso de t = 1 + r pela série de Neumann sum_k (-r)^k.

    Raises:
        NotInvertibleError: se t não for congruente à unidade módulo h.
    """
    unit = MultiTensor.unit(t.dim, t.legs, t.order)
    rest = t - unit
    if any(coeff.constant_term for _, coeff in rest.items()):
        raise NotInvertibleError('o tensor não é unitário módulo h')
    minus_rest = -rest
    result = unit
    power = unit
    for _ in range(1, t.order):
        power = mt_product(power, minus_rest, max_degree)
        if not power:
            break
        result = result + power
    return result


def mu_flatten(t: MultiTensor) -> MultiTensor:
    """mu_0: u ⊗ w -> uw."""
    if t.legs != 2:
        raise LegCountError(f'mu_0 exige 2 pernas, recebeu {t.legs}')
    accumulator = {}
    for (u, w), coeff in t._terms.items():
        key = (u + w,)
        previous = accumulator.get(key)
        accumulator[key] = coeff if previous is None else previous + coeff
    return MultiTensor._build(t.dim, 1, t.order, accumulator)


def map_leg(t: MultiTensor, leg: int, image: Callable[[Word], MultiTensor],
            image_legs: int) -> MultiTensor:
    """
    Aplica a uma perna um mapa linear dado palavra a palavra.

    As pernas da imagem substituem a perna escolhida, de modo que o resultado
    tem t.legs + image_legs - 1 pernas. É a operação por trás de (Δ⊗id),
    (id⊗D), Φ^{1,23,4} e afins.

    Params:
        t (MultiTensor): o tensor de entrada.
        leg (int): perna (1-based) onde o mapa atua.
        image (Callable[[Word], MultiTensor]): imagem de cada palavra.
        image_legs (int): número de pernas das imagens.

    Raises:
        LegPositionError: se leg estiver fora de [1, t.legs].

    Returns:
        MultiTensor: o tensor transformado.
    """
    if not 1 <= leg <= t.legs:
        raise LegPositionError(f'perna {leg} fora de [1, {t.legs}]')
    legs = t.legs + image_legs - 1
    cache = {}
    accumulator = {}
    for key, coeff in t._terms.items():
        word = key[leg - 1]
        if word not in cache:
            cache[word] = image(word)
        mapped = cache[word]
        if not mapped:
            continue
        if mapped.legs != image_legs or mapped.order != t.order:
            raise ShapeMismatchError(
                f'imagem com forma {mapped.shape}, esperado {image_legs} pernas '
                f'e ordem {t.order}'
            )
        prefix, suffix = key[:leg - 1], key[leg:]
        for image_key, image_coeff in mapped._terms.items():
            new_key = prefix + image_key + suffix
            product = coeff * image_coeff
            previous = accumulator.get(new_key)
            accumulator[new_key] = product if previous is None else previous + product
    return MultiTensor._build(t.dim, legs, t.order, accumulator)


def tau_on_leg(t: MultiTensor, leg: int) -> MultiTensor:
    """
    tau(x1 x2) = x2 x1 aplicado às palavras de uma perna, que precisam ter
    grau 2.

    Raises:
        ShapeMismatchError: se alguma palavra da perna não tiver grau 2.
    """
    if not 1 <= leg <= t.legs:
        raise LegPositionError(f'perna {leg} fora de [1, {t.legs}]')
    accumulator = {}
    for key, coeff in t._terms.items():
        word = key[leg - 1]
        if len(word) != 2:
            raise ShapeMismatchError(f'tau exige grau 2 na perna {leg}, achou {word}')
        new_key = key[:leg - 1] + (word[::-1],) + key[leg:]
        previous = accumulator.get(new_key)
        accumulator[new_key] = coeff if previous is None else previous + coeff
    return MultiTensor._build(t.dim, t.legs, t.order, accumulator)


def parse_word(text: str, dim: int) -> Word:
    """
    Lê uma palavra escrita como "012" ou "0,1,2"; "1" sozinho é e1 e a
    palavra vazia se escreve "" ou "()".

    Raises:
        ParseError: caractere inválido, com a posição.
        IndexRangeError: letra fora de [0, dim).
    """
    text = text.strip()
    if text in ('', '()'):
        return ()
    if ',' in text:
        letters = []
        position = 0
        for chunk in text.split(','):
            stripped = chunk.strip()
            if not stripped.isdigit():
                raise ParseError(f'índice inválido {chunk!r}', position)
            letters.append(int(stripped))
            position += len(chunk) + 1
    else:
        letters = []
        for position, char in enumerate(text):
            if not char.isdigit():
                raise ParseError(f'caractere inválido {char!r}', position)
            letters.append(int(char))
    for letter in letters:
        if letter >= dim:
            raise IndexRangeError(f'letra {letter} fora de [0, {dim})')
    return tuple(letters)


def all_words(dim: int, length: int) -> Iterable[Word]:
    """Todas as palavras de um comprimento, em ordem lexicográfica."""
    return itertools.product(range(dim), repeat=length)


def words_up_to(dim: int, max_length: int) -> list:
    return [word for length in range(max_length + 1) for word in all_words(dim, length)]
