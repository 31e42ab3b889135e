"""
traces.py

A álgebra de Poisson dos traços cíclicos: funcionais em palavras, tensores
cíclicos (os símbolos Z), o produto de embaralhamento •₀, o colchete algébrico
{,}_D, o colchete direto de Pohlmeyer-Rehren e as verificações de Jacobi.

Tudo aqui é clássico: os coeficientes são racionais e o colchete usa apenas o
termo h^0 da derivação.

Classes:
    WordFunctional: funcional linear em T(V), esparso em palavras.
    CyclicTensor: funcional invariante por rotação das palavras.

Functions:
    z_symbol(indices, dim): soma das rotações de uma palavra.
    canonical_rotation(word): menor rotação lexicográfica.
    is_cyclic(f): se f é invariante por rotação.
    decompose_z(f): f como soma de símbolos Z canônicos.
    unshuffle_product(a, b): a •₀ b = (a⊗b)Δ₀.
    bracket_D(a, b, q): {a, b}_D = (a⊗b)D.
    pr_bracket_direct(a, b, g): a fórmula combinatória do colchete PR.
    pr_bracket(a, b, g): extensão bilinear de pr_bracket_direct.
    first_nonzero_bracket(q, max_total): menor par de classes com {,}_D não nulo.
    bracket_constant(q, g, max_total): a constante c com PR = c·{,}_D.
    jacobiator(bracket, a, b, c): {a,{b,c}} + {c,{a,b}} + {b,{c,a}}.
    find_jacobi_witness(q, max_total): tripla de palavras com jacobiador não nulo.
    leibniz_defect(q, a, b, c): {a, b•₀c} - {a,b}•₀c - b•₀{a,c}.
    memoized_bracket(q): bracket_D com cache por par de argumentos.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping, Optional, Sequence

from src.algebra.errors import IndexRangeError, InvariantError, ShapeMismatchError
from src.algebra.freealg import MultiTensor, Word, all_words, words_up_to
from src.algebra.qlba import Bivector, QlbaData
from src.algebra.scalars import to_rational

logger = logging.getLogger(__name__)


def _canonical_terms(terms: Mapping) -> dict:
    cleaned = {}
    for word, value in terms.items():
        value = to_rational(value)
        if value:
            cleaned[tuple(word)] = value
    return dict(sorted(cleaned.items(), key=lambda item: (len(item[0]), item[0])))


@dataclass(frozen=True)
class WordFunctional:
    """
    Funcional w -> terms[w], emparelhado com T(V) por <u, w> = delta_{uw}.

    Attrs:
        dim (int): dimensão d.
        terms (dict[Word, Fraction]): coeficientes não nulos, em ordem de
        comprimento e depois lexicográfica.
    """
    dim: int
    terms: dict

    def __post_init__(self) -> None:
        terms = _canonical_terms(self.terms)
        for word in terms:
            if any(not 0 <= letter < self.dim for letter in word):
                raise IndexRangeError(f'palavra {word} fora de [0, {self.dim})')
        object.__setattr__(self, 'terms', terms)

    @classmethod
    def zero(cls, dim: int) -> 'WordFunctional':
        return cls(dim, {})

    @classmethod
    def word(cls, letters: Sequence[int], dim: int, coeff=1) -> 'WordFunctional':
        return cls(dim, {tuple(letters): coeff})

    def __hash__(self) -> int:
        return hash((self.dim, tuple(self.terms.items())))

    def __eq__(self, other) -> bool:
        if not isinstance(other, WordFunctional):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check_dim(self, other: 'WordFunctional') -> None:
        if self.dim != other.dim:
            raise ShapeMismatchError(f'dimensões diferentes: {self.dim} e {other.dim}')

    def _combine(self, other: 'WordFunctional', sign: int) -> dict:
        self._check_dim(other)
        terms = dict(self.terms)
        for word, value in other.terms.items():
            terms[word] = terms.get(word, Fraction(0)) + sign * value
        return terms

    def __add__(self, other: 'WordFunctional') -> 'WordFunctional':
        return WordFunctional(self.dim, self._combine(other, 1))

    def __sub__(self, other: 'WordFunctional') -> 'WordFunctional':
        return WordFunctional(self.dim, self._combine(other, -1))

    def __neg__(self) -> 'WordFunctional':
        return self.scale(-1)

    def scale(self, factor) -> 'WordFunctional':
        factor = to_rational(factor)
        return WordFunctional(self.dim, {w: v * factor for w, v in self.terms.items()})

    def value(self, word: Word) -> Fraction:
        return self.terms.get(tuple(word), Fraction(0))

    def degrees(self) -> tuple:
        return tuple(sorted({len(word) for word in self.terms}))

    def homogeneous(self, degree: int) -> 'WordFunctional':
        return WordFunctional(self.dim, {w: v for w, v in self.terms.items() if len(w) == degree})

    def pair(self, t: MultiTensor) -> Fraction:
        """<f, t> com o termo h^0 dos coeficientes de t (1 perna)."""
        if t.legs != 1:
            raise ShapeMismatchError(f'o emparelhamento exige 1 perna, recebeu {t.legs}')
        return sum((self.value(key[0]) * coeff.constant_term for key, coeff in t.items()),
                   Fraction(0))

    def as_cyclic(self) -> 'CyclicTensor':
        return CyclicTensor(self.dim, self.terms)

    def to_json(self) -> dict:
        return {''.join(map(str, word)) if self.dim <= 10 else ','.join(map(str, word)): str(v)
                for word, v in self.terms.items()}

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        return ' + '.join(f'{v}*<{",".join(map(str, w))}>' for w, v in self.terms.items())


class CyclicTensor(WordFunctional):
    """
    WordFunctional cujas componentes homogêneas são invariantes por rotação
    das palavras.

    Raises:
        InvariantError: se os coeficientes não forem invariantes por rotação.
    """

    def __post_init__(self) -> None:
        super().__post_init__()
        if not is_cyclic(self):
            raise InvariantError('tensor cíclico com coeficientes não invariantes por rotação')

    def __str__(self) -> str:
        parts = decompose_z(self)
        if not parts:
            return '0'
        return ' + '.join(f'{c}*Z({",".join(map(str, r))})' for r, c in parts)


def _rotations(word: Word) -> list:
    return [word[i:] + word[:i] for i in range(len(word))] or [()]


def canonical_rotation(word: Sequence[int]) -> Word:
    return min(_rotations(tuple(word)))


def is_cyclic(f: WordFunctional) -> bool:
    return all(f.value(rotated) == value
               for word, value in f.terms.items() for rotated in _rotations(word))


def z_symbol(indices: Sequence[int], dim: int) -> CyclicTensor:
    """
    Z_{μ₁…μ_k}: soma das k rotações da palavra, com multiplicidade para
    palavras periódicas.

    Raises:
        IndexRangeError: se a lista for vazia ou algum índice >= dim.
    """
    word = tuple(indices)
    if not word:
        raise IndexRangeError('um símbolo Z precisa de ao menos um índice')
    terms = {}
    for rotated in _rotations(word):
        terms[rotated] = terms.get(rotated, 0) + 1
    return CyclicTensor(dim, terms)


def _period(word: Word) -> int:
    return next(p for p in range(1, len(word) + 1)
                if len(word) % p == 0 and word[p:] + word[:p] == word)


def decompose_z(f: WordFunctional) -> list:
    """
    Decompõe um tensor cíclico em símbolos Z de representantes canônicos.

    O coeficiente de r em Z_r é k/p (k o comprimento, p o período), de modo
    que o peso de Z_r em f é f(r)·p/k.

    Returns:
        list[tuple[Word, Fraction]]: (representante canônico, peso).
    """
    parts = []
    for word, value in f.terms.items():
        if word and word == canonical_rotation(word):
            parts.append((word, value * _period(word) / len(word)))
    return parts


@lru_cache(maxsize=None)
def _shuffles(u: Word, w: Word) -> tuple:
    # entrelaçamentos de u e w, com multiplicidade
    if not u:
        return ((w, 1),)
    if not w:
        return ((u, 1),)
    counts = {}
    for rest, mult in _shuffles(u[1:], w):
        key = u[:1] + rest
        counts[key] = counts.get(key, 0) + mult
    for rest, mult in _shuffles(u, w[1:]):
        key = w[:1] + rest
        counts[key] = counts.get(key, 0) + mult
    return tuple(counts.items())


def shuffle_words(u: Sequence[int], w: Sequence[int]) -> dict:
    return dict(_shuffles(tuple(u), tuple(w)))


def _keep_cyclic(result: WordFunctional, a: WordFunctional,
                 b: WordFunctional) -> WordFunctional:
    # entradas cíclicas devolvem CyclicTensor quando o resultado é cíclico
    if isinstance(a, CyclicTensor) and isinstance(b, CyclicTensor):
        if is_cyclic(result):
            return result.as_cyclic()
        logger.warning('resultado não cíclico a partir de entradas cíclicas')
    return result


def unshuffle_product(a: WordFunctional, b: WordFunctional) -> WordFunctional:
    """a •₀ b: soma dos embaralhamentos das palavras, dual de Δ₀."""
    a._check_dim(b)
    terms = {}
    for u, x in a.terms.items():
        for w, y in b.terms.items():
            for word, mult in _shuffles(u, w):
                terms[word] = terms.get(word, Fraction(0)) + mult * x * y
    return _keep_cyclic(WordFunctional(a.dim, terms), a, b)


def _degree_shifts(q: QlbaData) -> tuple:
    shifts = {sum(len(word) for word in key) - 1
              for image in q.delta.images for key, _ in image.items()}
    return tuple(sorted(shifts))


def bracket_D(a: WordFunctional, b: WordFunctional, q: QlbaData) -> WordFunctional:
    """
    {a, b}_D: o funcional w -> <a⊗b, D(w)>.

    Só as palavras w com len(w) + (aumento de grau de D) = deg a + deg b podem
    emparelhar; para cada par de graus elas são enumeradas e D(w) vem do cache
    da derivação de q.

    Params:
        a (WordFunctional): primeiro argumento.
        b (WordFunctional): segundo argumento.
        q (QlbaData): a QLBA cuja derivação define o colchete.

    Returns:
        WordFunctional: cíclico quando a e b são cíclicos.
    """
    a._check_dim(b)
    if a.dim != q.dim:
        raise ShapeMismatchError(f'funcionais em dimensão {a.dim}, QLBA em {q.dim}')
    derivation = q.derivation
    lengths = sorted({k + l - shift
                      for k in a.degrees() for l in b.degrees()
                      for shift in _degree_shifts(q)
                      if k + l - shift >= 0})
    terms = {}
    for n in lengths:
        for word in all_words(q.dim, n):
            total = Fraction(0)
            for (u, w), coeff in derivation.word_image(word).items():
                x = a.terms.get(u)
                if x is None:
                    continue
                y = b.terms.get(w)
                if y is not None:
                    total += x * y * coeff.constant_term
            if total:
                terms[word] = total
    return _keep_cyclic(WordFunctional(a.dim, terms), a, b)


def _segment(word: Word, start: int, length: int) -> Word:
    k = len(word)
    return tuple(word[(start + t) % k] for t in range(max(0, length)))


def _single_class(f: WordFunctional) -> tuple:
    parts = decompose_z(f)
    if len(parts) != 1 or len(f.degrees()) != 1:
        raise InvariantError('o colchete direto exige uma única classe cíclica homogênea')
    return parts[0]


def pr_bracket_direct(a: CyclicTensor, b: CyclicTensor, g: Bivector) -> CyclicTensor:
    """
    {Z_μ, Z_ν} = 2 sum_{i,j} g_{μ_i ν_j} (Z_{μ_{i+1} □ … ν_{j-1}} - Z_{ν_{j+1} □ … μ_{i-1}}).

    Os índices são cíclicos; o primeiro termo embaralha μ_{i+2}…μ_{i-1} com
    ν_{j+1}…ν_{j-2} entre μ_{i+1} e ν_{j-1}, o segundo embaralha μ_{i+1}…μ_{i-2}
    com ν_{j+2}…ν_{j-1} entre ν_{j+1} e μ_{i-1}. Segmentos de comprimento
    negativo são vazios.

    Raises:
        InvariantError: se a ou b não for uma única classe homogênea.
    """
    a._check_dim(b)
    mu, weight_a = _single_class(a)
    nu, weight_b = _single_class(b)
    k, l = len(mu), len(nu)
    result = CyclicTensor.zero(a.dim)
    terms = {}
    for i, j in itertools.product(range(k), range(l)):
        metric = g.entry(mu[i], nu[j])
        if not metric:
            continue
        factor = 2 * metric * weight_a * weight_b
        first = shuffle_words(_segment(mu, i + 2, k - 2), _segment(nu, j + 1, l - 2))
        for middle, mult in first.items():
            word = (mu[(i + 1) % k],) + middle + (nu[(j - 1) % l],)
            terms[word] = terms.get(word, 0) + factor * mult
        second = shuffle_words(_segment(mu, i + 1, k - 2), _segment(nu, j + 2, l - 2))
        for middle, mult in second.items():
            word = (nu[(j + 1) % l],) + middle + (mu[(i - 1) % k],)
            terms[word] = terms.get(word, 0) - factor * mult
    for word, value in terms.items():
        if value:
            result = result + z_symbol(word, a.dim).scale(value)
    return CyclicTensor(a.dim, result.terms)


def pr_bracket(a: CyclicTensor, b: CyclicTensor, g: Bivector) -> CyclicTensor:
    """Extensão bilinear de pr_bracket_direct a somas de símbolos Z."""
    result = WordFunctional.zero(a.dim)
    for mu, x in decompose_z(a):
        for nu, y in decompose_z(b):
            value = pr_bracket_direct(z_symbol(mu, a.dim), z_symbol(nu, b.dim), g)
            result = result + value.scale(x * y)
    return CyclicTensor(a.dim, result.terms)


def cyclic_classes(dim: int, degree: int) -> list:
    """Representantes canônicos das classes cíclicas de palavras de um grau."""
    return sorted({canonical_rotation(word) for word in all_words(dim, degree)})


def _ratio(lhs: WordFunctional, rhs: WordFunctional) -> Fraction:
    word = next(iter(rhs.terms))
    return lhs.value(word) / rhs.value(word)


def first_nonzero_bracket(q: QlbaData, max_total: int = 8) -> tuple:
    """
    O menor par de classes cíclicas (por grau total, depois por k) em que
    bracket_D não se anula.

    Params:
        q (QlbaData): a QLBA que define {,}_D.
        max_total (int): maior grau total k+l examinado.

    Returns:
        tuple: (mu, nu) com os representantes canônicos das duas classes.

    Raises:
        InvariantError: se bracket_D se anular em todos os pares até max_total.
    """
    for total in range(2, max_total + 1):
        for k in range(1, total):
            for mu in cyclic_classes(q.dim, k):
                for nu in cyclic_classes(q.dim, total - k):
                    if bracket_D(z_symbol(mu, q.dim), z_symbol(nu, q.dim), q):
                        logger.debug('primeiro {,}_D não nulo em (%s, %s)', mu, nu)
                        return mu, nu
    raise InvariantError(f'bracket_D nulo em todos os pares de grau total <= {max_total}')


def bracket_constant(q: QlbaData, g: Bivector, max_total: int = 8,
                     pair: Optional[tuple] = None) -> Fraction:
    """
    A constante c com pr_bracket_direct = c·bracket_D, lida no par devolvido
    por first_nonzero_bracket (ou no par dado, já conhecido como não nulo).
    Com a métrica de Minkowski em d=3 esse par tem grau total 7.

    Raises:
        InvariantError: se bracket_D se anular em todos os pares até max_total.
    """
    mu, nu = pair or first_nonzero_bracket(q, max_total)
    a, b = z_symbol(mu, q.dim), z_symbol(nu, q.dim)
    constant = _ratio(pr_bracket_direct(a, b, g), bracket_D(a, b, q))
    logger.debug('constante do colchete em (%s, %s): %s', mu, nu, constant)
    return constant


Bracket = Callable[[WordFunctional, WordFunctional], WordFunctional]


def memoized_bracket(q: QlbaData) -> Bracket:
    """bracket_D(., ., q) com cache por par de argumentos."""
    cache = {}

    def bracket(a: WordFunctional, b: WordFunctional) -> WordFunctional:
        key = (a, b)
        if key not in cache:
            cache[key] = bracket_D(a, b, q)
        return cache[key]

    return bracket


def jacobiator(bracket: Bracket, a: WordFunctional, b: WordFunctional,
               c: WordFunctional) -> WordFunctional:
    return (bracket(a, bracket(b, c)) + bracket(c, bracket(a, b))
            + bracket(b, bracket(c, a)))


def find_jacobi_witness(q: QlbaData, max_total: int = 6) -> Optional[tuple]:
    """
    Procura, em grau total crescente, palavras a, b, c (funcionais não
    cíclicos) com jacobiador de {,}_D não nulo.

    Returns:
        Optional[tuple]: (a, b, c, jacobiador) da primeira tripla encontrada,
        ou None se não houver até max_total.
    """
    bracket = memoized_bracket(q)
    words = words_up_to(q.dim, max_total)
    for total in range(3, max_total + 1):
        for ka in range(1, total - 1):
            for kb in range(1, total - ka):
                kc = total - ka - kb
                for u, v, w in itertools.product(
                        [x for x in words if len(x) == ka],
                        [x for x in words if len(x) == kb],
                        [x for x in words if len(x) == kc]):
                    a = WordFunctional.word(u, q.dim)
                    b = WordFunctional.word(v, q.dim)
                    c = WordFunctional.word(w, q.dim)
                    value = jacobiator(bracket, a, b, c)
                    if value:
                        logger.info('testemunha de Jacobi em grau total %s: %s %s %s',
                                    total, u, v, w)
                        return a, b, c, value
    return None


def leibniz_defect(q: QlbaData, a: WordFunctional, b: WordFunctional,
                   c: WordFunctional) -> WordFunctional:
    return (bracket_D(a, unshuffle_product(b, c), q)
            - unshuffle_product(bracket_D(a, b, q), c)
            - unshuffle_product(b, bracket_D(a, c, q)))
