"""
scalars.py

Escalares exatos do motor: racionais de precisão arbitrária (Fraction) e o anel
de séries formais truncadas Q[h]/(h^N).

Toda série carrega a sua ordem de truncamento N e cada operação binária confere
se as ordens coincidem; misturar ordens é sempre um erro.

Classes:
    HSeries: série truncada c0 + c1*h + ... + c_{N-1}*h^{N-1}.

Functions:
    to_rational(value): converte int, str ("p/q") ou Fraction em Fraction.
    hs_mul(a, b): produto de Cauchy módulo h^N.
    hs_invert(a): inverso módulo h^N, definido quando a0 != 0.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from src.algebra.errors import NotInvertibleError, OrderMismatchError, ParseError

Rational = Fraction
Scalar = Union[int, Fraction, 'HSeries']

_TERM = re.compile(
    r'\s*(?P<sign>[+-])?\s*(?P<coeff>\d+(?:/\d+)?)?\s*'
    r'(?:(?P<star>\*)?\s*(?P<h>h)(?:\^(?P<power>\d+))?)?\s*'
)


def to_rational(value: Union[int, str, Fraction]) -> Fraction:
    """
    Converte um valor em racional exato.

    Params:
        value (int | str | Fraction): número inteiro, texto "p/q" ou racional.

    Raises:
        ParseError: se o texto não representar um racional.

    Returns:
        Fraction: o racional correspondente.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f'valor booleano não é racional: {value!r}', 0)
    if isinstance(value, int):
        return Fraction(value)
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f'racional inválido: {value!r}', 0)


@dataclass(frozen=True)
class HSeries:
    """
    Série formal em h truncada na ordem N = len(coeffs).

    Attrs:
        coeffs (tuple[Fraction, ...]): coeficientes de h^0 até h^{N-1}.
    """
    coeffs: tuple

    def __post_init__(self) -> None:
        if len(self.coeffs) < 1:
            raise OrderMismatchError('a ordem de truncamento precisa ser >= 1')
        object.__setattr__(
            self, 'coeffs', tuple(to_rational(c) for c in self.coeffs)
        )

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls, order: int) -> 'HSeries':
        return cls((Fraction(0),) * order)

    @classmethod
    def one(cls, order: int) -> 'HSeries':
        return cls.constant(1, order)

    @classmethod
    def constant(cls, value, order: int) -> 'HSeries':
        return cls.monomial(value, 0, order)

    @classmethod
    def monomial(cls, value, power: int, order: int) -> 'HSeries':
        """
        Monômio value*h^power, que se anula se power >= order.
        """
        coeffs = [Fraction(0)] * order
        if power < order:
            coeffs[power] = to_rational(value)
        return cls(tuple(coeffs))

    def _coerce(self, other) -> 'HSeries':
        if isinstance(other, HSeries):
            if other.order != self.order:
                raise OrderMismatchError(
                    f'ordens diferentes: {self.order} e {other.order}'
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return HSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other) -> 'HSeries':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return HSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> 'HSeries':
        return HSeries(tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> 'HSeries':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return HSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other) -> 'HSeries':
        return (-self) + other

    def __mul__(self, other) -> 'HSeries':
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            factor = Fraction(other)
            return HSeries(tuple(a * factor for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = self.order
        result = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if b:
                    result[i + j] += a * b
        return HSeries(tuple(result))

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not self

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs[0]

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < self.order:
            return self.coeffs[power]
        return Fraction(0)

    def valuation(self) -> int:
        """
        Menor potência de h com coeficiente não nulo; a série nula tem
        valuação igual à ordem.
        """
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self.order

    def shift(self, power: int) -> 'HSeries':
        """Multiplica por h^power, descartando o que passa de h^{N-1}."""
        n = self.order
        coeffs = [Fraction(0)] * n
        for k in range(n - power):
            coeffs[k + power] = self.coeffs[k]
        return HSeries(tuple(coeffs))

    def invert(self) -> 'HSeries':
        """
        Inverso módulo h^N pela recorrência b_k = -(sum_{i>=1} a_i b_{k-i}) / a_0.

        Raises:
            NotInvertibleError: se o termo constante for zero.

        Returns:
            HSeries: b com a*b = 1 mod h^N.
        """
        a0 = self.coeffs[0]
        if not a0:
            raise NotInvertibleError(f'série sem termo constante: {self}')
        n = self.order
        inverse = [Fraction(0)] * n
        inverse[0] = 1 / a0
        for k in range(1, n):
            acc = sum(
                (self.coeffs[i] * inverse[k - i] for i in range(1, k + 1)),
                Fraction(0),
            )
            inverse[k] = -acc / a0
        return HSeries(tuple(inverse))

    def __str__(self) -> str:
        parts = []
        for power, c in enumerate(self.coeffs):
            if not c:
                continue
            sign = '-' if c < 0 else '+'
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                h_part = 'h' if power == 1 else f'h^{power}'
                body = h_part if magnitude == 1 else f'{magnitude}*{h_part}'
            parts.append((sign, body))
        if not parts:
            return '0'
        first_sign, first_body = parts[0]
        text = ('-' if first_sign == '-' else '') + first_body
        for sign, body in parts[1:]:
            text += f' {sign} {body}'
        return text

    @classmethod
    def parse(cls, text: str, order: int) -> 'HSeries':
        """
        Lê a forma textual "c0 + c1*h + c2*h^2 + ..." produzida por __str__.

        Termos com potência >= order são descartados (truncamento).

        Params:
            text (str): a série em texto.
            order (int): ordem de truncamento do resultado.

        Raises:
            ParseError: se algum termo estiver mal formado.

        Returns:
            HSeries: a série lida.
        """
        result = cls.zero(order)
        pos = 0
        first = True
        text = text.rstrip()
        if not text.strip():
            raise ParseError('série vazia', 0)
        while pos < len(text):
            match = _TERM.match(text, pos)
            if (match is None or match.end() == pos
                    or (match.group('coeff') is None and match.group('h') is None)):
                raise ParseError(f'termo inválido em {text!r}', pos)
            if match.group('sign') is None and not first:
                raise ParseError(f'sinal esperado em {text!r}', pos)
            if match.group('star') and match.group('coeff') is None:
                raise ParseError(f'coeficiente esperado antes de "*" em {text!r}', pos)
            coeff = to_rational(match.group('coeff') or 1)
            if match.group('sign') == '-':
                coeff = -coeff
            if match.group('h') is None:
                power = 0
            else:
                power = int(match.group('power') or 1)
            result = result + cls.monomial(coeff, power, order)
            pos = match.end()
            first = False
        return result


def hs_mul(a: HSeries, b: HSeries) -> HSeries:
    return a * b


def hs_invert(a: HSeries) -> HSeries:
    return a.invert()
