"""
errors.py

Hierarquia de exceções do motor algébrico.

Todas derivam de ValueError, de modo que, quando lançadas dentro de um
validador do Pydantic, chegam às rotas como ValidationError, da mesma forma que
os erros dos modelos de parâmetros.

Classes:
    AlgebraError: base de todos os erros do pacote "algebra".
    OrderMismatchError: séries ou tensores com ordens de truncamento diferentes.
    NotInvertibleError: elemento sem inverso módulo h^N.
    ShapeMismatchError: tensores com dimensão, pernas ou ordem incompatíveis.
    LegPositionError: posição de perna fora do intervalo ou repetida.
    InvalidPermutationError: lista que não é uma permutação das pernas.
    LegCountError: número de pernas diferente do exigido pela operação.
    NonzeroConstantTermError: exponencial de tensor com termo constante em h.
    SymmetryError: bivetor que deveria ser simétrico ou antissimétrico.
    RankError: bivetor de posto maior que o permitido.
    InvariantError: estrutura que viola os invariantes exigidos.
    InconsistentSystemError: sistema linear sem solução.
    NotPrimitiveError: elemento que deveria ser primitivo.
    IndexRangeError: índice de gerador fora de [0, d).
    ParseError: texto de entrada mal formado, com a posição do erro.
"""


class AlgebraError(ValueError):
    """Erro base do pacote algebra."""


class OrderMismatchError(AlgebraError):
    pass


class NotInvertibleError(AlgebraError):
    pass


class ShapeMismatchError(AlgebraError):
    pass


class LegPositionError(AlgebraError):
    pass


class InvalidPermutationError(AlgebraError):
    pass


class LegCountError(AlgebraError):
    pass


class NonzeroConstantTermError(AlgebraError):
    pass


class SymmetryError(AlgebraError):
    pass


class RankError(AlgebraError):
    pass


class InvariantError(AlgebraError):
    pass


class InconsistentSystemError(AlgebraError):
    """
    O sistema linear da ordem 2 não tem solução.

    Nunca é um resultado legítimo: indica erro na montagem do sistema.
    """


class NotPrimitiveError(AlgebraError):
    pass


class IndexRangeError(AlgebraError):
    pass


class ParseError(AlgebraError):
    """
    Texto de entrada inválido.

    Attrs:
        position (int): posição (a partir de 0) do primeiro caractere inválido.
    """

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f'{message} (posição {position})')
        self.position = position
