"""
compute_model.py

Parâmetros das computações avulsas (z-bracket, delta e coproduct), validados
da mesma forma na linha de comando e na API.

Classes:
    ComputeParameters: campos comuns (dim e metric).
    ZBracketParameters: duas listas de índices de símbolos Z.
    DeltaParameters: uma palavra.
    CoproductParameters: uma palavra e a ordem N.
"""

from pydantic import BaseModel, model_validator, computed_field
from typing import Optional

from src import config
from src.algebra.freealg import Word, parse_word
from src.algebra.qlba import Bivector
from src.models.suite_config_model import load_metric


class ComputeParameters(BaseModel):
    """
    Attrs:
        dim (int): dimensão d, entre 1 e o limite configurado.
        metric (str): preset ou caminho de arquivo, como em SuiteConfig.
    """
    dim: int = 3
    metric: str = 'minkowski'

    _metric: Optional[Bivector] = None

    model_config = {
        'extra': 'forbid'
    }

    @model_validator(mode='after')
    def validate_dim_and_metric(self) -> 'ComputeParameters':
        if not 1 <= self.dim <= config.MAX_DIM:
            raise ValueError(
                f'O parâmetro dim precisa estar no intervalo entre 1 e {config.MAX_DIM}'
            )
        self._metric = load_metric(self.metric, self.dim)
        return self

    @property
    def bivector(self) -> Bivector:
        return self._metric


def _parse(text: str, dim: int, name: str) -> Word:
    word = parse_word(text, dim)
    if len(word) > config.MAX_DEGREE:
        raise ValueError(
            f'A palavra {name} tem grau {len(word)}, acima do limite {config.MAX_DEGREE}'
        )
    return word


class ZBracketParameters(ComputeParameters):
    """
    Attrs:
        a (str): índices do primeiro símbolo Z, como "0,1" ou "01".
        b (str): índices do segundo símbolo Z.
    """
    a: str
    b: str

    @model_validator(mode='after')
    def validate_indices(self) -> 'ZBracketParameters':
        for name in ('a', 'b'):
            if not _parse(getattr(self, name), self.dim, name):
                raise ValueError(f'O símbolo Z {name} precisa de ao menos um índice')
        return self

    @computed_field
    def indices(self) -> list:
        return [list(parse_word(self.a, self.dim)), list(parse_word(self.b, self.dim))]


class DeltaParameters(ComputeParameters):
    """
    Attrs:
        word (str): palavra em que δ_g é estendido como derivação.
    """
    word: str

    @model_validator(mode='after')
    def validate_word(self) -> 'DeltaParameters':
        _parse(self.word, self.dim, 'word')
        return self

    @computed_field
    def letters(self) -> list:
        return list(parse_word(self.word, self.dim))


class CoproductParameters(DeltaParameters):
    """
    Attrs:
        order (int): ordem de truncamento N, entre 1 e 3.
    """
    order: int = 1

    @model_validator(mode='after')
    def validate_order(self) -> 'CoproductParameters':
        if not 1 <= self.order <= min(3, config.MAX_ORDER):
            raise ValueError(
                'O parâmetro order precisa estar no intervalo entre 1 e 3 '
                '(a quantização geral é conhecida até h²)'
            )
        return self
