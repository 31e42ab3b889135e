"""
suite_config_model.py

Define e valida a configuração de uma execução de suíte de verificação, vinda
da linha de comando ou dos parâmetros de consulta da API.

Utiliza Pydantic para assegurar a consistência dos dados antes de qualquer
computação: nome de suíte desconhecido, dimensões fora dos limites e métricas
mal formadas são rejeitados aqui.

Classes:
    SuiteConfig: Valida a configuração e resolve os padrões de cada suíte.

Functions:
    load_metric(metric, dim): resolve o preset ou lê a matriz de um arquivo.
"""

from pydantic import BaseModel, model_validator, computed_field
from typing import Optional
import os
import re

import yaml

from src import config
from src.algebra.qlba import Bivector, euclidean, minkowski

# nome -> (ordem N padrão, grau padrão, descrição)
SUITE_DEFAULTS = {
    'coleibniz': (1, 4, 'regra de co-Leibniz da derivação de δ_g em palavras'),
    'qlba-axioms': (1, 3, 'Λ², cociclo, quase-co-Jacobi, Alt e Λ³ para (δ_g, φ_g)'),
    'cojacobi-rank': (1, 1, 'co-Jacobi estrito de δ_s se e só se posto(s) <= 1'),
    'traces-jacobi': (1, 8, 'Jacobi de {,}_D em classes cíclicas e testemunha não cíclica'),
    'pr-vs-algebraic': (1, 6, 'colchete PR direto igual a c·{,}_D'),
    'rank2-quantization': (5, 2, 'coassociatividade, pentágono, counidade e limite clássico'),
    'antipode': (5, 3, 'S⋆id = 1ε para a antípoda fechada'),
    'order2': (3, 1, 'sistema linear de ordem h²: posto 10 e soluções de dimensão 2'),
    'twists': (3, 2, 'leis de twist de QLBA e quase-Hopf'),
}

_MINKOWSKI = re.compile(r'^minkowski(?:\((\d+)\))?$')


def load_metric(metric: str, dim: int) -> Bivector:
    """
    Resolve a métrica: "minkowski", "minkowski(d)", "euclidean" ou o caminho
    de um arquivo JSON ou YAML com a matriz d×d (racionais como "p/q").

    Raises:
        ValueError: métrica desconhecida, arquivo ausente ou dimensão diferente.
    """
    match = _MINKOWSKI.match(metric)
    if match:
        if match.group(1) is not None and int(match.group(1)) != dim:
            raise ValueError(
                f'A métrica {metric} não tem a dimensão pedida ({dim})'
            )
        return minkowski(dim)
    if metric == 'euclidean':
        return euclidean(dim)
    if not os.path.isfile(metric):
        raise ValueError(
            'A métrica precisa ser "minkowski", "minkowski(d)", "euclidean" '
            f'ou o caminho de um arquivo JSON/YAML; recebido {metric!r}'
        )
    with open(metric, encoding='utf-8') as handle:
        rows = yaml.safe_load(handle)
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise ValueError(f'O arquivo {metric} precisa conter uma lista de linhas')
    bivector = Bivector.from_rows([[str(x) for x in row] for row in rows])
    if bivector.dim != dim:
        raise ValueError(
            f'A matriz de {metric} é {bivector.dim}×{bivector.dim}, esperado {dim}×{dim}'
        )
    return bivector


class SuiteConfig(BaseModel):
    """
    Configuração de uma execução de suíte.

    Foi definido um atributo "model_config" como um dicionário contendo um par
    chave-valor "{'extra':'forbid'}", impedindo a inclusão de parâmetros não
    definidos no modelo.

    Attrs:
        suite (str): obrigatório, um dos nomes de SUITE_DEFAULTS.
        dim (int): dimensão d, entre 1 e o limite configurado.
        order (Optional[int]): ordem de truncamento N; sem valor, o padrão da
        suíte.
        degree (Optional[int]): grau máximo das palavras; sem valor, o padrão
        da suíte.
        metric (str): preset ou caminho de arquivo.
        seed (int): semente do sorteio determinístico de bivetores.
        output (Optional[str]): caminho do relatório JSON.
        parallel (bool): distribui as verificações entre processos.
        timings (bool): registra o tempo de cada verificação.
        _metric (Optional[Bivector]): a métrica já resolvida.
    """
    suite: str
    dim: int = 3
    order: Optional[int] = None
    degree: Optional[int] = None
    metric: str = 'minkowski'
    seed: int = 0
    output: Optional[str] = None
    parallel: bool = False
    timings: bool = False

    _metric: Optional[Bivector] = None

    model_config = {
        'extra': 'forbid'
    }

    @model_validator(mode='after')
    def validate_suite(self) -> 'SuiteConfig':
        """
        Rejeita nomes de suíte desconhecidos antes de qualquer computação.

        Raises:
            ValueError: se "suite" não estiver entre as suítes conhecidas.
        """
        if self.suite not in SUITE_DEFAULTS:
            raise ValueError(
                f'Suíte desconhecida {self.suite!r}. '
                f'Permitidas: {list(SUITE_DEFAULTS)}'
            )
        return self

    @model_validator(mode='after')
    def validate_and_set_limits(self) -> 'SuiteConfig':
        """
        Preenche "order" e "degree" com os padrões da suíte e confere os
        limites de recursos.

        Raises:
            ValueError: se algum valor for menor que 1 ou passar do limite.
        """
        default_order, default_degree, _ = SUITE_DEFAULTS[self.suite]
        if self.order is None:
            self.order = default_order
        if self.degree is None:
            self.degree = default_degree

        limits = {
            'dim': (self.dim, config.MAX_DIM),
            'order': (self.order, config.MAX_ORDER),
            'degree': (self.degree, config.MAX_DEGREE),
        }
        for name, (value, cap) in limits.items():
            if not 1 <= value <= cap:
                raise ValueError(
                    f'O parâmetro {name} precisa estar no intervalo entre 1 e {cap}; '
                    f'recebido {value}'
                )
        return self

    @model_validator(mode='after')
    def validate_and_load_metric(self) -> 'SuiteConfig':
        self._metric = load_metric(self.metric, self.dim)
        return self

    @property
    def bivector(self) -> Bivector:
        return self._metric

    @computed_field
    def metric_matrix(self) -> Optional[list]:
        """
        Matriz da métrica resolvida, em texto, para o eco da configuração no
        relatório.
        """
        return self._metric.to_rows() if self._metric is not None else None
