"""
config.py

Este módulo define as configurações da aplicação Flask para diferentes ambientes
(desenvolvimento e produção), os limites de recursos das verificações, a
configuração do logging e um provedor JSON personalizado.

Os limites são lidos das variáveis de ambiente PRQLBA_MAX_DIM, PRQLBA_MAX_ORDER
e PRQLBA_MAX_DEGREE e valem tanto para a linha de comando quanto para as rotas
HTTP.

Classes:
    ConfigDev: Configurações específicas para ambiente de desenvolvimento.
    ConfigProd: Configurações específicas para ambiente de produção.
    CustomJSONProvider: Provedor personalizado de serialização JSON no Flask
    que preserva Unicode e a ordem das chaves e escreve Fraction e HSeries
    como texto.

Functions:
    configure_logging(level): configura o logger raiz com um único handler em
    stderr.
    dump_json(obj): serializa com as mesmas opções do provedor do Flask.
"""

from flask.json.provider import DefaultJSONProvider
from fractions import Fraction
from typing import Any, Optional, Union
import json
import logging
import os

from src.algebra.scalars import HSeries

VERSION = '1.0.0'

MAX_DIM = int(os.environ.get('PRQLBA_MAX_DIM', 4))
MAX_ORDER = int(os.environ.get('PRQLBA_MAX_ORDER', 6))
MAX_DEGREE = int(os.environ.get('PRQLBA_MAX_DEGREE', 8))

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


class ConfigDev:
    """
    Configurações de desenvolvimento para a aplicação Flask.

    Attrs:
        DEBUG (bool): Ativa o modo de depuração.
        JSONIFY_PRETTYPRINT_REGULAR (bool): Ativa a identação na saída JSON.
        LOG_LEVEL (str): nível do logger raiz.
    """
    DEBUG = True
    JSONIFY_PRETTYPRINT_REGULAR = True
    LOG_LEVEL = os.environ.get('PRQLBA_LOG_LEVEL', 'DEBUG')


class ConfigProd:
    """
    Configurações de produção para a aplicação Flask.

    Attrs:
        DEBUG (bool): Desativa o modo de depuração.
        JSONIFY_PRETTYPRINT_REGULAR (bool): Ativa a identação na saída JSON.
        LOG_LEVEL (str): nível do logger raiz.
    """
    DEBUG = False
    JSONIFY_PRETTYPRINT_REGULAR = True
    LOG_LEVEL = os.environ.get('PRQLBA_LOG_LEVEL', 'WARNING')


def configure_logging(level: Optional[Union[str, int]] = None) -> None:
    """
    Configura o logger raiz com um handler em stderr, para que a saída JSON em
    stdout continue legível por máquina.

    Params:
        level (Optional[str | int]): nível; por padrão PRQLBA_LOG_LEVEL ou
        WARNING.
    """
    if level is None:
        level = os.environ.get('PRQLBA_LOG_LEVEL', 'WARNING')
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel(level.upper() if isinstance(level, str) else level)


def dump_json(obj: Any, indent: Optional[int] = 2) -> str:
    """
    Serializa como o CustomJSONProvider: Unicode preservado e chaves na ordem
    de inserção.
    """
    return json.dumps(obj, ensure_ascii=False, sort_keys=False, indent=indent,
                      default=CustomJSONProvider.default)


class CustomJSONProvider(DefaultJSONProvider):
    """
    Provedor personalizado de JSON para a aplicação Flask.

    Preserva Unicode e a ordem das chaves e serializa os escalares exatos do
    motor (Fraction e HSeries) pela sua forma textual, a mesma dos relatórios.

    Methods:
        default: converte Fraction e HSeries em texto.
        dumps: serializa um objeto Python em uma string JSON.
    """

    @staticmethod
    def default(o: Any) -> Any:
        """
        Converte os escalares exatos em texto ("1/2", "1 + h") e delega os
        demais tipos ao provedor padrão do Flask.
        """
        if isinstance(o, (Fraction, HSeries)):
            return str(o)
        return DefaultJSONProvider.default(o)

    def dumps(self, obj, **kwargs) -> str:
        """
        Serializa um objeto Python em uma string JSON.

        Definimos os argumentos "ensure_ascii" e "sort_keys" como False, já que
        por padrão são True. O primeiro preserva símbolos como ⊗ e h² nos
        relatórios, enquanto o segundo mantém a ordem das verificações e dos
        termos.

        Args:
            obj (Any): Objeto Python a ser serializado.
            kwargs: Parâmetros adicionais para customizar a serialização.

        Returns:
            str: Representação JSON do objeto.
        """
        kwargs.setdefault('ensure_ascii', False)
        kwargs.setdefault('sort_keys', False)

        return super().dumps(obj, **kwargs)
