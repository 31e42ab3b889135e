"""
verification.py

Endpoints HTTP das suítes de verificação e das computações avulsas.

Os parâmetros de consulta são validados pelos modelos Pydantic antes de
qualquer computação. Erros de validação respondem 422, erros do motor
algébrico respondem 400 (ambos com o corpo {error, details, support, example})
e qualquer outro erro responde 500.

Endpoints:
    GET /suites/help: suítes válidas, parâmetros e um exemplo de requisição.

        Returns:
            response: objeto JSON com as suítes e seus padrões.

    GET /suites/<name>: executa a suíte e devolve o relatório; o status é 200
    mesmo quando alguma verificação falha (veja "passed" no corpo).

        Params:
            Path:
                name: nome da suíte
            Query:
                dim, order, degree, metric, seed

        Returns:
            response: o relatório JSON ou uma mensagem de erro.

    GET /compute/z-bracket: {Z_a, Z_b}_D.
    GET /compute/delta: D(w) para a derivação que estende δ_g.
    GET /compute/coproduct: Δ(w) mod h^N.
"""

import logging
import re

from flask import Blueprint, jsonify, request, Response
from pydantic import ValidationError

from src.algebra.errors import AlgebraError
from src.models import CoproductParameters, DeltaParameters, SuiteConfig, ZBracketParameters
from src.suites import compute as computations
from src.suites import run_suite, suite_help

logger = logging.getLogger(__name__)

verification_bp = Blueprint('Verification', __name__)

# campos de SuiteConfig que não fazem sentido numa requisição HTTP
_CLI_ONLY = ('output', 'parallel')

# pela API só os presets; arquivos de métrica ficam para a linha de comando
_PRESET = re.compile(r'^(minkowski(\(\d+\))?|euclidean)$')


def _query() -> dict:
    data = request.args.to_dict()
    if not _PRESET.match(data.get('metric', 'minkowski')):
        raise ValueError('O parâmetro metric aceita minkowski, minkowski(d) ou euclidean')
    return data


def _error(message: str, error: Exception, support: str, example: dict, status: int):
    return jsonify({
        "error": message,
        "details": str(error),
        "support": support,
        "example": example
    }), status


def _run_compute(model, function, example: dict) -> Response:
    try:
        params = model(**_query())
        return jsonify(function(params)), 200

    except ValidationError as e:
        return _error("Validation failed", e, "/suites/help", example, 422)

    except AlgebraError as e:
        return _error("Invalid input", e, "/suites/help", example, 400)

    except ValueError as e:
        return _error("Validation failed", e, "/suites/help", example, 422)

    except Exception as e:
        logger.exception('erro inesperado em %s', request.path)
        return jsonify({"error": str(e)}), 500


@verification_bp.route('/suites/help', methods=['GET'])
def suites_help() -> Response:
    """
    Endpoint de auxílio para as suítes de verificação.
    ---
    tags:
      - Suites
    responses:
      200:
        description: Suítes válidas com ordem N e grau padrão, parâmetros aceitos e exemplo de uso
      500:
        description: Erro interno no servidor ao tentar gerar os dados de auxílio.
    """
    try:
        return jsonify({
            "help": "Esse endpoint apresenta as suítes e os parâmetros válidos na API.",
            "example": "http://127.0.0.1:5000/suites/qlba-axioms?dim=3&metric=minkowski",
            "valid suites": list(suite_help().keys()),
            "parameters": {
                "dim": "entre 1 e PRQLBA_MAX_DIM",
                "order": "entre 1 e PRQLBA_MAX_ORDER (padrão da suíte)",
                "degree": "entre 1 e PRQLBA_MAX_DEGREE (padrão da suíte)",
                "metric": ["minkowski", "minkowski(d)", "euclidean"],
                "seed": "inteiro, padrão 0",
            },
            "details": suite_help()
        }), 200

    except Exception as e:
        return jsonify({"error": str(e)}), 500


@verification_bp.route('/suites/<string:name>', methods=['GET'])
def run_suite_endpoint(name) -> Response:
    """
    Executa uma suíte de verificação.
    ---
    produces:
      - application/json
    tags:
      - Suites
    parameters:
      - in: path
        name: name
        type: string
        enum: ['coleibniz', 'qlba-axioms', 'cojacobi-rank', 'traces-jacobi', 'pr-vs-algebraic', 'rank2-quantization', 'antipode', 'order2', 'twists']
        required: true
      - in: query
        name: dim
        type: integer
        required: false
        description: Dimensão d de V (padrão 3)
      - in: query
        name: order
        type: integer
        required: false
        description: Ordem de truncamento N (padrão da suíte)
      - in: query
        name: degree
        type: integer
        required: false
        description: Grau máximo das palavras (padrão da suíte)
      - in: query
        name: metric
        type: string
        required: false
        description: minkowski, minkowski(d) ou euclidean
      - in: query
        name: seed
        type: integer
        required: false
        description: Semente do sorteio de bivetores (padrão 0)
    responses:
      200:
        description: Relatório da suíte; "passed" indica se todas as verificações passaram.
      422:
        description: Erro de validação dos parâmetros.
      500:
        description: Erro interno no servidor ao executar a suíte.
    """
    try:
        data = _query()
        for key in _CLI_ONLY:
            if key in data:
                raise ValueError(f'O parâmetro {key} só é aceito na linha de comando')
        suite_config = SuiteConfig(suite=name, **data)
        return jsonify(run_suite(suite_config).to_json()), 200

    except (ValidationError, ValueError) as e:
        return _error("Validation failed", e, "/suites/help",
                      {"dim": 3, "metric": "minkowski", "degree": 3}, 422)

    except Exception as e:
        logger.exception('erro inesperado na suíte %s', name)
        return jsonify({"error": str(e)}), 500


@verification_bp.route('/compute/z-bracket', methods=['GET'])
def z_bracket() -> Response:
    """
    Colchete {Z_a, Z_b}_D de dois símbolos Z.
    ---
    produces:
      - application/json
    tags:
      - Compute
    parameters:
      - in: query
        name: a
        type: string
        required: true
        description: Índices do primeiro símbolo (Ex. 0,1)
      - in: query
        name: b
        type: string
        required: true
        description: Índices do segundo símbolo (Ex. 2)
      - in: query
        name: dim
        type: integer
        required: false
      - in: query
        name: metric
        type: string
        required: false
    responses:
      200:
        description: Soma de símbolos Z e valores por palavra.
      400:
        description: Entrada inválida para o motor algébrico.
      422:
        description: Erro de validação dos parâmetros.
      500:
        description: Erro interno no servidor.
    """
    return _run_compute(ZBracketParameters, computations.z_bracket,
                        {"a": "0,1", "b": "2", "dim": 3})


@verification_bp.route('/compute/delta', methods=['GET'])
def delta() -> Response:
    """
    Derivação D que estende δ_g, aplicada a uma palavra.
    ---
    produces:
      - application/json
    tags:
      - Compute
    parameters:
      - in: query
        name: word
        type: string
        required: true
        description: Palavra (Ex. 01 ou 0,1)
      - in: query
        name: dim
        type: integer
        required: false
      - in: query
        name: metric
        type: string
        required: false
    responses:
      200:
        description: D(w) em forma canônica e como registros {coeff, words}.
      422:
        description: Erro de validação dos parâmetros.
      500:
        description: Erro interno no servidor.
    """
    return _run_compute(DeltaParameters, computations.delta, {"word": "0", "dim": 2})


@verification_bp.route('/compute/coproduct', methods=['GET'])
def coproduct() -> Response:
    """
    Coproduto de uma palavra mod h^N.
    ---
    produces:
      - application/json
    tags:
      - Compute
    parameters:
      - in: query
        name: word
        type: string
        required: true
      - in: query
        name: order
        type: integer
        required: false
        description: Ordem N entre 1 e 3 (1 dá o coproduto de shuffle)
      - in: query
        name: dim
        type: integer
        required: false
      - in: query
        name: metric
        type: string
        required: false
    responses:
      200:
        description: Δ(w) em forma canônica e como registros {coeff, words}.
      400:
        description: Métrica não simétrica.
      422:
        description: Erro de validação dos parâmetros.
      500:
        description: Erro interno no servidor.
    """
    return _run_compute(CoproductParameters, computations.coproduct,
                        {"word": "01", "order": 1})
