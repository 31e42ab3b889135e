"""
compute.py

Computações avulsas expostas pela linha de comando e pela API: o colchete
{,}_D de dois símbolos Z, a derivação D de δ_g numa palavra e o coproduto de
uma palavra até a ordem h^{N-1}.

Cada função recebe os parâmetros já validados e devolve um dicionário com a
forma canônica em texto ("result") e a forma JSON ("terms").

Functions:
    z_bracket(params): {Z_a, Z_b}_D decomposto em símbolos Z.
    delta(params): D(w) para a derivação que estende δ_g.
    coproduct(params): Δ(w) da quantização de ordem 2 com α = β = 0.
"""

import logging

from src.algebra.freealg import MultiTensor
from src.algebra.qlba import pr_qlba
from src.algebra.quant import extend_coproduct, order2_family
from src.algebra.traces import bracket_D, decompose_z, is_cyclic, z_symbol
from src.models.compute_model import CoproductParameters, DeltaParameters, ZBracketParameters

logger = logging.getLogger(__name__)

# a família de ordem 2 é conhecida até h²
COPRODUCT_ORDER = 3


def _tensor_result(expression: str, value: MultiTensor) -> dict:
    return {
        'expression': expression,
        'result': str(value),
        'terms': value.to_records(),
    }


def z_bracket(params: ZBracketParameters) -> dict:
    """
    Calcula {Z_a, Z_b}_D para a métrica pedida.

    Params:
        params (ZBracketParameters): índices dos dois símbolos, dim e métrica.

    Returns:
        dict: expressão, soma de símbolos Z em texto, os pesos por
        representante canônico e os valores por palavra.
    """
    a_indices, b_indices = params.indices
    q = pr_qlba(params.bivector)
    a = z_symbol(a_indices, params.dim)
    b = z_symbol(b_indices, params.dim)
    value = bracket_D(a, b, q)
    expression = (f'{{Z({",".join(map(str, a_indices))}), '
                  f'Z({",".join(map(str, b_indices))})}}_D')
    logger.info('%s: %s palavras', expression, len(value.terms))
    result = {'expression': expression, 'result': str(value)}
    if is_cyclic(value):
        result['z'] = [{'indices': list(word), 'weight': str(weight)}
                       for word, weight in decompose_z(value)]
    result['terms'] = value.to_json()
    return result


def delta(params: DeltaParameters) -> dict:
    q = pr_qlba(params.bivector)
    word = MultiTensor.word(params.letters, params.dim, 1)
    letters = ''.join(f'e{letter}' for letter in params.letters) or '1'
    return _tensor_result(f'D({letters})', q.derivation(word))


def coproduct(params: CoproductParameters) -> dict:
    """
    Δ(w) mod h^N, com Δ = Δ₀ + h[g, x⊗1] + h²Δ₂ estendido como morfismo de
    álgebras; N = 1 dá o coproduto de shuffle Δ₀.

    Raises:
        SymmetryError: se a métrica não for simétrica.
    """
    qh = order2_family(params.bivector, 0, 0, COPRODUCT_ORDER)
    word = MultiTensor.word(params.letters, params.dim, COPRODUCT_ORDER)
    value = extend_coproduct(qh, word).with_order(params.order)
    letters = ''.join(f'e{letter}' for letter in params.letters) or '1'
    return _tensor_result(f'Δ({letters}) mod h^{params.order}', value)
