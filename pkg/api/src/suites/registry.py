"""
registry.py

As nove suítes de verificação e a sua execução.

Cada suíte é uma função que recebe a SuiteConfig e devolve a lista ordenada de
verificações (nome e função sem argumentos que devolve um Verdict). A
execução mede o tempo quando pedido, transforma erros do motor algébrico em
verificações com falha e, com "parallel", distribui as verificações entre
processos mantendo a ordem de declaração no relatório.

Functions:
    build_checks(config): lista de verificações de uma suíte.
    run_suite(config): executa a suíte e devolve o SuiteReport.
    fuzz_bivectors(rng, dim, rank, count): bivetores sorteados de posto dado.
    suite_help(): descrição das suítes para a ajuda da CLI e da API.
"""

import itertools
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from src import config as app_config
from src.algebra.coalgebra import Verdict, co_leibniz_check
from src.algebra.errors import AlgebraError
from src.algebra.freealg import MultiTensor, mt_exp, words_up_to
from src.algebra.lie import lyndon_basis
from src.algebra.qlba import (
    Bivector,
    QlbaData,
    alt_condition_check,
    cocycle_check,
    cojacobi_rank_test,
    lambda2_check,
    lambda3_check,
    phi_s,
    vector_tensor,
    pr_qlba,
    qlba_from_bivector,
    quasi_cojacobi_check,
    twist_qlba,
    delta_s,
)
from src.algebra.quant import (
    EndoMap,
    antipode_closed_form,
    classical_limit,
    coassoc_defect,
    coboundary_quantize,
    convolution,
    counit_defects,
    order2_family,
    order2_solve,
    pentagon_defect,
    rank2_quantize,
    skew_classical_part,
    twist_qh,
    undeformed,
    unit_counit,
)
from src.algebra.traces import (
    WordFunctional,
    bracket_D,
    bracket_constant,
    cyclic_classes,
    find_jacobi_witness,
    first_nonzero_bracket,
    is_cyclic,
    jacobiator,
    memoized_bracket,
    pr_bracket_direct,
    z_symbol,
)
from src.models.report_model import CheckOutcome, SuiteReport, witness_json
from src.models.suite_config_model import SUITE_DEFAULTS, SuiteConfig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Check:
    """
    Attrs:
        name (str): nome exibido no relatório.
        run (Callable[[], Verdict | tuple[Verdict, object]]): a verificação,
        opcionalmente com um detalhe para o relatório.
    """
    name: str
    run: Callable


def _difference(lhs: MultiTensor, rhs: MultiTensor) -> Verdict:
    return Verdict.from_difference(lhs - rhs)


def _same_qlba(lhs: QlbaData, rhs: QlbaData) -> Verdict:
    return Verdict.combine(
        [_difference(a, b) for a, b in zip(lhs.delta.images, rhs.delta.images)]
        + [_difference(lhs.phi, rhs.phi)]
    )


def _words(config: SuiteConfig, min_length: int = 0) -> list:
    return [MultiTensor.word(word, config.dim, config.order)
            for word in words_up_to(config.dim, config.degree) if len(word) >= min_length]


def _elementary(dim: int) -> Bivector:
    """s = e0⊗e1, o exemplo padrão de bivetor decomponível."""
    if dim < 2:
        raise AlgebraError('a suíte exige d >= 2 para s = e0⊗e1')
    return Bivector.outer([int(i == 0) for i in range(dim)], [int(i == 1) for i in range(dim)])


def fuzz_bivectors(rng: random.Random, dim: int, rank: int, count: int) -> list:
    """
    Sorteia bivetores com entradas inteiras pequenas como soma de `rank`
    produtos v⊗w, repetindo o sorteio até o posto ser exatamente `rank`.
    """
    result = []
    while len(result) < count:
        total = Bivector.zero(dim)
        for _ in range(rank):
            v = [rng.randint(-2, 2) for _ in range(dim)]
            w = [rng.randint(-2, 2) for _ in range(dim)]
            total = total + Bivector.outer(v, w)
        if total.rank() == rank:
            result.append(total)
    return result


def fuzz_skew(rng: random.Random, dim: int, count: int) -> list:
    result = []
    for _ in range(count):
        rows = [[rng.randint(-2, 2) for _ in range(dim)] for _ in range(dim)]
        result.append(Bivector.from_rows(rows).skew_part())
    return result


def _coleibniz(config: SuiteConfig) -> list:
    q = pr_qlba(config.bivector, config.order)

    def check(length: int) -> Verdict:
        return Verdict.combine(
            co_leibniz_check(q.derivation, MultiTensor.word(word, config.dim, config.order))
            for word in words_up_to(config.dim, length) if len(word) == length
        )

    return [Check(f'co-Leibniz em palavras de grau {n}', lambda n=n: check(n))
            for n in range(config.degree + 1)]


def _qlba_axioms(config: SuiteConfig) -> list:
    g = config.bivector

    @lru_cache(maxsize=None)
    def structure() -> tuple:
        return pr_qlba(g, config.order), lyndon_basis(config.dim, config.degree, config.order)

    def in_lambda2() -> Verdict:
        q, basis = structure()
        return Verdict.combine(lambda2_check(q, element.expansion) for element in basis)

    def cocycle() -> Verdict:
        q, basis = structure()
        return Verdict.combine(
            cocycle_check(q, x.expansion, y.expansion)
            for x, y in itertools.combinations_with_replacement(basis, 2)
            if x.degree + y.degree <= config.degree
        )

    def quasi_cojacobi() -> Verdict:
        q, _ = structure()
        return Verdict.combine(quasi_cojacobi_check(q, t) for t in _words(config))

    def same_as_delta_s() -> Verdict:
        q, _ = structure()
        return _same_qlba(q, QlbaData(config.dim, delta_s(g, config.order), phi_s(g, config.order)))

    return [
        Check('δ_g dos colchetes de Lyndon em Λ²L(V)', in_lambda2),
        Check('cociclo δ_g([x,y]) = x·δ_g(y) - y·δ_g(x)', cocycle),
        Check('quase-co-Jacobi cp(D⊗id)D = [Δ₀², φ_g]', quasi_cojacobi),
        Check('condição Alt(δ⊗id⊗id)(φ_g) = 0', lambda: alt_condition_check(structure()[0])),
        Check('φ_g em Λ³L(V)', lambda: lambda3_check(structure()[0].phi)),
        Check('(δ_g, φ_g) = (δ_s, φ_s) com s = g', same_as_delta_s),
    ]


def _cojacobi_rank(config: SuiteConfig) -> list:
    g = config.bivector
    rng = random.Random(config.seed)
    low = fuzz_bivectors(rng, config.dim, 1, 20)
    high = fuzz_bivectors(rng, config.dim, 2, 10) if config.dim >= 2 else []

    def metric() -> Verdict:
        verdict = cojacobi_rank_test(g)
        expected = g.rank() <= 1
        return Verdict(verdict.ok == expected, verdict.witness)

    def decomposable() -> Verdict:
        return Verdict.combine(cojacobi_rank_test(s) for s in low)

    def rank_two() -> Verdict:
        for s in high:
            verdict = cojacobi_rank_test(s)
            if verdict.ok:
                return Verdict(False, {'bivector': s.to_rows()})
        return Verdict(True, verdict.witness)

    checks = [
        Check(f'métrica de posto {g.rank()}: co-Jacobi estrito sse posto <= 1', metric),
        Check('20 bivetores sorteados de posto 1 satisfazem co-Jacobi', decomposable),
    ]
    if high:
        checks.append(Check('10 bivetores sorteados de posto 2 violam co-Jacobi', rank_two))
    return checks


def _traces_jacobi(config: SuiteConfig) -> list:
    q = pr_qlba(config.bivector)
    bracket = memoized_bracket(q)
    classes = [z_symbol(word, config.dim)
               for degree in range(1, config.degree + 1)
               for word in cyclic_classes(config.dim, degree)]

    def degree(f) -> int:
        return f.degrees()[0]

    def antisymmetry() -> Verdict:
        for a, b in itertools.combinations_with_replacement(classes, 2):
            if degree(a) + degree(b) <= config.degree:
                value = bracket(a, b) + bracket(b, a)
                if value:
                    return Verdict(False, value)
        return Verdict(True)

    def stability() -> Verdict:
        for a, b in itertools.combinations_with_replacement(classes, 2):
            if degree(a) + degree(b) <= config.degree:
                value = bracket(a, b)
                if not is_cyclic(value):
                    return Verdict(False, value)
        return Verdict(True)

    def cyclic_jacobi() -> Verdict:
        for a, b, c in itertools.combinations_with_replacement(classes, 3):
            if degree(a) + degree(b) + degree(c) <= config.degree:
                value = jacobiator(bracket, a, b, c)
                if value:
                    return Verdict(False, value)
        return Verdict(True)

    def non_cyclic_witness() -> Verdict:
        found = find_jacobi_witness(q, max_total=min(config.degree, 5))
        if found is None:
            return Verdict(False)
        a, b, c, value = found
        return Verdict(True, {
            'a': [list(w) for w in a.terms], 'b': [list(w) for w in b.terms],
            'c': [list(w) for w in c.terms], 'jacobiator': value.to_json(),
        })

    return [
        Check(f'antissimetria de {{,}}_D, grau total <= {config.degree}', antisymmetry),
        Check('classes cíclicas fechadas sob {,}_D', stability),
        Check(f'Jacobi em classes cíclicas, grau total <= {config.degree}', cyclic_jacobi),
        Check('tripla não cíclica com jacobiador não nulo', non_cyclic_witness),
    ]


def _pr_vs_algebraic(config: SuiteConfig) -> list:
    g = config.bivector
    q = pr_qlba(g)

    @lru_cache(maxsize=None)
    def witness_pair() -> tuple:
        # a busca por c vai além de config.degree, até o limite global de grau
        mu, nu = first_nonzero_bracket(q, app_config.MAX_DEGREE)
        return mu, nu, bracket_constant(q, g, pair=(mu, nu))

    def difference_on(mu, nu, c: Fraction) -> WordFunctional:
        a, b = z_symbol(mu, config.dim), z_symbol(nu, config.dim)
        return pr_bracket_direct(a, b, g) - bracket_D(a, b, q).scale(c)

    def determine() -> tuple:
        mu, nu, c = witness_pair()
        detail = {'c': str(c), 'pair': [list(mu), list(nu)], 'total_degree': len(mu) + len(nu)}
        return Verdict.from_difference(difference_on(mu, nu, c)), detail

    def agree() -> Verdict:
        _, _, c = witness_pair()
        for total in range(2, config.degree + 1):
            for k in range(1, total):
                for mu in cyclic_classes(config.dim, k):
                    for nu in cyclic_classes(config.dim, total - k):
                        difference = difference_on(mu, nu, c)
                        if difference:
                            return Verdict(False, {'pair': [list(mu), list(nu)],
                                                   'difference': difference.to_json()})
        return Verdict(True)

    return [
        Check('constante c no menor par com {,}_D não nulo', determine),
        Check(f'colchete PR = c·{{,}}_D com k+l <= {config.degree}', agree),
    ]


def _rank2_quantization(config: SuiteConfig) -> list:
    @lru_cache(maxsize=None)
    def structures() -> tuple:
        s = _elementary(config.dim)
        return s, rank2_quantize(s, config.order)

    def hopf_coassoc() -> Verdict:
        _, (aprime, _) = structures()
        return Verdict.combine(Verdict.from_difference(coassoc_defect(aprime, t))
                               for t in _words(config, 1))

    def quasi_coassoc() -> Verdict:
        _, (_, a) = structures()
        return Verdict.combine(Verdict.from_difference(coassoc_defect(a, t))
                               for t in _words(config, 1))

    def pentagon() -> Verdict:
        _, (_, a) = structures()
        return Verdict.from_difference(pentagon_defect(a))

    def counit() -> Verdict:
        _, (_, a) = structures()
        return Verdict.combine(Verdict.from_difference(d) for d in counit_defects(a).values())

    def phi_unital() -> Verdict:
        _, (_, a) = structures()
        unit = MultiTensor.unit(config.dim, 3, 1)
        return Verdict.combine([_difference(a.phi.h_coefficient(0), unit),
                                Verdict.from_difference(a.phi.h_coefficient(1))])

    def limit() -> Verdict:
        s, (_, a) = structures()
        return _same_qlba(classical_limit(a), pr_qlba(s.symmetric_part()))

    def hopf_limit() -> Verdict:
        s, (aprime, _) = structures()
        return _same_qlba(classical_limit(aprime), qlba_from_bivector(s))

    return [
        Check("A'_h coassociativa com Φ = 1", hopf_coassoc),
        Check('A_h: (id⊗Δ)Δ(x)Φ = Φ(Δ⊗id)Δ(x)', quasi_coassoc),
        Check('A_h: pentágono', pentagon),
        Check('A_h: counidade', counit),
        Check('Φ ≡ 1⊗1⊗1 mod h²', phi_unital),
        Check('limite clássico de A_h = (δ_g, φ_g)', limit),
        Check("limite clássico de A'_h = (δ_s, φ_s)", hopf_limit),
    ]


def _antipode(config: SuiteConfig) -> list:
    @lru_cache(maxsize=None)
    def structures() -> tuple:
        s = _elementary(config.dim)
        aprime, _ = rank2_quantize(s, config.order)
        return s, aprime, antipode_closed_form(s, config.order)

    def convolution_unit() -> Verdict:
        _, aprime, antipode = structures()
        identity = EndoMap.identity(config.dim, config.order)
        return Verdict.combine(
            _difference(convolution(antipode, identity, aprime, t), unit_counit(t))
            for t in _words(config)
        )

    def primitive_v() -> Verdict:
        s, _, antipode = structures()
        v, _ = s.decompose()
        v = vector_tensor(v, config.order)
        return _difference(antipode(v), -v)

    return [
        Check(f'S⋆id = 1ε em palavras de grau <= {config.degree}', convolution_unit),
        Check('S(v) = -v', primitive_v),
    ]


ORDER2_POINTS = ((0, 0), (Fraction(1, 2), Fraction(1, 2)), (1, -2))


def _order2(config: SuiteConfig) -> list:
    g = config.bivector
    order = max(config.order, 3)

    @lru_cache(maxsize=None)
    def solution():
        return order2_solve(g, order)

    def rank() -> tuple:
        found = solution()
        return Verdict(found.rank == 10, {'rank': found.rank}), found.to_json()

    def dimension() -> tuple:
        found = solution()
        return (Verdict(found.solutions.dimension == 2),
                {'dimension': found.solutions.dimension})

    def family() -> Verdict:
        return Verdict(solution().matches)

    def point_checks(alpha2, beta2) -> list:
        def family_qh():
            return order2_family(g, alpha2, beta2, order)

        def coassoc() -> Verdict:
            qh = family_qh()
            return Verdict.combine(
                Verdict.from_difference(
                    coassoc_defect(qh, MultiTensor.generator(i, config.dim, order)).with_order(3))
                for i in range(config.dim)
            )

        def limit() -> Verdict:
            return _same_qlba(classical_limit(family_qh()), pr_qlba(g))

        label = f'(α, β) = ({alpha2}, {beta2})'
        return [
            Check(f'coassociatividade mod h³ em {label}', coassoc),
            Check(f'pentágono mod h³ em {label}',
                  lambda: Verdict.from_difference(pentagon_defect(family_qh()).with_order(3))),
            Check(f'limite clássico (δ_g, φ_g) em {label}', limit),
        ]

    checks = [
        Check('posto do sistema = 10', rank),
        Check('espaço de soluções de dimensão 2', dimension),
        Check('família fechada Δ₂(α, β) = conjunto solução', family),
    ]
    for alpha2, beta2 in ORDER2_POINTS:
        checks.extend(point_checks(alpha2, beta2))
    return checks


def _twists(config: SuiteConfig) -> list:
    g = config.bivector
    dim, order = config.dim, max(config.order, 3)
    rng = random.Random(config.seed)
    skews = fuzz_skew(rng, dim, 4)
    generic = fuzz_bivectors(rng, dim, min(dim, 2), 2)

    def additivity() -> Verdict:
        q = pr_qlba(g)
        return Verdict.combine(
            _same_qlba(twist_qlba(twist_qlba(q, f1), f2), twist_qlba(q, f1 + f2))
            for f1, f2 in (skews[:2], skews[2:])
        )

    def composition() -> Verdict:
        qh = undeformed(dim, order)
        F1, F2 = (MultiTensor.unit(dim, 2, order) + b.to_tensor(order).scale_h(1)
                  for b in generic)
        lhs = twist_qh(twist_qh(qh, F1), F2)
        rhs = twist_qh(qh, F2 * F1)
        return Verdict.combine([_difference(a, b) for a, b in
                                zip(lhs.delta.images, rhs.delta.images)]
                               + [_difference(lhs.phi, rhs.phi)])

    def coboundary_trivial() -> Verdict:
        s = skews[0]
        twisted = twist_qlba(qlba_from_bivector(s), s)
        zero = QlbaData(dim, delta_s(Bivector.zero(dim)), phi_s(Bivector.zero(dim)))
        return _same_qlba(twisted, zero)

    def rank2_twist() -> Verdict:
        s = _elementary(dim)
        return _same_qlba(twist_qlba(qlba_from_bivector(s), s.skew_part()),
                          pr_qlba(s.symmetric_part()))

    def correspondence() -> Verdict:
        s = _elementary(dim)
        aprime, _ = rank2_quantize(s, order)
        twist = mt_exp(s.to_tensor(order).scale(Fraction(-1, 2)).scale_h(1))
        f = skew_classical_part(twist)
        return Verdict.combine([
            _difference(f, s.skew_part().to_tensor()),
            _same_qlba(classical_limit(twist_qh(aprime, twist)),
                       twist_qlba(classical_limit(aprime), f)),
        ])

    def coboundary_limit() -> Verdict:
        s = skews[1]
        return _same_qlba(classical_limit(coboundary_quantize(s, order)), qlba_from_bivector(s))

    return [
        Check('twist de QLBA aditivo: (f₁ depois f₂) = f₁ + f₂', additivity),
        Check('twist quase-Hopf: (F₁ depois F₂) = F₂F₁', composition),
        Check('twist cobordo por s leva (δ_s, φ_s) a (0, 0)', coboundary_trivial),
        Check('twist de (δ_s, φ_s) por (s - s²¹)/2 dá (δ_g, φ_g)', rank2_twist),
        Check('f = (F²¹ - F)/h para F = e^{-hs/2} e limites clássicos compatíveis',
              correspondence),
        Check('limite clássico da quantização cobordo = (δ_s, φ_s)', coboundary_limit),
    ]


SUITES = {
    'coleibniz': _coleibniz,
    'qlba-axioms': _qlba_axioms,
    'cojacobi-rank': _cojacobi_rank,
    'traces-jacobi': _traces_jacobi,
    'pr-vs-algebraic': _pr_vs_algebraic,
    'rank2-quantization': _rank2_quantization,
    'antipode': _antipode,
    'order2': _order2,
    'twists': _twists,
}


def suite_help() -> dict:
    return {
        name: {'order': order, 'degree': degree, 'description': description}
        for name, (order, degree, description) in SUITE_DEFAULTS.items()
    }


def build_checks(config: SuiteConfig) -> list:
    return SUITES[config.suite](config)


def _execute(check: Check, timings: bool) -> CheckOutcome:
    logger.info('verificação %r iniciada', check.name)
    started = time.perf_counter()
    detail = None
    try:
        result = check.run()
        if isinstance(result, tuple):
            result, detail = result
    except AlgebraError as error:
        result, detail = Verdict(False), {'error': str(error)}
    millis = round((time.perf_counter() - started) * 1000, 3) if timings else None
    status = 'pass' if result.ok else 'fail'
    if result.ok:
        logger.info('verificação %r: %s', check.name, status)
    else:
        logger.warning('verificação %r: %s', check.name, status)
    return CheckOutcome(name=check.name, status=status, witness=witness_json(result.witness),
                        detail=detail, millis=millis)


def _execute_in_worker(payload: dict, index: int) -> dict:
    config = SuiteConfig(**payload)
    return _execute(build_checks(config)[index], config.timings).model_dump()


def _payload(config: SuiteConfig) -> dict:
    return config.model_dump(exclude={'metric_matrix', 'output'})


def run_suite(config: SuiteConfig) -> SuiteReport:
    """
    Executa uma suíte.

    Params:
        config (SuiteConfig): configuração já validada.

    Returns:
        SuiteReport: verificações na ordem de declaração; verificações que
        lançam AlgebraError entram como falha com a mensagem em "detail".
    """
    checks = build_checks(config)
    logger.info('suíte %s: %s verificações', config.suite, len(checks))
    if config.parallel and len(checks) > 1:
        payload = _payload(config)
        with ProcessPoolExecutor() as pool:
            futures = [pool.submit(_execute_in_worker, payload, i) for i in range(len(checks))]
            outcomes = [CheckOutcome(**future.result()) for future in futures]
    else:
        outcomes = [_execute(check, config.timings) for check in checks]
    echo = config.model_dump(exclude={'output', 'parallel', 'timings'})
    return SuiteReport(suite=config.suite, config=echo, checks=outcomes,
                       version=app_config.VERSION)
