"""
cli.py

Grupo de comandos click "verify": executa as suítes de verificação, lista as
suítes disponíveis e faz computações avulsas.

O relatório vai para stdout (ou para o arquivo de --json) e os logs para
stderr. Códigos de saída: 0 quando todas as verificações passam, 1 quando
alguma falha e 2 para erros de uso, validação ou limite de recursos, com um
objeto JSON de erro em stderr.

Commands:
    verify run: executa uma suíte.
    verify list: nomes, padrões e descrição das suítes.
    verify compute z-bracket | delta | coproduct: computações avulsas.
"""

import logging
import sys

import click
from pydantic import ValidationError

from src import config
from src.algebra.errors import AlgebraError
from src.models import CoproductParameters, DeltaParameters, SuiteConfig, ZBracketParameters
from src.suites import compute as computations
from src.suites import run_suite, suite_help

logger = logging.getLogger(__name__)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _fail_usage(error: Exception, support: str) -> None:
    body = {
        'error': 'Validation failed' if isinstance(error, ValidationError) else 'Invalid input',
        'details': str(error),
        'support': support,
    }
    click.echo(config.dump_json(body), err=True)
    sys.exit(EXIT_USAGE)


@click.group()
@click.option('--log-level', default=None,
              type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR'], case_sensitive=False),
              help='Nível de log em stderr (padrão: PRQLBA_LOG_LEVEL ou WARNING).')
def verify(log_level) -> None:
    """Verificação exata da bialgebra quase-Lie de Pohlmeyer-Rehren."""
    config.configure_logging(log_level)


@verify.command('run')
@click.option('--suite', required=True, help='Nome da suíte (veja "verify list").')
@click.option('--dim', default=3, type=int, show_default=True, help='Dimensão d de V.')
@click.option('--order', default=None, type=int, help='Ordem de truncamento N.')
@click.option('--degree', default=None, type=int, help='Grau máximo das palavras.')
@click.option('--metric', default='minkowski', show_default=True,
              help='minkowski, minkowski(d), euclidean ou arquivo JSON/YAML.')
@click.option('--seed', default=0, type=int, show_default=True,
              help='Semente do sorteio de bivetores.')
@click.option('--json', 'output', type=click.Path(dir_okay=False), default=None,
              help='Escreve o relatório neste arquivo em vez de stdout.')
@click.option('--parallel', is_flag=True, help='Distribui as verificações entre processos.')
@click.option('--timings', is_flag=True, help='Registra a duração de cada verificação.')
def run(suite, dim, order, degree, metric, seed, output, parallel, timings) -> None:
    try:
        suite_config = SuiteConfig(suite=suite, dim=dim, order=order, degree=degree,
                                   metric=metric, seed=seed, output=output,
                                   parallel=parallel, timings=timings)
    except ValidationError as e:
        _fail_usage(e, 'verify list')

    report = run_suite(suite_config)
    text = config.dump_json(report.to_json())
    if output:
        with open(output, 'w', encoding='utf-8') as handle:
            handle.write(text + '\n')
        click.echo(f'{suite}: {"pass" if report.passed else "fail"} -> {output}', err=True)
    else:
        click.echo(text)
    sys.exit(report.exit_code)


@verify.command('list')
def list_suites() -> None:
    for name, info in suite_help().items():
        click.echo(f'{name:<20} N={info["order"]} grau={info["degree"]}  {info["description"]}')


@verify.group()
def compute() -> None:
    """Computações avulsas com saída em forma canônica."""


def _compute(model, function, **fields) -> None:
    try:
        params = model(**fields)
        result = function(params)
    except (ValidationError, AlgebraError) as e:
        _fail_usage(e, 'verify compute --help')
    click.echo(result['result'])
    logger.debug('%s', config.dump_json(result))


def _common(command):
    command = click.option('--metric', default='minkowski', show_default=True)(command)
    return click.option('--dim', default=3, type=int, show_default=True)(command)


@compute.command('z-bracket')
@click.argument('a')
@click.argument('b')
@_common
def z_bracket(a, b, dim, metric) -> None:
    """{Z_A, Z_B}_D, com A e B como "0,1" ou "01"."""
    _compute(ZBracketParameters, computations.z_bracket, a=a, b=b, dim=dim, metric=metric)


@compute.command('delta')
@click.argument('word')
@_common
def delta(word, dim, metric) -> None:
    """D(WORD) para a derivação que estende δ_g."""
    _compute(DeltaParameters, computations.delta, word=word, dim=dim, metric=metric)


@compute.command('coproduct')
@click.argument('word')
@click.option('--order', default=1, type=int, show_default=True, help='Ordem N (1 a 3).')
@_common
def coproduct(word, order, dim, metric) -> None:
    """Δ(WORD) mod h^N; N = 1 é o coproduto de shuffle."""
    _compute(CoproductParameters, computations.coproduct,
             word=word, order=order, dim=dim, metric=metric)
