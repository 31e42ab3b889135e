import json

import pytest
from click.testing import CliRunner

from src.commands import verify


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


def test_list(runner):
    result = runner.invoke(verify, ['list'])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0].startswith('coleibniz')
    assert len(result.stdout.splitlines()) == 9


def test_passing_run_prints_the_report(runner):
    result = runner.invoke(verify, ['run', '--suite', 'coleibniz', '--dim', '2', '--degree', '2'])
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report['passed'] is True
    assert report['suite'] == 'coleibniz'
    assert [check['status'] for check in report['checks']] == ['pass'] * 3


def test_failing_run_exits_with_one(runner):
    result = runner.invoke(verify, ['run', '--suite', 'rank2-quantization', '--dim', '1',
                                    '--order', '3', '--degree', '1'])
    assert result.exit_code == 1
    assert json.loads(result.stdout)['passed'] is False


@pytest.mark.parametrize('arguments', [
    ['run', '--suite', 'bogus'],
    ['run', '--suite', 'coleibniz', '--dim', '99'],
    ['run', '--suite', 'coleibniz', '--metric', 'missing.yaml'],
])
def test_usage_errors_exit_with_two(runner, arguments):
    result = runner.invoke(verify, arguments)
    assert result.exit_code == 2
    error = json.loads(result.stderr)
    assert error['error'] == 'Validation failed'
    assert error['support'] == 'verify list'
    assert result.stdout == ''


def test_report_goes_to_the_json_file(runner, tmp_path):
    path = tmp_path / 'report.json'
    result = runner.invoke(verify, ['run', '--suite', 'cojacobi-rank', '--dim', '2',
                                    '--json', str(path), '--timings'])
    assert result.exit_code == 0
    assert result.stdout == ''
    report = json.loads(path.read_text(encoding='utf-8'))
    assert report['passed'] is True
    assert all(check['millis'] is not None for check in report['checks'])


def test_compute_delta(runner):
    result = runner.invoke(verify, ['compute', 'delta', '0', '--dim', '2'])
    assert result.exit_code == 0
    assert result.stdout.strip() == '-e0e1 ⊗ e1 + e1 ⊗ e0e1 - e1 ⊗ e1e0 + e1e0 ⊗ e1'


def test_compute_coproduct(runner):
    result = runner.invoke(verify, ['compute', 'coproduct', '01', '--dim', '2'])
    assert result.exit_code == 0
    assert result.stdout.strip() == '1 ⊗ e0e1 + e0 ⊗ e1 + e0e1 ⊗ 1 + e1 ⊗ e0'


def test_compute_z_bracket(runner):
    result = runner.invoke(verify, ['compute', 'z-bracket', '0,1', '2'])
    assert result.exit_code == 0
    assert result.stdout.strip() == '0'


def test_compute_rejects_bad_words(runner):
    result = runner.invoke(verify, ['compute', 'delta', '0x', '--dim', '2'])
    assert result.exit_code == 2
    assert json.loads(result.stderr)['support'] == 'verify compute --help'


def test_coproduct_needs_symmetric_metric(runner, tmp_path):
    path = tmp_path / 'skew.yaml'
    path.write_text('- [0, 1]\n- [-1, 0]\n', encoding='utf-8')
    result = runner.invoke(verify, ['compute', 'coproduct', '0', '--dim', '2',
                                    '--metric', str(path)])
    assert result.exit_code == 2
    assert json.loads(result.stderr)['error'] == 'Invalid input'
