import json

import jsonschema
import pytest
from pydantic import ValidationError

from src import config
from src.algebra.freealg import MultiTensor
from src.algebra.qlba import euclidean, minkowski
from src.algebra.traces import WordFunctional
from src.models import (
    SUITE_DEFAULTS,
    CheckOutcome,
    CoproductParameters,
    DeltaParameters,
    SuiteConfig,
    SuiteReport,
    ZBracketParameters,
    load_metric,
    witness_json,
)
from src.models.report_model import WITNESS_LIMIT


def test_suite_defaults_are_filled_in():
    config = SuiteConfig(suite='antipode')
    assert config.order == SUITE_DEFAULTS['antipode'][0]
    assert config.degree == SUITE_DEFAULTS['antipode'][1]
    assert config.dim == 3
    assert config.bivector == minkowski(3)
    assert config.metric_matrix == [['-1', '0', '0'], ['0', '1', '0'], ['0', '0', '1']]


@pytest.mark.parametrize('fields', [
    {'suite': 'bogus'},
    {'suite': 'coleibniz', 'dim': 0},
    {'suite': 'coleibniz', 'dim': 99},
    {'suite': 'coleibniz', 'order': 0},
    {'suite': 'coleibniz', 'degree': 99},
    {'suite': 'coleibniz', 'metric': 'minkowski(2)'},
    {'suite': 'coleibniz', 'metric': 'lorentz'},
    {'suite': 'coleibniz', 'colour': 'red'},
])
def test_invalid_configurations_are_rejected(fields):
    with pytest.raises(ValidationError):
        SuiteConfig(**fields)


def test_metric_presets():
    assert load_metric('minkowski(2)', 2) == minkowski(2)
    assert load_metric('euclidean', 4) == euclidean(4)


def test_metric_from_json_file(tmp_path):
    path = tmp_path / 'metric.json'
    path.write_text(json.dumps([['1/2', 0], [0, -1]]), encoding='utf-8')
    bivector = load_metric(str(path), 2)
    assert bivector.to_rows() == [['1/2', '0'], ['0', '-1']]
    with pytest.raises(ValueError):
        load_metric(str(path), 3)


def test_metric_from_yaml_file(tmp_path):
    path = tmp_path / 'metric.yaml'
    path.write_text('- [1, 2]\n- [2, "3/4"]\n', encoding='utf-8')
    config = SuiteConfig(suite='coleibniz', dim=2, metric=str(path))
    assert config.metric_matrix == [['1', '2'], ['2', '3/4']]


def test_metric_file_must_hold_rows(tmp_path):
    path = tmp_path / 'metric.yaml'
    path.write_text('g: 1\n', encoding='utf-8')
    with pytest.raises(ValueError):
        load_metric(str(path), 2)


def test_compute_parameters():
    params = ZBracketParameters(a='0,1,2', b='012', dim=3)
    assert params.indices == [[0, 1, 2], [0, 1, 2]]
    assert DeltaParameters(word='', dim=2).letters == []
    assert CoproductParameters(word='01', dim=2, order=3).order == 3
    with pytest.raises(ValidationError):
        ZBracketParameters(a='', b='0', dim=2)
    with pytest.raises(ValidationError):
        DeltaParameters(word='0x', dim=2)
    with pytest.raises(ValidationError):
        DeltaParameters(word='5', dim=2)
    with pytest.raises(ValidationError):
        CoproductParameters(word='0', dim=2, order=4)


def test_witness_json_truncates_tensors():
    big = MultiTensor(2, 1, 1, {((0,) * n,): 1 for n in range(WITNESS_LIMIT + 5)})
    data = witness_json(big)
    assert data['terms'] == WITNESS_LIMIT + 5
    assert len(data['records']) == WITNESS_LIMIT
    assert data['truncated'] is True
    small = witness_json(WordFunctional.word((0, 1), 2, 3))
    assert small == {'terms': 1, 'records': {'01': '3'}, 'truncated': False}
    assert witness_json({'rank': 10}) == {'rank': 10}


def test_report_follows_the_schema():
    checks = [CheckOutcome(name='a', status='pass'),
              CheckOutcome(name='b', status='fail', detail={'error': 'x'}, millis=1.5)]
    report = SuiteReport(suite='coleibniz', config={'dim': 2}, checks=checks, version='1.0.0')
    assert report.passed is False
    assert report.exit_code == 1
    data = report.to_json()
    assert data['checks'][0] == {'name': 'a', 'status': 'pass', 'millis': None}
    assert data['checks'][1]['detail'] == {'error': 'x'}


def test_report_schema_rejects_unknown_status():
    report = SuiteReport(suite='coleibniz', config={},
                         checks=[CheckOutcome(name='a', status='skipped')], version='1.0.0')
    with pytest.raises(jsonschema.ValidationError):
        report.to_json()


def test_limits_are_read_from_the_config_module(monkeypatch):
    monkeypatch.setattr(config, 'MAX_DIM', 2)
    monkeypatch.setattr(config, 'MAX_DEGREE', 3)
    with pytest.raises(ValidationError):
        SuiteConfig(suite='coleibniz', dim=3, degree=2)
    with pytest.raises(ValidationError):
        DeltaParameters(word='0101', dim=2)
    assert SuiteConfig(suite='coleibniz', dim=2, degree=3).dim == 2
