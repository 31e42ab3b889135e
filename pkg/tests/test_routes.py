import json
from fractions import Fraction

import pytest

from index import app
from src.algebra.scalars import HSeries
from src.config import dump_json


@pytest.fixture
def client():
    app.config['TESTING'] = True
    return app.test_client()


def test_home(client):
    response = client.get('/')
    assert response.status_code == 200
    assert b'/suites/help' in response.data


def test_suites_help(client):
    response = client.get('/suites/help')
    assert response.status_code == 200
    body = response.get_json()
    assert len(body['valid suites']) == 9
    assert body['details']['order2']['order'] == 3


def test_small_suite_run(client):
    response = client.get('/suites/coleibniz?dim=2&degree=2')
    assert response.status_code == 200
    body = response.get_json()
    assert body['passed'] is True
    assert body['config']['dim'] == 2


def test_failing_suite_still_answers_200(client):
    response = client.get('/suites/rank2-quantization?dim=1&order=3&degree=1')
    assert response.status_code == 200
    assert response.get_json()['passed'] is False


@pytest.mark.parametrize('url', [
    '/suites/bogus',
    '/suites/coleibniz?order=9',
    '/suites/coleibniz?dim=0',
    '/suites/coleibniz?metric=/etc/hosts',
    '/suites/coleibniz?output=report.json',
    '/suites/coleibniz?parallel=true',
    '/suites/coleibniz?colour=red',
])
def test_invalid_suite_requests(client, url):
    response = client.get(url)
    assert response.status_code == 422
    body = response.get_json()
    assert body['error'] == 'Validation failed'
    assert body['support'] == '/suites/help'


def test_compute_delta(client):
    response = client.get('/compute/delta?word=0&dim=2')
    assert response.status_code == 200
    body = response.get_json()
    assert body['result'] == '-e0e1 ⊗ e1 + e1 ⊗ e0e1 - e1 ⊗ e1e0 + e1e0 ⊗ e1'
    assert body['expression'] == 'D(e0)'


def test_compute_z_bracket(client):
    response = client.get('/compute/z-bracket?a=0,1&b=2')
    assert response.status_code == 200
    assert response.get_json()['result'] == '0'


def test_compute_coproduct(client):
    response = client.get('/compute/coproduct?word=01&dim=2&order=2')
    assert response.status_code == 200
    body = response.get_json()
    assert body['expression'] == 'Δ(e0e1) mod h^2'
    assert body['terms']


@pytest.mark.parametrize('url', [
    '/compute/delta?word=0x&dim=2',
    '/compute/delta?dim=2',
    '/compute/coproduct?word=0&order=4',
    '/compute/z-bracket?a=&b=0',
    '/compute/delta?word=0&metric=metric.yaml',
])
def test_invalid_compute_requests(client, url):
    response = client.get(url)
    assert response.status_code == 422
    assert 'example' in response.get_json()


def test_json_provider_writes_exact_scalars_as_text():
    series = HSeries.monomial(Fraction(1, 2), 1, 3) + 1
    text = app.json.dumps({'c': Fraction(1, 2), 'series': series, 'tensor': 'e0 ⊗ e1'})
    assert json.loads(text) == {'c': '1/2', 'series': str(series), 'tensor': 'e0 ⊗ e1'}
    assert '⊗' in text
    assert json.loads(dump_json({'c': Fraction(-3)})) == {'c': '-3'}
