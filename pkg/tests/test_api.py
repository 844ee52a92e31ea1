from datetime import date

import pytest
from fastapi.testclient import TestClient

from neurotrade.api.main import app
from neurotrade.services.backtest import buy_and_hold, simulate
from neurotrade.services.metrics import report_csv, trading_stats
from tests.helpers import business_days

client = TestClient(app)


def _bars(closes, start=date(2007, 1, 1)):
    return [
        {
            'date': d.isoformat(), 'open': c, 'high': c * 1.01, 'low': c * 0.99,
            'close': c, 'adjusted_close': c / 2, 'volume': 100,
        }
        for d, c in zip(business_days(start, len(closes)), closes)
    ]


def test_health():
    assert client.get('/health').json() == {'status': 'healthy'}
    assert client.get('/').status_code == 200


def test_indicators():
    response = client.post('/api/v1/indicators', json={'bars': _bars([50.0] * 30)})
    assert response.status_code == 200
    rows = response.json()
    assert len(rows) == 5
    assert rows[0]['close'] == pytest.approx(25.0)
    assert rows[0]['rsi'] == 50.0


def test_indicators_too_short():
    response = client.post('/api/v1/indicators', json={'bars': _bars([50.0] * 10)})
    assert response.status_code == 422
    assert response.json()['detail'].startswith('SeriesTooShort')


def test_labels():
    response = client.post('/api/v1/labels', json={'closes': [0, 1, 2, 3, 2, 1, 0], 'config': {'window': 3}})
    assert response.json() == {'window': 3, 'labels': [0, 0, 0, 2, 0, 0, 0]}


def test_labels_reject_even_window():
    assert client.post('/api/v1/labels', json={'closes': [1, 2, 3], 'config': {'window': 4}}).status_code == 422


def test_backtest():
    days = [d.isoformat() for d in business_days(date(2007, 1, 1), 2)]
    response = client.post('/api/v1/backtest', json={'dates': days, 'closes': [100, 110], 'labels': [1, 2]})
    assert response.status_code == 200
    body = response.json()
    assert body['strategy']['final_capital'] == pytest.approx(10997.90)
    assert body['strategy']['trades'][0]['exit_reason'] == 'Signal'
    assert body['buy_and_hold']['final_capital'] == pytest.approx(10997.90)


def test_backtest_length_mismatch():
    days = [d.isoformat() for d in business_days(date(2007, 1, 1), 2)]
    response = client.post('/api/v1/backtest', json={'dates': days, 'closes': [100, 110], 'labels': [1]})
    assert response.status_code == 422


def test_scores():
    response = client.post('/api/v1/scores', json={'matrix': [[889, 429, 868], [41, 110, 4], [21, 0, 139]]})
    body = response.json()
    assert [round(x, 2) for x in body['recall']] == [0.41, 0.71, 0.87]
    assert body['accuracy'] == pytest.approx(1138 / 2501)


@pytest.mark.parametrize('matrix', [[[1, 2], [3, 4]], [[0, 0, 0]] * 3, [[-1, 0, 0], [0, 1, 0], [0, 0, 1]]])
def test_scores_rejects_bad_matrices(matrix):
    assert client.post('/api/v1/scores', json={'matrix': matrix}).status_code == 422


def test_reports(tmp_path, monkeypatch):
    monkeypatch.setenv('NEUROTRADE_OUTPUT_DIR', str(tmp_path))
    assert client.get('/api/v1/reports').status_code == 404

    prices = list(zip(business_days(date(2007, 1, 1), 30), [100.0 + i for i in range(30)]))
    stats = trading_stats(simulate(prices, [1] + [0] * 29), buy_and_hold(prices), 1.0)
    (tmp_path / 'report.csv').write_text(report_csv([('WMT', stats)], provenance={'seed': 1}))

    rows = client.get('/api/v1/reports').json()
    assert [r['Share'] for r in rows] == ['WMT', 'Average']
    assert rows[0]['OUR'] == rows[0]['BaH']


def test_indicators_reject_close_above_high():
    bars = _bars([100.0 + i for i in range(30)])
    for b in bars:
        b['high'] = 101.0
    response = client.post('/api/v1/indicators', json={'bars': bars})
    assert response.status_code == 422
    assert response.json()['detail'].startswith('MalformedRow')


def test_indicators_reject_duplicate_dates():
    bars = _bars([50.0] * 30)
    bars[5]['date'] = bars[4]['date']
    response = client.post('/api/v1/indicators', json={'bars': bars})
    assert response.status_code == 422
    assert response.json()['detail'].startswith('DuplicateDate')


def test_indicators_reject_non_positive_prices():
    bars = _bars([50.0] * 30)
    bars[3]['low'] = 0.0
    response = client.post('/api/v1/indicators', json={'bars': bars})
    assert response.status_code == 422
    assert response.json()['detail'].startswith('NonPositivePrice')
