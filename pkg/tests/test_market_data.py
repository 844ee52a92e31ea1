from datetime import date

import pytest

from neurotrade.core.errors import (
    DuplicateDate,
    MalformedHeader,
    MalformedRow,
    NonPositivePrice,
    ZeroAdjustedClose,
)
from neurotrade.models.market import OhlcvBar
from neurotrade.services.market_data import (
    adjust_bars,
    load_ticker,
    parse_csv,
    read_ticker,
    serialize_csv,
    sort_bars,
    ticker_provenance,
    validate_bar,
)
from tests.helpers import HEADER_LINE, business_days


def _csv(*rows: str) -> str:
    return '\n'.join((HEADER_LINE,) + rows) + '\n'


def _random_bars(rng, n=200):
    bars = []
    for d in business_days(date(2001, 1, 1), n):
        o, c = rng.uniform(50, 150, 2)
        low = min(o, c) * (1 - rng.uniform(0, 0.05))
        high = max(o, c) * (1 + rng.uniform(0, 0.05))
        adj = c * rng.uniform(0.2, 1.0)
        bars.append(OhlcvBar(d, float(o), float(high), float(low), float(c), float(adj), int(rng.integers(0, 10**6))))
    return bars


def test_parse_single_row():
    bars = parse_csv(_csv('2007-01-03,100,101,99,100.5,100.5,1000'))
    assert bars == [OhlcvBar(date(2007, 1, 3), 100.0, 101.0, 99.0, 100.5, 100.5, 1000)]


def test_parse_sorts_by_date():
    bars = parse_csv(_csv(
        '2007-01-05,10,11,9,10,10,1',
        '2007-01-03,10,11,9,10,10,1',
        '2007-01-04,10,11,9,10,10,1',
    ))
    assert [b.date.day for b in bars] == [3, 4, 5]


def test_parse_skips_blank_lines_and_bom():
    text = '\ufeff' + _csv('2007-01-03,10,11,9,10,10,1', '', '2007-01-04,10,11,9,10,10,1')
    assert len(parse_csv(text)) == 2


def test_duplicate_date():
    with pytest.raises(DuplicateDate) as exc:
        parse_csv(_csv('2007-01-03,10,11,9,10,10,1', '2007-01-03,10,11,9,10,10,1'))
    assert exc.value.date == date(2007, 1, 3)


def test_high_below_low_is_malformed():
    with pytest.raises(MalformedRow) as exc:
        parse_csv(_csv('2007-01-03,10,11,9,10,10,1', '2007-01-04,100,99,101,100,100,10'))
    assert exc.value.line == 3


@pytest.mark.parametrize('row', [
    '2007-01-03,abc,11,9,10,10,1',
    '2007-01-03,10,11,9,10,10',
    '2007-01-03,10,11,,10,10,1',
    '2007-13-03,10,11,9,10,10,1',
    '2007-01-03,10,11,9,10,10,1.5',
    '2007-01-03,10,11,9,10,nan,1',
])
def test_malformed_rows(row):
    with pytest.raises(MalformedRow) as exc:
        parse_csv(_csv(row))
    assert exc.value.line == 2


def test_non_positive_price_reports_line():
    with pytest.raises(NonPositivePrice) as exc:
        parse_csv(_csv('2007-01-03,10,11,9,10,10,1', '2007-01-04,0,11,9,10,10,1'))
    assert exc.value.line == 3


@pytest.mark.parametrize('text', ['', 'Date,Open,High,Low,Close,Volume\n', 'date,open,high,low,close,adj close,volume\n'])
def test_malformed_header(text):
    with pytest.raises(MalformedHeader):
        parse_csv(text)


def test_adjust_identity_ratio():
    [adj] = adjust_bars([OhlcvBar(date(2007, 1, 3), 98, 101, 97, 100, 100, 5)])
    assert (adj.open, adj.close, adj.volume) == (98, 100, 5)


def test_adjust_halves_prices():
    [adj] = adjust_bars([OhlcvBar(date(2007, 1, 3), 98, 102, 96, 100, 50, 5)])
    assert (adj.open, adj.high, adj.low, adj.close) == (49, 51, 48, 50)


def test_zero_adjusted_close():
    with pytest.raises(ZeroAdjustedClose):
        adjust_bars([OhlcvBar(date(2007, 1, 3), 98, 102, 96, 100, 0, 5)])


def test_adjust_properties(rng):
    bars = _random_bars(rng)
    adjusted = adjust_bars(bars)
    for src, a in zip(bars, adjusted):
        assert a.close == pytest.approx(src.adjusted_close, rel=1e-9)
        assert a.low <= min(a.open, a.close) <= max(a.open, a.close) <= a.high

    again = adjust_bars([a.as_ohlcv() for a in adjusted])
    for a, b in zip(adjusted, again):
        for field in ('open', 'high', 'low', 'close'):
            assert getattr(b, field) == pytest.approx(getattr(a, field), rel=1e-9)


def test_serialize_round_trip(rng):
    bars = _random_bars(rng, 50)
    assert parse_csv(serialize_csv(bars)) == bars


def test_load_ticker(tmp_path):
    path = tmp_path / 'wmt.csv'
    path.write_text(_csv('2007-01-03,10,11,9,10,5,1'))
    bars = load_ticker(path)
    assert len(bars) == 1
    assert bars[0].close == 5


def test_load_ticker_tags_errors(tmp_path):
    path = tmp_path / 'EMPTY.csv'
    path.write_text('')
    with pytest.raises(MalformedHeader) as exc:
        load_ticker(path, 'EMPTY')
    assert exc.value.ticker == 'EMPTY'
    assert str(exc.value).startswith('[EMPTY]')


def test_provenance(tmp_path):
    bars = adjust_bars(parse_csv(_csv('2007-01-03,10,11,9,10,10,1', '2007-01-05,10,11,9,10,10,1')))
    prov = ticker_provenance('WMT', bars, tmp_path / 'WMT.csv')
    assert (prov.rows, prov.first_date, prov.last_date) == (2, date(2007, 1, 3), date(2007, 1, 5))


def test_validate_bar_reports_position():
    good = OhlcvBar(date(2007, 1, 3), 10.0, 11.0, 9.0, 10.5, 10.5, 1)
    assert validate_bar(good, 1) is good
    with pytest.raises(MalformedRow) as exc:
        validate_bar(OhlcvBar(date(2007, 1, 3), 10.0, 10.2, 9.0, 12.0, 12.0, 1), 7)
    assert exc.value.line == 7
    with pytest.raises(NonPositivePrice):
        validate_bar(OhlcvBar(date(2007, 1, 3), 10.0, 11.0, -1.0, 10.0, 10.0, 1), 1)
    with pytest.raises(MalformedRow):
        validate_bar(OhlcvBar(date(2007, 1, 3), 10.0, 11.0, 9.0, 10.0, 10.0, -3), 1)


def test_sort_bars():
    a = OhlcvBar(date(2007, 1, 4), 10.0, 11.0, 9.0, 10.0, 10.0, 1)
    b = OhlcvBar(date(2007, 1, 3), 10.0, 11.0, 9.0, 10.0, 10.0, 1)
    assert sort_bars([a, b]) == [b, a]
    with pytest.raises(DuplicateDate):
        sort_bars([a, b, a])


def test_read_ticker_returns_provenance(tmp_path):
    path = tmp_path / 'wmt.csv'
    path.write_text(_csv('2007-01-05,10,11,9,10,5,1', '2007-01-03,10,11,9,10,5,1', '2007-01-04,10,11,9,10,5,1'))
    bars, prov = read_ticker(path)
    assert prov.symbol == 'WMT' and prov.path == path
    assert (prov.rows, prov.first_date, prov.last_date) == (3, date(2007, 1, 3), date(2007, 1, 5))
    assert bars == load_ticker(path)
