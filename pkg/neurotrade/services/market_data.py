"""Daily OHLCV ingestion in the Yahoo Finance export format and price adjustment.

All functions are pure; `load_ticker` is the only one touching the filesystem.
"""

import csv
import io
import logging
import math
from datetime import date
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from neurotrade.core.errors import (
    DuplicateDate,
    MalformedHeader,
    MalformedRow,
    MarketDataError,
    NonPositivePrice,
    ZeroAdjustedClose,
)
from neurotrade.models.market import AdjustedBar, OhlcvBar, TickerProvenance

logger = logging.getLogger(__name__)

HEADER = ('Date', 'Open', 'High', 'Low', 'Close', 'Adj Close', 'Volume')


def _parse_price(raw: str, line: int, column: str) -> float:
    try:
        value = float(raw)
    except (TypeError, ValueError):
        raise MalformedRow(line, f'{column} is not numeric: {raw!r}')
    if not math.isfinite(value):
        raise MalformedRow(line, f'{column} is not finite: {raw!r}')
    return value


def _parse_volume(raw: str, line: int) -> int:
    try:
        volume = int(raw)
    except (TypeError, ValueError):
        try:
            as_float = float(raw)
        except (TypeError, ValueError):
            raise MalformedRow(line, f'Volume is not numeric: {raw!r}')
        if not as_float.is_integer():
            raise MalformedRow(line, f'Volume is not an integer: {raw!r}')
        volume = int(as_float)
    return volume


def _parse_row(fields: List[str], line: int) -> OhlcvBar:
    if len(fields) != len(HEADER) or any(f.strip() == '' for f in fields):
        raise MalformedRow(line, f'expected {len(HEADER)} non-empty fields, got {fields!r}')
    try:
        day = date.fromisoformat(fields[0].strip())
    except ValueError:
        raise MalformedRow(line, f'bad date {fields[0]!r}')

    o, h, l, c, adj = (
        _parse_price(fields[i].strip(), line, HEADER[i]) for i in range(1, 6)
    )
    volume = _parse_volume(fields[6].strip(), line)
    return validate_bar(OhlcvBar(day, o, h, l, c, adj, volume), line)


def validate_bar(bar: OhlcvBar, line: int) -> OhlcvBar:
    """Price, volume and OHLC-ordering checks; `line` locates the bar in its source."""
    prices = (bar.open, bar.high, bar.low, bar.close, bar.adjusted_close)
    for column, value in zip(HEADER[1:6], prices):
        if not math.isfinite(value):
            raise MalformedRow(line, f'{column} is not finite: {value!r}')
        if value <= 0:
            raise NonPositivePrice(line=line, value=value)
    if bar.volume < 0:
        raise MalformedRow(line, f'Volume is negative: {bar.volume!r}')

    o, h, l, c = bar.open, bar.high, bar.low, bar.close
    if l > min(o, c) or h < max(o, c):
        raise MalformedRow(line, f'OHLC out of order (open={o}, high={h}, low={l}, close={c})')
    return bar


def sort_bars(bars: Iterable[OhlcvBar]) -> List[OhlcvBar]:
    """Bars in ascending date order; a repeated date raises DuplicateDate."""
    ordered = sorted(bars, key=lambda b: b.date)
    for prev, cur in zip(ordered, ordered[1:]):
        if prev.date == cur.date:
            raise DuplicateDate(cur.date)
    return ordered


def parse_csv(text: Union[str, Iterable[str]]) -> List[OhlcvBar]:
    """Parse a daily CSV export. Bars come back sorted by date."""
    stream = io.StringIO(text) if isinstance(text, str) else text
    reader = csv.reader(stream)

    header = next(reader, None)
    if header is None or tuple(h.strip().lstrip('\ufeff') for h in header) != HEADER:
        raise MalformedHeader(','.join(header) if header else '')

    bars: List[OhlcvBar] = []
    for fields in reader:
        if not fields or all(f.strip() == '' for f in fields):
            continue
        bars.append(_parse_row(fields, reader.line_num))
    return sort_bars(bars)


def serialize_csv(bars: Sequence[Union[OhlcvBar, AdjustedBar]]) -> str:
    """Write bars back in the export schema; adjusted bars carry Adj Close == Close."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(HEADER)
    for b in bars:
        adj = b.adjusted_close if isinstance(b, OhlcvBar) else b.close
        writer.writerow([b.date.isoformat(), repr(b.open), repr(b.high), repr(b.low), repr(b.close), repr(adj), b.volume])
    return out.getvalue()


def adjust_bars(bars: Sequence[OhlcvBar]) -> List[AdjustedBar]:
    out: List[AdjustedBar] = []
    for b in bars:
        if not b.adjusted_close > 0:
            raise ZeroAdjustedClose(b.date)
        ratio = b.close / b.adjusted_close
        out.append(AdjustedBar(
            date=b.date,
            open=b.open / ratio,
            high=b.high / ratio,
            low=b.low / ratio,
            close=b.close / ratio,
            volume=b.volume,
        ))
    return out


def ticker_provenance(symbol: str, bars: Sequence[AdjustedBar], path: Optional[Path] = None) -> TickerProvenance:
    return TickerProvenance(
        symbol=symbol,
        path=path,
        rows=len(bars),
        first_date=bars[0].date if bars else None,
        last_date=bars[-1].date if bars else None,
    )


def history_record(prov: TickerProvenance) -> dict:
    """Row count and date range of a provenance record, for report headers and the run summary."""
    return {
        'rows': prov.rows,
        'first_date': prov.first_date.isoformat() if prov.first_date else '',
        'last_date': prov.last_date.isoformat() if prov.last_date else '',
    }


def read_ticker(path: Union[str, Path], symbol: Optional[str] = None) -> Tuple[List[AdjustedBar], TickerProvenance]:
    """Adjusted bars of one ticker file together with its provenance record."""
    path = Path(path)
    symbol = symbol or path.stem.upper()
    try:
        with path.open(encoding='utf-8', newline='') as fh:
            bars = adjust_bars(parse_csv(fh))
    except (MarketDataError, NonPositivePrice) as e:
        raise e.tag(symbol)

    prov = ticker_provenance(symbol, bars, path)
    logger.info('loaded %s: %d rows %s..%s from %s', symbol, prov.rows, prov.first_date, prov.last_date, path)
    return bars, prov


def load_ticker(path: Union[str, Path], symbol: Optional[str] = None) -> List[AdjustedBar]:
    return read_ticker(path, symbol)[0]
