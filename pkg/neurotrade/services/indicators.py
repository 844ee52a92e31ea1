"""Technical indicators: EMA, RSI (Wilder), MACD and Williams %R.

Every indicator returns an array aligned with its input; positions where the
indicator is not yet defined hold NaN.
"""

import csv
import io
from typing import List, Sequence

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from neurotrade.core.errors import EmptySeries, SeriesTooShort
from neurotrade.models.features import FeatureRow
from neurotrade.models.market import AdjustedBar
from neurotrade.schemas.schemas import IndicatorConfig

FEATURE_CSV_HEADER = ('Date', 'Close', 'RSI', 'WilliamsR', 'MACD')


def _as_prices(closes: Sequence[float]) -> np.ndarray:
    values = np.asarray(closes, dtype=float)
    if values.ndim != 1 or values.size == 0:
        raise EmptySeries()
    return values


def ema(closes: Sequence[float], period: int) -> np.ndarray:
    values = _as_prices(closes)
    if period < 1:
        raise ValueError('period must be >= 1')

    out = np.full(values.size, np.nan)
    if values.size < period:
        return out

    alpha = 2.0 / (period + 1)
    out[period - 1] = values[:period].mean()
    for t in range(period, values.size):
        out[t] = alpha * values[t] + (1.0 - alpha) * out[t - 1]
    return out


def _rsi_value(avg_gain: float, avg_loss: float) -> float:
    if avg_loss == 0.0:
        return 50.0 if avg_gain == 0.0 else 100.0
    if avg_gain == 0.0:
        return 0.0
    return 100.0 - 100.0 / (1.0 + avg_gain / avg_loss)


def rsi(closes: Sequence[float], period: int = 14) -> np.ndarray:
    values = _as_prices(closes)
    if values.size <= period:
        raise SeriesTooShort(period + 1, values.size, 'RSI input')

    changes = np.diff(values)
    gains = np.maximum(changes, 0.0)
    losses = np.maximum(-changes, 0.0)

    out = np.full(values.size, np.nan)
    avg_gain = gains[:period].mean()
    avg_loss = losses[:period].mean()
    out[period] = _rsi_value(avg_gain, avg_loss)
    for t in range(period + 1, values.size):
        # Wilder smoothing; change t-1 is the move into bar t
        avg_gain = (avg_gain * (period - 1) + gains[t - 1]) / period
        avg_loss = (avg_loss * (period - 1) + losses[t - 1]) / period
        out[t] = _rsi_value(avg_gain, avg_loss)
    return out


def macd(closes: Sequence[float], cfg: IndicatorConfig = IndicatorConfig()) -> np.ndarray:
    values = _as_prices(closes)
    if values.size < cfg.macd_slow:
        raise SeriesTooShort(cfg.macd_slow, values.size, 'MACD input')
    return ema(values, cfg.macd_fast) - ema(values, cfg.macd_slow)


def williams_r_arrays(high: Sequence[float], low: Sequence[float], close: Sequence[float], period: int = 14) -> np.ndarray:
    hi = np.asarray(high, dtype=float)
    lo = np.asarray(low, dtype=float)
    cl = np.asarray(close, dtype=float)
    if cl.size < period:
        raise SeriesTooShort(period, cl.size, 'Williams %R input')

    highest = sliding_window_view(hi, period).max(axis=1)
    lowest = sliding_window_view(lo, period).min(axis=1)
    current = cl[period - 1:]
    span = highest - lowest

    ratio = np.divide(highest - current, span, out=np.full(span.size, 0.5), where=span > 0)
    out = np.full(cl.size, np.nan)
    out[period - 1:] = ratio * -100.0
    return out


def williams_r(bars: Sequence[AdjustedBar], period: int = 14) -> np.ndarray:
    return williams_r_arrays(
        [b.high for b in bars],
        [b.low for b in bars],
        [b.close for b in bars],
        period,
    )


def compute_feature_rows(bars: Sequence[AdjustedBar], cfg: IndicatorConfig = IndicatorConfig()) -> List[FeatureRow]:
    start = cfg.warmup
    if len(bars) < start + 1:
        raise SeriesTooShort(start + 1, len(bars), 'price series')

    closes = np.array([b.close for b in bars], dtype=float)
    rsi_values = rsi(closes, cfg.rsi_period)
    wr_values = williams_r(bars, cfg.wr_period)
    macd_values = macd(closes, cfg)

    return [
        FeatureRow(
            date=bars[t].date,
            close=float(closes[t]),
            rsi=float(rsi_values[t]),
            williams_r=float(wr_values[t]),
            macd=float(macd_values[t]),
        )
        for t in range(start, len(bars))
    ]


def feature_rows_to_csv(rows: Sequence[FeatureRow]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(FEATURE_CSV_HEADER)
    for r in rows:
        writer.writerow([r.date.isoformat(), repr(r.close), repr(r.rsi), repr(r.williams_r), repr(r.macd)])
    return out.getvalue()
