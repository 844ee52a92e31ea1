from datetime import date, timedelta
from typing import List, Sequence

import numpy as np

from neurotrade.models.market import AdjustedBar

HEADER_LINE = 'Date,Open,High,Low,Close,Adj Close,Volume'


def business_days(start: date, count: int) -> List[date]:
    days = []
    day = start
    while len(days) < count:
        if day.weekday() < 5:
            days.append(day)
        day += timedelta(days=1)
    return days


def bars_from_closes(closes: Sequence[float], start: date = date(2007, 1, 1), spread: float = 0.01) -> List[AdjustedBar]:
    return [
        AdjustedBar(d, float(c), float(c) * (1 + spread), float(c) * (1 - spread), float(c), 1000)
        for d, c in zip(business_days(start, len(closes)), closes)
    ]


def ticker_csv(closes: Sequence[float], start: date = date(2007, 1, 1), adj_factor: float = 1.0) -> str:
    lines = [HEADER_LINE]
    for d, c in zip(business_days(start, len(closes)), closes):
        c = float(c)
        lines.append(f'{d.isoformat()},{c!r},{c * 1.01!r},{c * 0.99!r},{c!r},{c * adj_factor!r},1000')
    return '\n'.join(lines) + '\n'


def random_walk(seed: int, n: int, start_price: float = 100.0, vol: float = 0.015) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return start_price * np.exp(np.cumsum(rng.normal(0.0, vol, n)))
