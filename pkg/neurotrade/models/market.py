"""Daily price records."""

from dataclasses import dataclass
from datetime import date
from pathlib import Path
from typing import Optional


@dataclass(frozen=True)
class OhlcvBar:
    date: date
    open: float
    high: float
    low: float
    close: float
    adjusted_close: float
    volume: int


@dataclass(frozen=True)
class AdjustedBar:
    """OHLC rescaled by close/adjusted_close; volume is carried unmodified."""
    date: date
    open: float
    high: float
    low: float
    close: float
    volume: int = 0

    def as_ohlcv(self) -> OhlcvBar:
        return OhlcvBar(self.date, self.open, self.high, self.low, self.close, self.close, self.volume)


@dataclass(frozen=True)
class TickerProvenance:
    symbol: str
    path: Optional[Path]
    rows: int
    first_date: Optional[date]
    last_date: Optional[date]
