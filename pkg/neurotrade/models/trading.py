"""Trade ledger records produced by the backtest."""

from dataclasses import dataclass, field
from datetime import date
from enum import Enum
from typing import List, Tuple


class ExitReason(str, Enum):
    SIGNAL = 'Signal'
    STOP_LOSS = 'StopLoss'
    END_OF_DATA = 'EndOfData'


@dataclass(frozen=True)
class Trade:
    entry_index: int
    exit_index: int
    entry_date: date
    exit_date: date
    entry_price: float
    exit_price: float
    shares: float
    profit: float
    profit_pct: float
    exit_reason: ExitReason
    capital_after: float

    @property
    def length(self) -> int:
        return self.exit_index - self.entry_index


@dataclass(frozen=True)
class Ledger:
    """`equity[0]` is the starting capital; `equity[i + 1]` is the value after bar i."""
    trades: Tuple[Trade, ...]
    equity: Tuple[float, ...]
    dates: Tuple[date, ...] = field(default=())

    @property
    def starting_capital(self) -> float:
        return self.equity[0]

    @property
    def final_capital(self) -> float:
        return self.equity[-1]

    @property
    def equity_curve(self) -> List[Tuple[date, float]]:
        if not self.dates:
            return []
        return [(self.dates[0], self.equity[0])] + list(zip(self.dates, self.equity[1:]))
