"""Classification and trading evaluation results."""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from neurotrade.models.market import TickerProvenance


@dataclass(frozen=True, eq=False)
class ConfusionMatrix:
    """Rows are actual classes, columns are predicted classes."""
    counts: np.ndarray

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    def __getitem__(self, key):
        return self.counts[key]


@dataclass(frozen=True)
class ClassScores:
    precision: Tuple[float, float, float]
    recall: Tuple[float, float, float]
    f1: Tuple[float, float, float]
    accuracy: float


@dataclass(frozen=True)
class TradingStats:
    final_capital: float
    bah_final_capital: float
    annualized_return: float
    bah_annualized_return: float
    annualized_transactions: float
    percent_success: float
    avg_profit_per_transaction_pct: float
    avg_transaction_length_bars: float
    max_profit_pct: float
    max_loss_pct: float
    max_capital: float
    our_cagr: float = 0.0
    bah_cagr: float = 0.0
    trade_count: int = 0
    no_trades: bool = False


@dataclass(frozen=True)
class TickerOutcome:
    """Result of one ticker's pass through the requested stages."""
    symbol: str
    status: str  # ok | failed | skipped
    detail: str = ''
    stats: Optional[TradingStats] = None
    provenance: Optional[TickerProvenance] = None

    @property
    def ok(self) -> bool:
        return self.status == 'ok'
