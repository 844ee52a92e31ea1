"""
Pydantic schemas for run configuration and API request/response models
"""

from datetime import date
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class IndicatorConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra='forbid')

    rsi_period: int = Field(14, ge=2)
    wr_period: int = Field(14, ge=2)
    macd_fast: int = Field(12, ge=2)
    macd_slow: int = Field(26, ge=2)

    @model_validator(mode='after')
    def _fast_below_slow(self):
        if self.macd_fast >= self.macd_slow:
            raise ValueError('macd_fast must be smaller than macd_slow')
        return self

    @property
    def warmup(self) -> int:
        """Index of the first bar at which every indicator is defined."""
        return max(self.rsi_period, self.wr_period - 1, self.macd_slow - 1)


class LabelerConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra='forbid')

    window: int = Field(15, ge=3)

    @field_validator('window')
    @classmethod
    def _odd(cls, v: int) -> int:
        if v % 2 == 0:
            raise ValueError('window must be odd so a center bar exists')
        return v


class SplitSpec(BaseModel):
    model_config = ConfigDict(frozen=True, extra='forbid')

    train_start: date = date(1997, 1, 1)
    train_end: date = date(2006, 12, 31)
    test_start: date = date(2007, 1, 1)
    test_end: date = date(2017, 1, 1)

    @model_validator(mode='after')
    def _ordered(self):
        if self.train_start > self.train_end:
            raise ValueError('train range is empty')
        if self.test_start > self.test_end:
            raise ValueError('test range is empty')
        if self.train_end >= self.test_start:
            raise ValueError('train_end must precede test_start')
        return self

    @property
    def test_years(self) -> float:
        return ((self.test_end - self.test_start).days + 1) / 365.25


class MlpConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra='forbid')

    layers: List[int] = Field(default_factory=lambda: [4, 5, 4, 3])
    epochs: int = Field(200, ge=1)
    batch_size: int = Field(128, ge=1)
    seed: int = 1234
    learning_rate: float = Field(0.03, gt=0)

    @field_validator('layers')
    @classmethod
    def _positive(cls, v: List[int]) -> List[int]:
        if any(int(n) < 1 for n in v):
            raise ValueError('layer sizes must be positive')
        return [int(n) for n in v]


class TradingConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra='forbid')

    starting_capital: float = Field(10000.0, gt=0)
    # 0.001 of the default starting capital
    commission_per_side: float = Field(1.0, ge=0)
    stop_loss_fraction: float = Field(0.05, gt=0, lt=1)


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra='forbid')

    data_dir: str = 'data'
    tickers: List[str] = Field(default_factory=list)
    indicator: IndicatorConfig = Field(default_factory=IndicatorConfig)
    labeler: LabelerConfig = Field(default_factory=LabelerConfig)
    split: SplitSpec = Field(default_factory=SplitSpec)
    mlp: MlpConfig = Field(default_factory=MlpConfig)
    trading: TradingConfig = Field(default_factory=TradingConfig)
    output_dir: str = 'out'
    parallelism: int = Field(1, ge=1)

    @field_validator('tickers')
    @classmethod
    def _symbols(cls, v: List[str]) -> List[str]:
        out = [str(t).strip().upper() for t in v if str(t).strip()]
        if len(set(out)) != len(out):
            raise ValueError('duplicate ticker symbols')
        return out

    def provenance(self) -> dict:
        """Resolved config without run-environment leaves; embedded in every report."""
        return self.model_dump(mode='json', exclude={'parallelism', 'output_dir', 'data_dir'})


# --- HTTP API bodies ---

class BarIn(BaseModel):
    date: date
    open: float
    high: float
    low: float
    close: float
    adjusted_close: float
    volume: int = 0


class IndicatorRequest(BaseModel):
    bars: List[BarIn]
    config: Optional[IndicatorConfig] = None


class FeatureRowOut(BaseModel):
    date: date
    close: float
    rsi: float
    williams_r: float
    macd: float


class LabelRequest(BaseModel):
    closes: List[float]
    config: Optional[LabelerConfig] = None


class BacktestRequest(BaseModel):
    dates: List[date]
    closes: List[float]
    labels: List[int]
    config: Optional[TradingConfig] = None


class TradeOut(BaseModel):
    entry_index: int
    exit_index: int
    entry_date: date
    exit_date: date
    entry_price: float
    exit_price: float
    shares: float
    profit: float
    profit_pct: float
    exit_reason: str
    capital_after: float


class LedgerOut(BaseModel):
    final_capital: float
    trade_count: int
    trades: List[TradeOut]


class BacktestResponse(BaseModel):
    strategy: LedgerOut
    buy_and_hold: LedgerOut


class ScoresRequest(BaseModel):
    matrix: List[List[int]]


class ScoresResponse(BaseModel):
    precision: List[float]
    recall: List[float]
    f1: List[float]
    accuracy: float
