"""
API routes exposing the pipeline operations
"""

import os
from pathlib import Path
from typing import Any, Dict, List

import numpy as np
from fastapi import APIRouter, HTTPException

from neurotrade.core.config import Config
from neurotrade.core.errors import EmptyDataset, NeuroTradeError
from neurotrade.models.evaluation import ConfusionMatrix
from neurotrade.models.market import OhlcvBar
from neurotrade.models.trading import Ledger
from neurotrade.repositories.artifact_repository import ArtifactRepository
from neurotrade.schemas.schemas import (
    BacktestRequest,
    BacktestResponse,
    FeatureRowOut,
    IndicatorConfig,
    IndicatorRequest,
    LabelerConfig,
    LabelRequest,
    LedgerOut,
    ScoresRequest,
    ScoresResponse,
    TradeOut,
    TradingConfig,
)
from neurotrade.services.backtest import buy_and_hold, simulate
from neurotrade.services.dataset import label_closes
from neurotrade.services.indicators import compute_feature_rows
from neurotrade.services.market_data import adjust_bars, sort_bars, validate_bar
from neurotrade.services.metrics import read_report_csv, scores

router = APIRouter()


def _unprocessable(e: NeuroTradeError) -> HTTPException:
    return HTTPException(status_code=422, detail=f'{type(e).__name__}: {e}')


def _ledger_out(ledger: Ledger) -> LedgerOut:
    return LedgerOut(
        final_capital=ledger.final_capital,
        trade_count=len(ledger.trades),
        trades=[
            TradeOut(
                entry_index=t.entry_index,
                exit_index=t.exit_index,
                entry_date=t.entry_date,
                exit_date=t.exit_date,
                entry_price=t.entry_price,
                exit_price=t.exit_price,
                shares=t.shares,
                profit=t.profit,
                profit_pct=t.profit_pct,
                exit_reason=t.exit_reason.value,
                capital_after=t.capital_after,
            )
            for t in ledger.trades
        ],
    )


@router.post("/indicators", response_model=List[FeatureRowOut])
def indicators(request: IndicatorRequest):
    """Adjust the bars and compute the four model features"""
    try:
        bars = sort_bars(
            validate_bar(OhlcvBar(b.date, b.open, b.high, b.low, b.close, b.adjusted_close, b.volume), position)
            for position, b in enumerate(request.bars, start=1)
        )
        rows = compute_feature_rows(adjust_bars(bars), request.config or IndicatorConfig())
    except NeuroTradeError as e:
        raise _unprocessable(e)
    return [FeatureRowOut(date=r.date, close=r.close, rsi=r.rsi, williams_r=r.williams_r, macd=r.macd) for r in rows]


@router.post("/labels")
def labels(request: LabelRequest) -> Dict[str, Any]:
    """Label a close series: 0 = Hold, 1 = Buy, 2 = Sell"""
    cfg = request.config or LabelerConfig()
    try:
        codes = label_closes(request.closes, cfg.window)
    except NeuroTradeError as e:
        raise _unprocessable(e)
    return {"window": cfg.window, "labels": [int(c) for c in codes]}


@router.post("/backtest", response_model=BacktestResponse)
def backtest(request: BacktestRequest):
    """Simulate the labels and the buy-and-hold baseline on the same closes"""
    cfg = request.config or TradingConfig()
    if len(request.dates) != len(request.closes):
        raise HTTPException(status_code=422, detail="dates and closes differ in length")
    prices = list(zip(request.dates, request.closes))
    try:
        strategy = simulate(prices, request.labels, cfg)
        baseline = buy_and_hold(prices, cfg)
    except NeuroTradeError as e:
        raise _unprocessable(e)
    except ValueError as e:
        raise HTTPException(status_code=422, detail=str(e))
    return BacktestResponse(strategy=_ledger_out(strategy), buy_and_hold=_ledger_out(baseline))


@router.post("/scores", response_model=ScoresResponse)
def confusion_scores(request: ScoresRequest):
    """Per-class precision/recall/F1 and accuracy of a 3x3 confusion matrix"""
    counts = np.asarray(request.matrix, dtype=np.int64)
    if counts.shape != (3, 3) or (counts < 0).any():
        raise HTTPException(status_code=422, detail="matrix must be 3x3 with non-negative counts")
    if counts.sum() == 0:
        raise _unprocessable(EmptyDataset('confusion matrix'))
    s = scores(ConfusionMatrix(counts))
    return ScoresResponse(precision=list(s.precision), recall=list(s.recall), f1=list(s.f1), accuracy=s.accuracy)


@router.get("/reports")
def reports() -> List[Dict[str, str]]:
    """Rows of the last aggregate report in the output directory"""
    repo = ArtifactRepository(Path(os.environ.get(Config.OUTPUT_DIR_ENV, Config.OUTPUT_DIR)))
    try:
        text = repo.load_report()
    except NeuroTradeError:
        raise HTTPException(status_code=404, detail="No report found")
    return read_report_csv(text)
