"""Long-only backtest of predicted labels and the Buy-and-Hold baseline.

Fills happen at the signal bar's close. A position uses all available cash,
fractional shares are allowed and every buy and every sell pays one flat
commission.
"""

import csv
import io
import math
from datetime import date
from typing import List, Optional, Sequence, Tuple, Union

from neurotrade.core.errors import BacktestError, LengthMismatch, NonPositivePrice, SeriesTooShort
from neurotrade.models.features import Label
from neurotrade.models.trading import ExitReason, Ledger, Trade
from neurotrade.schemas.schemas import TradingConfig

TRADE_CSV_HEADER = (
    'trade_no', 'entry_date', 'exit_date', 'entry_price', 'exit_price',
    'shares', 'profit', 'profit_pct', 'exit_reason', 'capital_after',
)

PricePoint = Tuple[date, float]


def _checked_prices(prices: Sequence[PricePoint]) -> List[PricePoint]:
    out = []
    for i, (day, close) in enumerate(prices):
        close = float(close)
        if not (math.isfinite(close) and close > 0):
            raise NonPositivePrice(index=i, value=close)
        out.append((day, close))
    return out


class _Position:
    __slots__ = ('entry_index', 'entry_price', 'shares', 'cash_before')

    def __init__(self, entry_index: int, entry_price: float, shares: float, cash_before: float):
        self.entry_index = entry_index
        self.entry_price = entry_price
        self.shares = shares
        self.cash_before = cash_before


def _close(pos: _Position, prices: Sequence[PricePoint], index: int, commission: float, reason: ExitReason) -> Trade:
    exit_date, exit_price = prices[index]
    proceeds = pos.shares * exit_price - commission
    profit = proceeds - pos.cash_before
    return Trade(
        entry_index=pos.entry_index,
        exit_index=index,
        entry_date=prices[pos.entry_index][0],
        exit_date=exit_date,
        entry_price=pos.entry_price,
        exit_price=exit_price,
        shares=pos.shares,
        profit=profit,
        profit_pct=profit / pos.cash_before,
        exit_reason=reason,
        capital_after=proceeds,
    )


def simulate(prices: Sequence[PricePoint], labels: Sequence[Union[Label, int]], cfg: TradingConfig = TradingConfig()) -> Ledger:
    """Replay labels bar by bar.

    A label acts only on the first bar of a run of identical labels and only
    when it differs from the previous such signal. A stop-loss exit consumes
    its bar and forgets the last signal, so the next fresh Buy may re-enter.
    """
    if len(prices) != len(labels):
        raise LengthMismatch(len(prices), len(labels))
    prices = _checked_prices(prices)

    n = len(prices)
    cash = cfg.starting_capital
    commission = cfg.commission_per_side
    stop_factor = 1.0 - cfg.stop_loss_fraction

    position: Optional[_Position] = None
    last_signal: Optional[Label] = None
    previous = None
    trades: List[Trade] = []
    equity = [cash]

    for i, ((_, close), raw) in enumerate(zip(prices, labels)):
        label = Label(int(raw))
        fresh = label != previous
        previous = label

        if position is not None and close <= position.entry_price * stop_factor:
            trade = _close(position, prices, i, commission, ExitReason.STOP_LOSS)
            trades.append(trade)
            cash = trade.capital_after
            position = None
            last_signal = None
        elif fresh and label != Label.HOLD:
            if label != last_signal:
                if label == Label.BUY and position is None and i < n - 1 and cash > commission:
                    shares = (cash - commission) / close
                    position = _Position(i, close, shares, cash)
                    cash = 0.0
                elif label == Label.SELL and position is not None:
                    trade = _close(position, prices, i, commission, ExitReason.SIGNAL)
                    trades.append(trade)
                    cash = trade.capital_after
                    position = None
            last_signal = label

        if position is not None and i == n - 1:
            trade = _close(position, prices, i, commission, ExitReason.END_OF_DATA)
            trades.append(trade)
            cash = trade.capital_after
            position = None

        equity.append(position.shares * close if position is not None else cash)

    return Ledger(trades=tuple(trades), equity=tuple(equity), dates=tuple(d for d, _ in prices))


def buy_and_hold(prices: Sequence[PricePoint], cfg: TradingConfig = TradingConfig()) -> Ledger:
    if len(prices) < 2:
        raise SeriesTooShort(2, len(prices), 'buy-and-hold prices')
    prices = _checked_prices(prices)
    capital = cfg.starting_capital
    if capital <= cfg.commission_per_side:
        raise BacktestError(f'starting capital {capital} does not cover the commission')

    first_close = prices[0][1]
    position = _Position(0, first_close, (capital - cfg.commission_per_side) / first_close, capital)
    last = len(prices) - 1
    trade = _close(position, prices, last, cfg.commission_per_side, ExitReason.END_OF_DATA)

    equity = [capital] + [position.shares * close for _, close in prices[:last]] + [trade.capital_after]
    return Ledger(trades=(trade,), equity=tuple(equity), dates=tuple(d for d, _ in prices))


def replay_equity(trades: Sequence[Trade], prices: Sequence[PricePoint], starting_capital: float) -> List[float]:
    """Rebuild the per-bar equity path from a trade list and the price series."""
    equity = [starting_capital]
    cash = starting_capital
    by_entry = {t.entry_index: t for t in trades}
    open_trade: Optional[Trade] = None
    for i, (_, close) in enumerate(prices):
        if open_trade is None and i in by_entry:
            open_trade = by_entry[i]
        if open_trade is not None and i == open_trade.exit_index:
            cash = open_trade.capital_after
            open_trade = None
        equity.append(open_trade.shares * close if open_trade is not None else cash)
    return equity


def format_trade_log(ledger: Ledger) -> str:
    lines = [
        f'{n}.({t.entry_index}-{t.exit_index}) => {t.profit:.2f} Capital: ${t.capital_after:.2f}'
        for n, t in enumerate(ledger.trades, start=1)
    ]
    lines.append(f'Final capital: ${ledger.final_capital:.2f} after {len(ledger.trades)} transactions')
    return '\n'.join(lines) + '\n'


def trades_to_csv(ledger: Ledger) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(TRADE_CSV_HEADER)
    for n, t in enumerate(ledger.trades, start=1):
        writer.writerow([
            n, t.entry_date.isoformat(), t.exit_date.isoformat(),
            repr(t.entry_price), repr(t.exit_price), repr(t.shares),
            repr(t.profit), repr(t.profit_pct), t.exit_reason.value, repr(t.capital_after),
        ])
    return out.getvalue()


def trades_from_csv(text: str, dates: Sequence[date]) -> List[Trade]:
    """Parse an exported trade CSV; bar indices are recovered from the price dates."""
    index_of = {d: i for i, d in enumerate(dates)}
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != TRADE_CSV_HEADER:
        raise BacktestError(f'unexpected trade CSV header {reader.fieldnames!r}')
    trades = []
    for row in reader:
        entry_date = date.fromisoformat(row['entry_date'])
        exit_date = date.fromisoformat(row['exit_date'])
        try:
            entry_index, exit_index = index_of[entry_date], index_of[exit_date]
        except KeyError as e:
            raise BacktestError(f'trade date {e.args[0]} is not in the price series')
        trades.append(Trade(
            entry_index=entry_index,
            exit_index=exit_index,
            entry_date=entry_date,
            exit_date=exit_date,
            entry_price=float(row['entry_price']),
            exit_price=float(row['exit_price']),
            shares=float(row['shares']),
            profit=float(row['profit']),
            profit_pct=float(row['profit_pct']),
            exit_reason=ExitReason(row['exit_reason']),
            capital_after=float(row['capital_after']),
        ))
    return trades


def ledger_from_trades(trades: Sequence[Trade], prices: Sequence[PricePoint], starting_capital: float) -> Ledger:
    return Ledger(
        trades=tuple(trades),
        equity=tuple(replay_equity(trades, prices, starting_capital)),
        dates=tuple(d for d, _ in prices),
    )
