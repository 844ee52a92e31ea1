from datetime import date

import numpy as np
import pytest

from neurotrade.core.errors import BacktestError, LengthMismatch, NonPositivePrice, SeriesTooShort
from neurotrade.models.features import Label
from neurotrade.models.trading import ExitReason
from neurotrade.schemas.schemas import TradingConfig
from neurotrade.services.backtest import (
    buy_and_hold,
    format_trade_log,
    ledger_from_trades,
    replay_equity,
    simulate,
    trades_from_csv,
    trades_to_csv,
)
from tests.helpers import business_days, random_walk

H, B, S = Label.HOLD, Label.BUY, Label.SELL


def _prices(closes, start=date(2007, 1, 1)):
    return list(zip(business_days(start, len(closes)), [float(c) for c in closes]))


def _random_labels(rng, n, hold=0.5):
    p = [hold, (1 - hold) / 2, (1 - hold) / 2]
    return [Label(int(x)) for x in rng.choice(3, size=n, p=p)]


def _collapse_runs(labels):
    out = []
    previous = None
    for label in labels:
        out.append(H if label == previous else label)
        previous = label
    return out


class TestSimulate:
    def test_buy_then_sell(self):
        ledger = simulate(_prices([100, 110]), [B, S])
        [trade] = ledger.trades
        assert trade.shares == pytest.approx(99.99)
        assert trade.profit == pytest.approx(997.90)
        assert trade.exit_reason is ExitReason.SIGNAL
        assert ledger.final_capital == pytest.approx(10997.90)

    def test_all_hold(self):
        ledger = simulate(_prices([100, 120, 90, 105]), [H] * 4)
        assert ledger.trades == ()
        assert ledger.equity == (10000.0,) * 5

    def test_stop_loss(self):
        ledger = simulate(_prices([100, 94, 120]), [B, H, S])
        [trade] = ledger.trades
        assert trade.exit_reason is ExitReason.STOP_LOSS
        assert trade.exit_index == 1
        assert ledger.final_capital == pytest.approx(9398.06)

    def test_fresh_buy_after_stop_loss_re_enters(self):
        ledger = simulate(_prices([100, 94, 96, 100, 110]), [B, H, H, B, S])
        assert [t.exit_reason for t in ledger.trades] == [ExitReason.STOP_LOSS, ExitReason.SIGNAL]
        assert (ledger.trades[1].entry_index, ledger.trades[1].exit_index) == (3, 4)

    def test_repeated_buy_without_stop_is_ignored(self):
        ledger = simulate(_prices([100, 101, 102, 103, 110]), [B, H, S, B, B])
        assert len(ledger.trades) == 2
        assert ledger.trades[1].exit_reason is ExitReason.END_OF_DATA

    def test_open_position_closes_at_end(self):
        ledger = simulate(_prices([100, 105, 107]), [B, H, H])
        [trade] = ledger.trades
        assert trade.exit_reason is ExitReason.END_OF_DATA
        assert trade.exit_index == 2
        assert ledger.final_capital == pytest.approx(99.99 * 107 - 1)

    def test_buy_on_last_bar_is_ignored(self):
        assert simulate(_prices([100, 110]), [H, B]).trades == ()

    def test_sell_while_flat_is_ignored(self):
        assert simulate(_prices([100, 110, 120]), [S, H, S]).trades == ()

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            simulate(_prices([100, 110]), [B])

    def test_non_positive_price(self):
        with pytest.raises(NonPositivePrice) as exc:
            simulate(_prices([100, 0, 110]), [B, H, S])
        assert exc.value.index == 1

    def test_trade_log(self):
        text = format_trade_log(simulate(_prices([100, 110]), [B, S]))
        assert text == '1.(0-1) => 997.90 Capital: $10997.90\nFinal capital: $10997.90 after 1 transactions\n'


class TestLedgerProperties:
    def test_repeated_signals_are_suppressed(self, rng):
        for run in range(1000):
            n = int(rng.integers(2, 60))
            prices = _prices(random_walk(run, n, vol=0.04))
            labels = _random_labels(rng, n, hold=float(rng.uniform(0.0, 0.8)))
            assert simulate(prices, labels) == simulate(prices, _collapse_runs(labels))

    def test_ledger_consistency(self, rng):
        cfg = TradingConfig()
        for run in range(200):
            n = int(rng.integers(2, 120))
            prices = _prices(random_walk(5000 + run, n, vol=0.03))
            labels = _random_labels(rng, n, hold=0.7)
            ledger = simulate(prices, labels, cfg)

            assert len(ledger.equity) == n + 1
            assert ledger.equity[0] == cfg.starting_capital
            assert min(ledger.equity) >= 0.0
            previous_exit = -1
            for t in ledger.trades:
                assert previous_exit < t.entry_index < t.exit_index
                assert t.shares > 0
                expected = t.shares * (t.exit_price - t.entry_price) - 2 * cfg.commission_per_side
                assert t.profit == pytest.approx(expected, abs=1e-6)
                previous_exit = t.exit_index
            np.testing.assert_allclose(replay_equity(ledger.trades, prices, cfg.starting_capital), ledger.equity, rtol=1e-12)

    def test_zero_commission_compounds_price_ratios(self, rng):
        cfg = TradingConfig(commission_per_side=0.0, stop_loss_fraction=1 - 1e-9)
        for run in range(1000):
            n = int(rng.integers(2, 80))
            prices = _prices(random_walk(9000 + run, n))
            ledger = simulate(prices, _random_labels(rng, n), cfg)
            growth = np.prod([t.exit_price / t.entry_price for t in ledger.trades])
            assert ledger.final_capital == pytest.approx(cfg.starting_capital * growth, rel=1e-9)

    def test_trade_csv(self, rng):
        n = 150
        prices = _prices(random_walk(77, n, vol=0.03))
        ledger = simulate(prices, _random_labels(rng, n, hold=0.8))
        assert ledger.trades
        trades = trades_from_csv(trades_to_csv(ledger), [d for d, _ in prices])
        assert trades == list(ledger.trades)
        assert ledger_from_trades(trades, prices, 10000.0) == ledger

    def test_trade_csv_rejects_unknown_dates(self):
        ledger = simulate(_prices([100, 110]), [B, S])
        with pytest.raises(BacktestError):
            trades_from_csv(trades_to_csv(ledger), [date(1990, 1, 1)])


class TestBuyAndHold:
    def test_doubling(self):
        ledger = buy_and_hold(_prices([100, 200]))
        assert ledger.final_capital == pytest.approx(19997.0)
        assert len(ledger.trades) == 1

    def test_flat_loses_commissions(self):
        assert buy_and_hold(_prices([100, 100])).final_capital == pytest.approx(9998.0)

    def test_equity_is_marked_to_market(self):
        ledger = buy_and_hold(_prices([100, 110, 90, 120]))
        assert ledger.equity[:4] == pytest.approx((10000.0, 9999.0, 99.99 * 110, 99.99 * 90))
        assert ledger.final_capital == pytest.approx(99.99 * 120 - 1)

    def test_single_point(self):
        with pytest.raises(SeriesTooShort):
            buy_and_hold(_prices([100]))

    def test_capital_must_cover_commission(self):
        with pytest.raises(BacktestError):
            buy_and_hold(_prices([100, 110]), TradingConfig(starting_capital=1.0))
