import logging
from typing import Sequence, Tuple

from neurotrade.core.errors import NeuroTradeError
from neurotrade.models.evaluation import TradingStats
from neurotrade.services.backtest import buy_and_hold, simulate
from neurotrade.services.market_data import history_record
from neurotrade.services.metrics import confusion, scores, trading_stats

logger = logging.getLogger(__name__)


class PipelineServiceEvaluateMixin:
    def evaluate(self, symbol: str) -> TradingStats:
        """Recompute the ledgers from the stored predictions and write the ticker's metrics."""
        cfg = self.run_config
        predictions = self.repo.load_predictions(symbol)
        prices = [(p.date, p.raw_close) for p in predictions]
        try:
            ledger = simulate(prices, [p.predicted for p in predictions], cfg.trading)
            bah = buy_and_hold(prices, cfg.trading)
            stats = trading_stats(ledger, bah, cfg.split.test_years)
            matrix = confusion([p.actual for p in predictions], [p.predicted for p in predictions])
        except NeuroTradeError as e:
            raise e.tag(symbol)

        prov = self.repo.load_provenance(symbol)
        header = dict(cfg.provenance(), history=history_record(prov))
        class_scores = scores(matrix)
        logger.info(
            '%s: accuracy %.4f, OUR %.2f vs BaH %.2f%s',
            symbol, class_scores.accuracy, stats.final_capital, stats.bah_final_capital,
            ' (no trades)' if stats.no_trades else '',
        )
        self.repo.save_metrics(symbol, stats, matrix, class_scores, header)
        return stats


class PipelineServiceReportMixin:
    def write_reports(self, results: Sequence[Tuple[str, TradingStats]]) -> None:
        self.repo.save_reports(results, self.run_config.provenance())
        logger.info('aggregate report for %d tickers written to %s', len(results), self.repo.root)
