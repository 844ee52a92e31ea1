import logging
from pathlib import Path
from typing import List, Sequence

from neurotrade.core.errors import BacktestError, NeuroTradeError
from neurotrade.models.features import Label, LabeledSample
from neurotrade.repositories.artifact_repo_base import MODEL, PREDICTIONS, TEST_SET, TRADE_LOG, TRADES
from neurotrade.repositories.artifact_repo_results import Prediction
from neurotrade.services.backtest import simulate
from neurotrade.services.model_handler import ModelHandler

logger = logging.getLogger(__name__)


class PipelineServiceBacktestMixin:
    def _label_file(self, symbol: str) -> Path:
        return Path(self.labels_path.format(ticker=symbol))

    def _override_labels(self, symbol: str, test: Sequence[LabeledSample]) -> List[Label]:
        by_date = self.repo.load_label_file(self._label_file(symbol))
        missing = [s.date for s in test if s.date not in by_date]
        if missing:
            raise BacktestError(f'label file has no entry for {len(missing)} test dates (first {missing[0]})').tag(symbol)
        return [by_date[s.date] for s in test]

    def backtest(self, symbol: str) -> None:
        inputs = [self.repo.path(symbol, TEST_SET)]
        inputs.append(self._label_file(symbol) if self.labels_path else self.repo.path(symbol, MODEL))
        if self._skip_if_current(symbol, 'backtest', [PREDICTIONS, TRADES, TRADE_LOG], inputs):
            return

        test = self.repo.load_dataset(symbol, 'test')
        try:
            if self.labels_path:
                predicted = self._override_labels(symbol, test)
            else:
                handler = ModelHandler(self.run_config.mlp)
                handler.loads(self.repo.load_model_bytes(symbol))
                predicted = handler.predict(test)
            ledger = simulate([(s.date, s.raw_close) for s in test], predicted, self.run_config.trading)
        except NeuroTradeError as e:
            raise e.tag(symbol)

        logger.info('%s: %d trades, final capital %.2f', symbol, len(ledger.trades), ledger.final_capital)
        self.repo.save_predictions(symbol, [
            Prediction(s.date, s.raw_close, s.label, label) for s, label in zip(test, predicted)
        ])
        self.repo.save_ledger(symbol, ledger)
