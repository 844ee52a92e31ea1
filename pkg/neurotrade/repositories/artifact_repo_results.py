import csv
import io
from datetime import date
from pathlib import Path
from typing import Dict, List, NamedTuple, Sequence, Tuple, Union

from neurotrade.core.errors import BacktestError, MissingUpstreamArtifact
from neurotrade.models.evaluation import ClassScores, ConfusionMatrix, TickerOutcome, TradingStats
from neurotrade.models.features import Label
from neurotrade.models.trading import Ledger
from neurotrade.repositories.artifact_repo_base import (
    CLASSIFICATION,
    METRICS,
    PREDICTIONS,
    REPORT_CSV,
    REPORT_TXT,
    SUMMARY,
    TRADE_LOG,
    TRADES,
)
from neurotrade.services.backtest import format_trade_log, trades_to_csv
from neurotrade.services.market_data import history_record
from neurotrade.services.metrics import classification_csv, format_report, report_csv

PREDICTION_HEADER = ('Date', 'RawClose', 'Actual', 'Predicted')
SUMMARY_HEADER = ('ticker', 'status', 'detail', 'rows', 'first_date', 'last_date')


class Prediction(NamedTuple):
    date: date
    raw_close: float
    actual: Label
    predicted: Label


def parse_label(raw: str) -> Label:
    raw = raw.strip()
    if raw.lstrip('-').isdigit():
        return Label(int(raw))
    return Label[raw.upper()]


class ArtifactRepositoryResultsMixin:
    def save_predictions(self, symbol: str, predictions: Sequence[Prediction]):
        out = io.StringIO()
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow(PREDICTION_HEADER)
        for p in predictions:
            writer.writerow([p.date.isoformat(), repr(p.raw_close), int(p.actual), int(p.predicted)])
        return self._write_text(self.path(symbol, PREDICTIONS), out.getvalue())

    def load_predictions(self, symbol: str) -> List[Prediction]:
        reader = csv.DictReader(io.StringIO(self._read_text(self.path(symbol, PREDICTIONS), 'backtest')))
        return [
            Prediction(date.fromisoformat(r['Date']), float(r['RawClose']), Label(int(r['Actual'])), Label(int(r['Predicted'])))
            for r in reader
        ]

    def save_ledger(self, symbol: str, ledger: Ledger):
        self._write_text(self.path(symbol, TRADES), trades_to_csv(ledger))
        self._write_text(self.path(symbol, TRADE_LOG), format_trade_log(ledger))

    def save_metrics(self, symbol: str, stats: TradingStats, matrix: ConfusionMatrix, scores: ClassScores, provenance: dict):
        self._write_text(self.path(symbol, METRICS), report_csv([(symbol, stats)], provenance, with_average=False))
        self._write_text(self.path(symbol, CLASSIFICATION), classification_csv(matrix, scores))

    def load_label_file(self, source: Union[str, Path]) -> Dict[date, Label]:
        """Hand-written signal file with `Date,Label` columns; labels as codes or names."""
        source = Path(source)
        if not source.is_file():
            raise MissingUpstreamArtifact(source)
        reader = csv.DictReader(io.StringIO(self._read_text(source)))
        if not reader.fieldnames or not {'Date', 'Label'} <= set(reader.fieldnames):
            raise BacktestError(f'label file {source} needs Date and Label columns')
        try:
            return {date.fromisoformat(r['Date'].strip()): parse_label(r['Label']) for r in reader}
        except (KeyError, ValueError) as e:
            raise BacktestError(f'label file {source} has an unreadable row: {e}')

    def save_reports(self, results: Sequence[Tuple[str, TradingStats]], provenance: dict):
        self._write_text(self.root / REPORT_CSV, report_csv(results, provenance))
        self._write_text(self.root / REPORT_TXT, format_report(results, provenance))

    def save_summary(self, outcomes: Sequence[TickerOutcome]):
        out = io.StringIO()
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow(SUMMARY_HEADER)
        for o in outcomes:
            history = history_record(o.provenance) if o.provenance else {}
            writer.writerow([o.symbol, o.status, o.detail] + [history.get(k, '') for k in SUMMARY_HEADER[3:]])
        return self._write_text(self.root / SUMMARY, out.getvalue())

    def load_report(self) -> str:
        return self._read_text(self.root / REPORT_CSV, 'evaluate')
