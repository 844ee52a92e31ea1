"""Classification scores and trading statistics, plus the aggregate report."""

import csv
import io
import json
from datetime import date
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from tabulate import tabulate

from neurotrade.core.errors import EmptyDataset, LengthMismatch, MetricsError, SpanTooShort
from neurotrade.models.evaluation import ClassScores, ConfusionMatrix, TradingStats
from neurotrade.models.features import CLASS_COUNT, Label
from neurotrade.models.trading import Ledger

REPORT_COLUMNS = ('Share', 'OUR', 'BaH', 'OURr', 'BaHr', 'AnT', 'PoS', 'ApT', 'L', 'MpT', 'MlT', 'MxC', 'OURcagr', 'BaHcagr')
AVERAGE_ROW = 'Average'

_STAT_FIELDS = (
    'final_capital', 'bah_final_capital', 'annualized_return', 'bah_annualized_return',
    'annualized_transactions', 'percent_success', 'avg_profit_per_transaction_pct',
    'avg_transaction_length_bars', 'max_profit_pct', 'max_loss_pct', 'max_capital',
    'our_cagr', 'bah_cagr',
)


def confusion(actual: Sequence[Union[Label, int]], predicted: Sequence[Union[Label, int]]) -> ConfusionMatrix:
    if len(actual) != len(predicted):
        raise LengthMismatch(len(actual), len(predicted))
    if len(actual) == 0:
        raise EmptyDataset('label sequence')
    counts = np.zeros((CLASS_COUNT, CLASS_COUNT), dtype=np.int64)
    np.add.at(counts, (np.asarray(actual, dtype=int), np.asarray(predicted, dtype=int)), 1)
    return ConfusionMatrix(counts)


def scores(m: ConfusionMatrix) -> ClassScores:
    counts = np.asarray(m.counts, dtype=float)
    diag = np.diag(counts)
    col = counts.sum(axis=0)
    row = counts.sum(axis=1)
    precision = np.divide(diag, col, out=np.zeros_like(diag), where=col > 0)
    recall = np.divide(diag, row, out=np.zeros_like(diag), where=row > 0)
    denom = precision + recall
    f1 = np.divide(2 * precision * recall, denom, out=np.zeros_like(diag), where=denom > 0)
    total = counts.sum()
    return ClassScores(
        precision=tuple(float(x) for x in precision),
        recall=tuple(float(x) for x in recall),
        f1=tuple(float(x) for x in f1),
        accuracy=float(diag.sum() / total) if total > 0 else 0.0,
    )


def annualize(start_capital: float, equity_path: Sequence[Tuple[date, float]]) -> float:
    """Arithmetic mean of calendar-year simple returns.

    Each year's return is measured from the previous year's closing equity
    (from `start_capital` for the first year). Partial years count as years.
    """
    if len({d for d, _ in equity_path}) < 2:
        raise SpanTooShort(f'({len(equity_path)} points)')

    year_end: Dict[int, float] = {}
    for day, value in sorted(equity_path, key=lambda p: p[0]):
        year_end[day.year] = value

    base = start_capital
    returns = []
    for year in sorted(year_end):
        returns.append(year_end[year] / base - 1.0)
        base = year_end[year]
    return float(np.mean(returns))


def cagr(start_capital: float, final_capital: float, years: float) -> float:
    if years <= 0 or start_capital <= 0:
        raise MetricsError(f'cannot compound over {years} years from {start_capital}')
    return (final_capital / start_capital) ** (1.0 / years) - 1.0


def trading_stats(ledger: Ledger, bah: Ledger, test_years: float) -> TradingStats:
    if test_years <= 0:
        raise MetricsError(f'test span must be positive, got {test_years} years')

    trades = ledger.trades
    pct = np.array([t.profit_pct * 100.0 for t in trades], dtype=float)
    lengths = np.array([t.length for t in trades], dtype=float)
    n = len(trades)

    return TradingStats(
        final_capital=ledger.final_capital,
        bah_final_capital=bah.final_capital,
        annualized_return=annualize(ledger.starting_capital, ledger.equity_curve) * 100.0,
        bah_annualized_return=annualize(bah.starting_capital, bah.equity_curve) * 100.0,
        annualized_transactions=n / test_years,
        percent_success=100.0 * float((pct > 0).sum()) / n if n else 0.0,
        avg_profit_per_transaction_pct=float(pct.mean()) if n else 0.0,
        avg_transaction_length_bars=float(lengths.mean()) if n else 0.0,
        max_profit_pct=float(pct.max()) if n else 0.0,
        max_loss_pct=float(pct.min()) if n else 0.0,
        max_capital=float(max(ledger.equity)),
        our_cagr=cagr(ledger.starting_capital, ledger.final_capital, test_years) * 100.0,
        bah_cagr=cagr(bah.starting_capital, bah.final_capital, test_years) * 100.0,
        trade_count=n,
        no_trades=n == 0,
    )


def _fmt(value: float) -> str:
    return f'{value:.2f}'


def report_rows(results: Sequence[Tuple[str, TradingStats]], with_average: bool = True) -> List[List[str]]:
    """Rows of the aggregate report in column order, optionally followed by the averages row."""
    rows = [[symbol] + [_fmt(getattr(stats, f)) for f in _STAT_FIELDS] for symbol, stats in results]
    if with_average and results:
        means = [float(np.mean([getattr(stats, f) for _, stats in results])) for f in _STAT_FIELDS]
        rows.append([AVERAGE_ROW] + [_fmt(v) for v in means])
    return rows


def provenance_lines(provenance: Optional[dict]) -> List[str]:
    if provenance is None:
        return []
    return ['# neurotrade report', '# config: ' + json.dumps(provenance, sort_keys=True, separators=(',', ':'))]


def report_csv(results: Sequence[Tuple[str, TradingStats]], provenance: Optional[dict] = None, with_average: bool = True) -> str:
    out = io.StringIO()
    for line in provenance_lines(provenance):
        out.write(line + '\n')
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(REPORT_COLUMNS)
    writer.writerows(report_rows(results, with_average))
    return out.getvalue()


def format_report(results: Sequence[Tuple[str, TradingStats]], provenance: Optional[dict] = None) -> str:
    lines = provenance_lines(provenance)
    lines.append(tabulate(report_rows(results), headers=REPORT_COLUMNS, tablefmt='psql', disable_numparse=True))
    return '\n'.join(lines) + '\n'


def read_report_csv(text: str) -> List[Dict[str, str]]:
    """Report rows as dicts keyed by column name; `#` provenance lines are skipped."""
    body = [line for line in text.splitlines() if not line.startswith('#')]
    return list(csv.DictReader(body))


def classification_csv(m: ConfusionMatrix, s: ClassScores) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(['class', 'precision', 'recall', 'f1', 'support'] + [f'pred_{label.name.title()}' for label in Label])
    for label in Label:
        c = int(label)
        writer.writerow([
            label.name.title(), f'{s.precision[c]:.4f}', f'{s.recall[c]:.4f}', f'{s.f1[c]:.4f}',
            int(m.counts[c].sum()), *(int(x) for x in m.counts[c]),
        ])
    writer.writerow(['accuracy', f'{s.accuracy:.4f}', '', '', m.total, '', '', ''])
    return out.getvalue()
