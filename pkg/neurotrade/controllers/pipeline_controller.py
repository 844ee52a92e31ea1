"""Controller layer for neurotrade.

Controllers adapt transport-layer inputs (CLI, HTTP) to service calls: they
schedule one job per ticker, isolate failures and write the run-level reports.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import List, Optional, Sequence, Tuple

from neurotrade.core.errors import ConfigInvalid, InsufficientHistory, NeuroTradeError, NoTickersSucceeded
from neurotrade.core.logging import setup_logging
from neurotrade.models.evaluation import TickerOutcome
from neurotrade.schemas.schemas import RunConfig
from neurotrade.services.pipeline_service import PipelineService
from neurotrade.services.pipeline_service_base import STAGES

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunSummary:
    outcomes: Tuple[TickerOutcome, ...]

    @property
    def failed(self) -> List[TickerOutcome]:
        return [o for o in self.outcomes if o.status == 'failed']

    @property
    def succeeded(self) -> List[TickerOutcome]:
        return [o for o in self.outcomes if o.ok]

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0


def run_ticker_job(job: Tuple[RunConfig, str, Tuple[str, ...], bool, Optional[str]]) -> TickerOutcome:
    """Worker entry point; everything it needs travels in `job`, nothing is shared."""
    run_config, symbol, stages, resume, labels_path = job
    setup_logging()
    service = PipelineService(run_config, resume=resume, labels_path=labels_path)
    try:
        stats = service.run_ticker(symbol, stages)
        outcome = TickerOutcome(symbol, 'ok', '', stats)
    except InsufficientHistory as e:
        logger.warning('%s skipped: %s', symbol, e.message)
        outcome = TickerOutcome(symbol, 'skipped', e.message)
    except NeuroTradeError as e:
        logger.error('%s failed: %s', symbol, e)
        outcome = TickerOutcome(symbol, 'failed', f'{type(e).__name__}: {e.message}')
    except Exception as e:
        logger.exception('%s failed unexpectedly', symbol)
        outcome = TickerOutcome(symbol, 'failed', f'{type(e).__name__}: {e}')
    try:
        return replace(outcome, provenance=service.recorded_provenance(symbol))
    except (NeuroTradeError, ValueError, KeyError) as e:
        logger.warning('%s: unreadable provenance record: %r', symbol, e)
        return outcome


class PipelineController:
    def __init__(self, run_config: RunConfig, resume: bool = False, labels_path: Optional[str] = None):
        self.run_config = run_config
        self.resume = resume
        self.labels_path = labels_path
        self.service = PipelineService(run_config, resume=resume, labels_path=labels_path)

    def _jobs(self, stages: Sequence[str]):
        return [(self.run_config, symbol, tuple(stages), self.resume, self.labels_path) for symbol in self.run_config.tickers]

    def run(self, stages: Sequence[str] = STAGES) -> RunSummary:
        unknown = [s for s in stages if s not in STAGES]
        if unknown:
            raise ConfigInvalid(f'unknown stage(s): {", ".join(unknown)}')
        if not self.run_config.tickers:
            raise ConfigInvalid('no tickers configured')

        jobs = self._jobs(stages)
        workers = min(self.run_config.parallelism, len(jobs))
        logger.info('running %s for %d tickers with %d worker(s)', '/'.join(stages), len(jobs), workers)
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                # map preserves submission order, so aggregation follows the configured ticker order
                outcomes = tuple(pool.map(run_ticker_job, jobs))
        else:
            outcomes = tuple(run_ticker_job(job) for job in jobs)

        summary = RunSummary(outcomes)
        self.service.repo.save_summary(outcomes)
        if 'evaluate' in stages and summary.succeeded:
            self.service.write_reports([(o.symbol, o.stats) for o in summary.succeeded])

        for o in summary.failed:
            logger.error('%s: %s', o.symbol, o.detail)
        if not summary.succeeded:
            raise NoTickersSucceeded(f'none of {len(outcomes)} tickers completed')
        return summary
