import logging
from datetime import timedelta
from pathlib import Path
from typing import Iterable, Optional

from neurotrade.core.errors import InsufficientHistory, MissingUpstreamArtifact
from neurotrade.models.market import TickerProvenance
from neurotrade.repositories.artifact_repository import ArtifactRepository
from neurotrade.repositories.artifact_repo_base import ADJUSTED_BARS, PROVENANCE
from neurotrade.schemas.schemas import RunConfig

logger = logging.getLogger(__name__)

STAGES = ('ingest', 'prepare', 'train', 'backtest', 'evaluate')

# weekends and exchange holidays around the split boundaries
COVERAGE_SLACK = timedelta(days=7)


class PipelineServiceBase:
    def __init__(
        self,
        run_config: RunConfig,
        repo: Optional[ArtifactRepository] = None,
        resume: bool = False,
        labels_path: Optional[str] = None,
    ):
        self.run_config = run_config
        self.repo = repo or ArtifactRepository(run_config.output_dir)
        self.resume = resume
        self.labels_path = labels_path

    def source_path(self, symbol: str) -> Path:
        return Path(self.run_config.data_dir) / f'{symbol}.csv'

    def _skip_if_current(self, symbol: str, stage: str, outputs: Iterable[str], inputs: Iterable[Path]) -> bool:
        if not self.resume:
            return False
        current = self.repo.is_current([self.repo.path(symbol, name) for name in outputs], inputs)
        if current:
            logger.info('%s: %s is up to date, skipping', symbol, stage)
        return current

    def check_coverage(self, symbol: str, first, last) -> None:
        split = self.run_config.split
        if first is None or first > split.train_start + COVERAGE_SLACK or last < split.test_end - COVERAGE_SLACK:
            raise InsufficientHistory(first, last, split.train_start, split.test_end).tag(symbol)

    def recorded_provenance(self, symbol: str) -> Optional[TickerProvenance]:
        if not self.repo.exists(symbol, PROVENANCE):
            return None
        return self.repo.load_provenance(symbol)

    def _explain_missing(self, symbol: str, error: MissingUpstreamArtifact) -> None:
        """Turn a missing artifact into InsufficientHistory when an earlier stage skipped the ticker."""
        if self.repo.exists(symbol, ADJUSTED_BARS):
            bars = self.repo.load_adjusted_bars(symbol)
            self.check_coverage(symbol, bars[0].date if bars else None, bars[-1].date if bars else None)
        raise error.tag(symbol)

    def run_ticker(self, symbol: str, stages: Iterable[str] = STAGES):
        """Run the requested stages for one ticker; returns the evaluate stage's stats, if run."""
        stats = None
        for stage in stages:
            logger.info('%s: %s', symbol, stage)
            try:
                result = getattr(self, stage)(symbol)
            except MissingUpstreamArtifact as e:
                self._explain_missing(symbol, e)
            if stage == 'evaluate':
                stats = result
        return stats
