import logging
from typing import List

from neurotrade.core.errors import MissingUpstreamArtifact
from neurotrade.models.market import AdjustedBar
from neurotrade.repositories.artifact_repo_base import ADJUSTED_BARS, PROVENANCE
from neurotrade.services.market_data import read_ticker

logger = logging.getLogger(__name__)


class PipelineServiceIngestMixin:
    def ingest(self, symbol: str) -> List[AdjustedBar]:
        source = self.source_path(symbol)
        if not source.is_file():
            raise MissingUpstreamArtifact(source).tag(symbol)
        if self._skip_if_current(symbol, 'ingest', [ADJUSTED_BARS, PROVENANCE], [source]):
            return self.repo.load_adjusted_bars(symbol)

        bars, prov = read_ticker(source, symbol)
        self.repo.save_adjusted_bars(symbol, bars)
        self.repo.save_provenance(symbol, prov)
        return bars
