import logging
from pathlib import Path
from typing import Iterable, Union

from neurotrade.core.errors import MissingUpstreamArtifact, StaleArtifact

logger = logging.getLogger(__name__)

# per-ticker artifacts, in stage order
ADJUSTED_BARS = 'adjusted_bars.csv'
PROVENANCE = 'provenance.json'
FEATURES = 'features.csv'
TRAIN_SET = 'train.csv'
TEST_SET = 'test.csv'
NORMALIZER = 'normalizer.json'
MODEL = 'model.json'
TRAINING_TRACE = 'training_trace.csv'
PREDICTIONS = 'predictions.csv'
TRADES = 'trades.csv'
TRADE_LOG = 'trades.log'
METRICS = 'metrics.csv'
CLASSIFICATION = 'classification.csv'

# run-level artifacts
REPORT_CSV = 'report.csv'
REPORT_TXT = 'report.txt'
SUMMARY = 'summary.csv'


class ArtifactRepositoryBase:
    def __init__(self, root: Union[str, Path] = 'out'):
        self.root = Path(root)

    def ticker_dir(self, symbol: str) -> Path:
        return self.root / symbol

    def path(self, symbol: str, name: str) -> Path:
        return self.ticker_dir(symbol) / name

    def exists(self, symbol: str, name: str) -> bool:
        return self.path(symbol, name).is_file()

    def _write_text(self, target: Path, text: str) -> Path:
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, 'w', encoding='utf-8', newline='') as fh:
            fh.write(text)
        logger.debug('wrote %s', target)
        return target

    def _write_bytes(self, target: Path, data: bytes) -> Path:
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_bytes(data)
        logger.debug('wrote %s', target)
        return target

    def _read_text(self, source: Path, stage: str = '') -> str:
        try:
            with open(source, encoding='utf-8', newline='') as fh:
                return fh.read()
        except FileNotFoundError:
            raise MissingUpstreamArtifact(source, stage)

    def _read_bytes(self, source: Path, stage: str = '') -> bytes:
        try:
            return source.read_bytes()
        except FileNotFoundError:
            raise MissingUpstreamArtifact(source, stage)

    def is_current(self, outputs: Iterable[Path], inputs: Iterable[Path]) -> bool:
        """True when every output exists and none is older than an input.

        Raises StaleArtifact when the outputs exist but an input changed after them.
        """
        outputs = list(outputs)
        if not outputs or not all(p.is_file() for p in outputs):
            return False
        oldest = min(outputs, key=lambda p: p.stat().st_mtime_ns)
        for source in inputs:
            if source.is_file() and source.stat().st_mtime_ns > oldest.stat().st_mtime_ns:
                raise StaleArtifact(oldest, source)
        return True
