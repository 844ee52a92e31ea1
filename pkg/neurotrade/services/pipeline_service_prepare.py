import logging

from neurotrade.core.errors import NeuroTradeError
from neurotrade.repositories.artifact_repo_base import ADJUSTED_BARS, FEATURES, NORMALIZER, TEST_SET, TRAIN_SET
from neurotrade.services.dataset import (
    apply_normalizer,
    attach_labels,
    class_counts,
    fit_normalizer,
    label_extrema,
    resample_minority,
    split_by_date,
)
from neurotrade.services.indicators import compute_feature_rows

logger = logging.getLogger(__name__)


class PipelineServicePrepareMixin:
    def prepare(self, symbol: str) -> None:
        outputs = [FEATURES, TRAIN_SET, TEST_SET, NORMALIZER]
        if self._skip_if_current(symbol, 'prepare', outputs, [self.repo.path(symbol, ADJUSTED_BARS)]):
            return

        cfg = self.run_config
        bars = self.repo.load_adjusted_bars(symbol)
        self.check_coverage(symbol, bars[0].date if bars else None, bars[-1].date if bars else None)

        try:
            rows = compute_feature_rows(bars, cfg.indicator)
            labeled = attach_labels(rows, label_extrema(rows, cfg.labeler))
            train_rows, test_rows = split_by_date(labeled, cfg.split)
            normalizer = fit_normalizer(train_rows)
            train = resample_minority(apply_normalizer(normalizer, train_rows), cfg.mlp.seed)
            test = apply_normalizer(normalizer, test_rows)
        except NeuroTradeError as e:
            raise e.tag(symbol)

        counts = class_counts(train_rows)
        logger.info(
            '%s: %d feature rows, train %d (resampled %d, hold/buy/sell %s), test %d',
            symbol, len(rows), len(train_rows), len(train), '/'.join(str(c) for c in counts.values()), len(test),
        )
        self.repo.save_features(symbol, rows)
        self.repo.save_dataset(symbol, 'train', train)
        self.repo.save_dataset(symbol, 'test', test)
        self.repo.save_normalizer(symbol, normalizer)
