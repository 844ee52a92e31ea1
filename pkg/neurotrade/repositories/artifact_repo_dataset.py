import json
from typing import List, Sequence

from neurotrade.models.features import FeatureRow, LabeledSample, Normalizer
from neurotrade.repositories.artifact_repo_base import FEATURES, NORMALIZER, TEST_SET, TRAIN_SET
from neurotrade.services.dataset import samples_from_csv, samples_to_csv
from neurotrade.services.indicators import feature_rows_to_csv

_SPLITS = {'train': TRAIN_SET, 'test': TEST_SET}


class ArtifactRepositoryDatasetMixin:
    def save_features(self, symbol: str, rows: Sequence[FeatureRow]):
        return self._write_text(self.path(symbol, FEATURES), feature_rows_to_csv(rows))

    def save_dataset(self, symbol: str, side: str, samples: Sequence[LabeledSample]):
        return self._write_text(self.path(symbol, _SPLITS[side]), samples_to_csv(samples))

    def load_dataset(self, symbol: str, side: str) -> List[LabeledSample]:
        return samples_from_csv(self._read_text(self.path(symbol, _SPLITS[side]), 'prepare'))

    def save_normalizer(self, symbol: str, normalizer: Normalizer):
        payload = {'names': list(normalizer.names), 'mins': list(normalizer.mins), 'maxs': list(normalizer.maxs)}
        return self._write_text(self.path(symbol, NORMALIZER), json.dumps(payload, sort_keys=True, indent=1) + '\n')
