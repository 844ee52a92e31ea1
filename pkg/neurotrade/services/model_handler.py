"""Model lifecycle for the signal classifier.

Wraps `neurotrade.services.neuralnet` with the fit / predict / save / load
calls the pipeline needs. This module is framework-agnostic.
"""

import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from neurotrade.core.errors import ModelError
from neurotrade.models.features import Label, LabeledSample
from neurotrade.models.network import MlpModel, TrainingTrace
from neurotrade.schemas.schemas import MlpConfig
from neurotrade.services import neuralnet

logger = logging.getLogger(__name__)


class ModelHandler:
    def __init__(self, config: Optional[MlpConfig] = None):
        self.config = config or MlpConfig()
        self.model: Optional[MlpModel] = None
        self.trace: Optional[TrainingTrace] = None

    def fit(self, samples: Sequence[LabeledSample]) -> TrainingTrace:
        initial = neuralnet.init(self.config)
        self.model, self.trace = neuralnet.train(initial, samples)
        return self.trace

    def _require_model(self) -> MlpModel:
        if self.model is None:
            raise ModelError('no model loaded: train or load one first')
        return self.model

    def predict(self, samples: Sequence[LabeledSample]) -> List[Label]:
        if not samples:
            return []
        X = np.array([s.features for s in samples], dtype=float)
        return [Label(int(c)) for c in neuralnet.predict_batch(self._require_model(), X)]

    def accuracy(self, samples: Sequence[LabeledSample]) -> float:
        return neuralnet.accuracy(self._require_model(), samples)

    def dumps(self) -> bytes:
        return neuralnet.save(self._require_model())

    def loads(self, data: bytes) -> MlpModel:
        self.model = neuralnet.load(data)
        if self.model.config != self.config:
            logger.debug('loaded model config %s differs from handler config %s', self.model.config, self.config)
        return self.model


def trace_rows(trace: TrainingTrace) -> List[Tuple[int, float, float]]:
    return [(epoch, loss, acc) for epoch, (loss, acc) in enumerate(zip(trace.loss, trace.accuracy), start=1)]
