import logging

from neurotrade.core.errors import NeuroTradeError
from neurotrade.repositories.artifact_repo_base import MODEL, TRAIN_SET, TRAINING_TRACE
from neurotrade.services.model_handler import ModelHandler

logger = logging.getLogger(__name__)


class PipelineServiceTrainingMixin:
    def train(self, symbol: str) -> None:
        if self._skip_if_current(symbol, 'train', [MODEL, TRAINING_TRACE], [self.repo.path(symbol, TRAIN_SET)]):
            return

        samples = self.repo.load_dataset(symbol, 'train')
        handler = ModelHandler(self.run_config.mlp)
        try:
            trace = handler.fit(samples)
        except NeuroTradeError as e:
            raise e.tag(symbol)
        self.repo.save_model(symbol, handler.dumps())
        self.repo.save_trace(symbol, trace)
