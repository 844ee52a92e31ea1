import csv
import io

from neurotrade.models.network import TrainingTrace
from neurotrade.repositories.artifact_repo_base import MODEL, TRAINING_TRACE
from neurotrade.services.model_handler import trace_rows


class ArtifactRepositoryModelMixin:
    def save_model(self, symbol: str, data: bytes):
        return self._write_bytes(self.path(symbol, MODEL), data)

    def load_model_bytes(self, symbol: str) -> bytes:
        return self._read_bytes(self.path(symbol, MODEL), 'train')

    def save_trace(self, symbol: str, trace: TrainingTrace):
        out = io.StringIO()
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow(['epoch', 'loss', 'accuracy'])
        for epoch, loss, acc in trace_rows(trace):
            writer.writerow([epoch, repr(loss), repr(acc)])
        return self._write_text(self.path(symbol, TRAINING_TRACE), out.getvalue())
