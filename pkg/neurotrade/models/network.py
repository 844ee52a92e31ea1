"""Multilayer perceptron parameters and training trace."""

from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from neurotrade.schemas.schemas import MlpConfig

HIDDEN_ACTIVATION = 'sigmoid'
OUTPUT_ACTIVATION = 'softmax'


@dataclass(frozen=True, eq=False)
class MlpModel:
    """Weights are (fan_in x fan_out); one bias vector per layer transition."""
    weights: Tuple[np.ndarray, ...]
    biases: Tuple[np.ndarray, ...]
    config: MlpConfig
    hidden_activation: str = HIDDEN_ACTIVATION
    output_activation: str = OUTPUT_ACTIVATION

    @property
    def layers(self) -> List[int]:
        return [self.weights[0].shape[0]] + [w.shape[1] for w in self.weights]

    def copy(self) -> 'MlpModel':
        return MlpModel(
            weights=tuple(w.copy() for w in self.weights),
            biases=tuple(b.copy() for b in self.biases),
            config=self.config,
            hidden_activation=self.hidden_activation,
            output_activation=self.output_activation,
        )


@dataclass
class TrainingTrace:
    loss: List[float] = field(default_factory=list)
    accuracy: List[float] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.loss)

    def append(self, loss: float, accuracy: float) -> None:
        self.loss.append(float(loss))
        self.accuracy.append(float(accuracy))
