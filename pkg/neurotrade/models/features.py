"""Feature rows, labels and training samples."""

from dataclasses import dataclass
from datetime import date
from enum import IntEnum
from typing import Tuple

import numpy as np

FEATURE_NAMES: Tuple[str, ...] = ('close', 'rsi', 'williams_r', 'macd')
FEATURE_DIM = len(FEATURE_NAMES)


class Label(IntEnum):
    HOLD = 0
    BUY = 1
    SELL = 2


CLASS_COUNT = len(Label)


@dataclass(frozen=True)
class FeatureRow:
    date: date
    close: float
    rsi: float
    williams_r: float
    macd: float

    @property
    def vector(self) -> Tuple[float, float, float, float]:
        return (self.close, self.rsi, self.williams_r, self.macd)


@dataclass(frozen=True)
class LabeledRow:
    """A raw (not yet normalized) feature row with its target label."""
    row: FeatureRow
    label: Label

    @property
    def date(self) -> date:
        return self.row.date

    @property
    def vector(self) -> Tuple[float, float, float, float]:
        return self.row.vector

    @property
    def raw_close(self) -> float:
        return self.row.close


@dataclass(frozen=True)
class LabeledSample:
    date: date
    features: Tuple[float, float, float, float]
    label: Label
    raw_close: float

    def __post_init__(self):
        if len(self.features) != FEATURE_DIM:
            raise ValueError(f'feature vector must have {FEATURE_DIM} entries, got {len(self.features)}')

    @property
    def vector(self) -> Tuple[float, float, float, float]:
        return self.features


@dataclass(frozen=True)
class Normalizer:
    """Per-feature min-max scaling fitted on training rows only."""
    mins: Tuple[float, ...]
    maxs: Tuple[float, ...]
    names: Tuple[str, ...] = FEATURE_NAMES

    def transform(self, matrix: np.ndarray) -> np.ndarray:
        lo = np.asarray(self.mins, dtype=float)
        hi = np.asarray(self.maxs, dtype=float)
        return (np.asarray(matrix, dtype=float) - lo) / (hi - lo)

    def inverse_transform(self, matrix: np.ndarray) -> np.ndarray:
        lo = np.asarray(self.mins, dtype=float)
        hi = np.asarray(self.maxs, dtype=float)
        return np.asarray(matrix, dtype=float) * (hi - lo) + lo
