from neurotrade.models.market import OhlcvBar, AdjustedBar, TickerProvenance
from neurotrade.models.features import (
    CLASS_COUNT,
    FEATURE_DIM,
    FEATURE_NAMES,
    FeatureRow,
    Label,
    LabeledRow,
    LabeledSample,
    Normalizer,
)
from neurotrade.models.trading import ExitReason, Ledger, Trade
from neurotrade.models.evaluation import ClassScores, ConfusionMatrix, TickerOutcome, TradingStats


__all__ = [
    'OhlcvBar',
    'AdjustedBar',
    'TickerProvenance',
    'CLASS_COUNT',
    'FEATURE_DIM',
    'FEATURE_NAMES',
    'FeatureRow',
    'Label',
    'LabeledRow',
    'LabeledSample',
    'Normalizer',
    'ExitReason',
    'Ledger',
    'Trade',
    'ClassScores',
    'ConfusionMatrix',
    'TradingStats',
    'TickerOutcome',
]
