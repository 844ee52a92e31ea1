"""Exception hierarchy for neurotrade.

Every domain error derives from `NeuroTradeError`. The optional `ticker`
attribute is filled in by the layer that knows which symbol was being processed.
"""

from typing import Any, Optional


class NeuroTradeError(Exception):
    def __init__(self, message: str = '', *, ticker: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.ticker = ticker

    def tag(self, ticker: str) -> 'NeuroTradeError':
        self.ticker = ticker
        return self

    def __str__(self) -> str:
        if self.ticker:
            return f'[{self.ticker}] {self.message}'
        return self.message


# Shared
class SeriesTooShort(NeuroTradeError):
    def __init__(self, needed: int, got: int, what: str = 'series'):
        super().__init__(f'{what} too short: need at least {needed} points, got {got}')
        self.needed = needed
        self.got = got


class LengthMismatch(NeuroTradeError):
    def __init__(self, left: int, right: int):
        super().__init__(f'length mismatch: {left} != {right}')
        self.left = left
        self.right = right


class NonPositivePrice(NeuroTradeError):
    def __init__(self, line: Optional[int] = None, value: Any = None, index: Optional[int] = None):
        where = f'line {line}' if line is not None else f'index {index}'
        super().__init__(f'non-positive price at {where}: {value!r}')
        self.line = line
        self.index = index
        self.value = value


class EmptyDataset(NeuroTradeError):
    def __init__(self, what: str = 'dataset'):
        super().__init__(f'{what} is empty')


# market_data
class MarketDataError(NeuroTradeError):
    pass


class MalformedHeader(MarketDataError):
    def __init__(self, found: str = ''):
        super().__init__(f'malformed header: {found!r}')
        self.found = found


class MalformedRow(MarketDataError):
    def __init__(self, line: int, reason: str = ''):
        super().__init__(f'malformed row at line {line}: {reason}')
        self.line = line
        self.reason = reason


class DuplicateDate(MarketDataError):
    def __init__(self, date):
        super().__init__(f'duplicate date {date}')
        self.date = date


class ZeroAdjustedClose(MarketDataError):
    def __init__(self, date):
        super().__init__(f'adjusted close is not positive on {date}')
        self.date = date


# indicators
class IndicatorError(NeuroTradeError):
    pass


class EmptySeries(IndicatorError):
    def __init__(self):
        super().__init__('empty price series')


# dataset
class DatasetError(NeuroTradeError):
    pass


class EmptySplit(DatasetError):
    def __init__(self, side: str):
        super().__init__(f'{side} split is empty')
        self.side = side


class ConstantFeature(DatasetError):
    def __init__(self, name: str):
        super().__init__(f'feature {name!r} is constant over the training data')
        self.name = name


class MissingClass(DatasetError):
    def __init__(self, label):
        super().__init__(f'no training samples labeled {getattr(label, "name", label)}')
        self.label = label


# neuralnet
class ModelError(NeuroTradeError):
    pass


class InvalidTopology(ModelError):
    pass


class DimensionMismatch(ModelError):
    def __init__(self, expected: int, got: int):
        super().__init__(f'expected {expected} features, got {got}')
        self.expected = expected
        self.got = got


class NonFiniteLoss(ModelError):
    def __init__(self, epoch: int, trace=None):
        super().__init__(f'training diverged at epoch {epoch}: loss is not finite')
        self.epoch = epoch
        self.trace = trace


class CorruptModel(ModelError):
    pass


class VersionMismatch(ModelError):
    def __init__(self, found, supported):
        super().__init__(f'model format version {found!r} is not supported (expected {supported})')
        self.found = found
        self.supported = supported


# backtest
class BacktestError(NeuroTradeError):
    pass


# metrics
class MetricsError(NeuroTradeError):
    pass


class SpanTooShort(MetricsError):
    def __init__(self, detail: str = ''):
        super().__init__(f'equity path too short to annualize {detail}'.strip())


# pipeline
class PipelineError(NeuroTradeError):
    pass


class ConfigInvalid(PipelineError):
    pass


class NoTickersSucceeded(PipelineError):
    pass


class MissingUpstreamArtifact(PipelineError):
    def __init__(self, path, stage: str = ''):
        super().__init__(f'missing upstream artifact {path} (run `{stage}` first)' if stage else f'missing upstream artifact {path}')
        self.path = path
        self.stage = stage


class StaleArtifact(PipelineError):
    def __init__(self, artifact, newer_input):
        super().__init__(f'artifact {artifact} is older than its input {newer_input}')
        self.artifact = artifact
        self.newer_input = newer_input


class InsufficientHistory(PipelineError):
    """The price file does not reach into both split ranges; the ticker is skipped, not failed."""
    def __init__(self, first, last, needed_from, needed_to):
        super().__init__(f'price history {first}..{last} does not cover {needed_from}..{needed_to}')
        self.first = first
        self.last = last
