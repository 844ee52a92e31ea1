"""Training data preparation: extrema labeling, date split, min-max scaling and
minority-class resampling."""

import csv
import io
from collections import Counter
from datetime import date
from typing import Dict, Iterable, List, Sequence, Tuple, TypeVar

import numpy as np

from neurotrade.core.errors import ConstantFeature, EmptySplit, MissingClass, SeriesTooShort
from neurotrade.models.features import (
    FEATURE_DIM,
    FEATURE_NAMES,
    FeatureRow,
    Label,
    LabeledRow,
    LabeledSample,
    Normalizer,
)
from neurotrade.schemas.schemas import LabelerConfig, SplitSpec

DATASET_CSV_HEADER = ('Date', 'f1', 'f2', 'f3', 'f4', 'Label', 'RawClose')

T = TypeVar('T')


def label_closes(closes: Sequence[float], window: int = 15) -> np.ndarray:
    """Label codes for a close series: strict unique window maximum -> Sell,
    strict unique minimum -> Buy, everything else (incl. edges) -> Hold."""
    values = np.asarray(closes, dtype=float)
    if values.size < window:
        raise SeriesTooShort(window, values.size, 'labeling input')

    half = window // 2
    labels = np.full(values.size, int(Label.HOLD), dtype=int)
    windows = np.lib.stride_tricks.sliding_window_view(values, window)
    centers = values[half:values.size - half]

    is_max = (centers == windows.max(axis=1)) & ((windows == centers[:, None]).sum(axis=1) == 1)
    is_min = (centers == windows.min(axis=1)) & ((windows == centers[:, None]).sum(axis=1) == 1)

    interior = labels[half:values.size - half]
    interior[is_max] = int(Label.SELL)
    interior[is_min] = int(Label.BUY)
    return labels


def label_extrema(rows: Sequence[FeatureRow], cfg: LabelerConfig = LabelerConfig()) -> List[Tuple[date, Label]]:
    codes = label_closes([r.close for r in rows], cfg.window)
    return [(r.date, Label(int(c))) for r, c in zip(rows, codes)]


def attach_labels(rows: Sequence[FeatureRow], labels: Sequence[Tuple[date, Label]]) -> List[LabeledRow]:
    return [LabeledRow(row, label) for row, (_, label) in zip(rows, labels)]


def split_by_date(samples: Sequence[T], spec: SplitSpec) -> Tuple[List[T], List[T]]:
    train = [s for s in samples if spec.train_start <= s.date <= spec.train_end]
    test = [s for s in samples if spec.test_start <= s.date <= spec.test_end]
    if not train:
        raise EmptySplit('train')
    if not test:
        raise EmptySplit('test')
    return train, test


def feature_matrix(rows: Iterable) -> np.ndarray:
    return np.array([r.vector for r in rows], dtype=float).reshape(-1, FEATURE_DIM)


def fit_normalizer(train: Sequence) -> Normalizer:
    matrix = feature_matrix(train)
    if matrix.shape[0] == 0:
        raise EmptySplit('train')
    mins = matrix.min(axis=0)
    maxs = matrix.max(axis=0)
    for name, lo, hi in zip(FEATURE_NAMES, mins, maxs):
        if not hi > lo:
            raise ConstantFeature(name)
    return Normalizer(mins=tuple(float(x) for x in mins), maxs=tuple(float(x) for x in maxs))


def apply_normalizer(n: Normalizer, rows: Sequence[LabeledRow]) -> List[LabeledSample]:
    """Scale features with training statistics; out-of-range values are kept as is."""
    if not rows:
        return []
    scaled = n.transform(feature_matrix(rows))
    return [
        LabeledSample(
            date=r.date,
            features=tuple(float(x) for x in vec),
            label=r.label,
            raw_close=r.raw_close,
        )
        for r, vec in zip(rows, scaled)
    ]


def class_counts(samples: Iterable) -> Dict[Label, int]:
    counts = Counter(s.label for s in samples)
    return {label: counts.get(label, 0) for label in Label}


def resample_minority(train: Sequence[LabeledSample], seed: int) -> List[LabeledSample]:
    """Duplicate every class floor(majority / count) times, then shuffle with `seed`."""
    counts = class_counts(train)
    for label in Label:
        if counts[label] == 0:
            raise MissingClass(label)

    majority = max(counts.values())
    factors = {label: majority // counts[label] for label in Label}

    expanded: List[LabeledSample] = []
    for s in train:
        expanded.extend([s] * factors[s.label])

    order = np.random.default_rng(seed).permutation(len(expanded))
    return [expanded[i] for i in order]


def samples_to_csv(samples: Sequence[LabeledSample]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(DATASET_CSV_HEADER)
    for s in samples:
        writer.writerow([s.date.isoformat(), *(repr(x) for x in s.features), int(s.label), repr(s.raw_close)])
    return out.getvalue()


def samples_from_csv(text: str) -> List[LabeledSample]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or tuple(header) != DATASET_CSV_HEADER:
        raise ValueError(f'unexpected dataset header {header!r}')
    return [
        LabeledSample(
            date=date.fromisoformat(row[0]),
            features=tuple(float(x) for x in row[1:5]),
            label=Label(int(row[5])),
            raw_close=float(row[6]),
        )
        for row in reader if row
    ]
