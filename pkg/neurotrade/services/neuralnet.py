"""Feedforward classifier: sigmoid hidden layers, softmax output, cross-entropy
loss, mini-batch gradient descent.

The model is immutable; `train` works on private copies of the parameters and
returns a new `MlpModel`.
"""

import json
import logging
import math
from typing import List, Sequence, Tuple

import numpy as np

from neurotrade.core.errors import (
    CorruptModel,
    DimensionMismatch,
    EmptyDataset,
    InvalidTopology,
    NonFiniteLoss,
    VersionMismatch,
)
from neurotrade.models.features import CLASS_COUNT, FEATURE_DIM, Label, LabeledSample
from neurotrade.models.network import HIDDEN_ACTIVATION, OUTPUT_ACTIVATION, MlpModel, TrainingTrace
from neurotrade.schemas.schemas import MlpConfig

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1


def _rng(seed: int, stream: int) -> np.random.Generator:
    return np.random.default_rng([seed % 2**64, stream])


def _check_topology(layers: Sequence[int]) -> None:
    if len(layers) < 3:
        raise InvalidTopology(f'at least one hidden layer is required, got layers={list(layers)}')
    if layers[0] != FEATURE_DIM:
        raise InvalidTopology(f'input layer must have {FEATURE_DIM} nodes, got {layers[0]}')
    if layers[-1] != CLASS_COUNT:
        raise InvalidTopology(f'output layer must have {CLASS_COUNT} nodes, got {layers[-1]}')


def init(cfg: MlpConfig = MlpConfig()) -> MlpModel:
    _check_topology(cfg.layers)
    rng = _rng(cfg.seed, 0)
    weights = []
    biases = []
    for fan_in, fan_out in zip(cfg.layers, cfg.layers[1:]):
        limit = math.sqrt(6.0 / (fan_in + fan_out))
        weights.append(rng.uniform(-limit, limit, size=(fan_in, fan_out)))
        biases.append(np.zeros(fan_out))
    return MlpModel(weights=tuple(weights), biases=tuple(biases), config=cfg)


def sigmoid(z: np.ndarray) -> np.ndarray:
    return np.exp(-np.logaddexp(0.0, -z))


def softmax(z: np.ndarray) -> np.ndarray:
    shifted = z - z.max(axis=-1, keepdims=True)
    e = np.exp(shifted)
    return e / e.sum(axis=-1, keepdims=True)


def _log_softmax(z: np.ndarray) -> np.ndarray:
    shifted = z - z.max(axis=-1, keepdims=True)
    return shifted - np.log(np.exp(shifted).sum(axis=-1, keepdims=True))


def _activations(weights: Sequence[np.ndarray], biases: Sequence[np.ndarray], X: np.ndarray) -> Tuple[List[np.ndarray], np.ndarray]:
    """Hidden activations (input first) and output logits."""
    acts = [X]
    a = X
    for W, b in zip(weights[:-1], biases[:-1]):
        a = sigmoid(a @ W + b)
        acts.append(a)
    return acts, a @ weights[-1] + biases[-1]


def _as_batch(model: MlpModel, X) -> np.ndarray:
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X[None, :]
    if X.shape[-1] != model.weights[0].shape[0]:
        raise DimensionMismatch(model.weights[0].shape[0], X.shape[-1])
    return X


def forward_batch(model: MlpModel, X) -> np.ndarray:
    _, logits = _activations(model.weights, model.biases, _as_batch(model, X))
    return softmax(logits)


def forward(model: MlpModel, features: Sequence[float]) -> np.ndarray:
    return forward_batch(model, features)[0]


def label_from_probabilities(probs: Sequence[float]) -> Label:
    # argmax returns the first maximum, i.e. the lowest class code among ties
    return Label(int(np.argmax(np.asarray(probs))))


def predict(model: MlpModel, features: Sequence[float]) -> Label:
    return label_from_probabilities(forward(model, features))


def predict_batch(model: MlpModel, X) -> np.ndarray:
    return np.argmax(forward_batch(model, X), axis=1)


def _loss(weights, biases, X: np.ndarray, y: np.ndarray) -> float:
    _, logits = _activations(weights, biases, X)
    return float(-_log_softmax(logits)[np.arange(len(y)), y].mean())


def _loss_and_grads(weights, biases, X: np.ndarray, y: np.ndarray) -> Tuple[float, List[np.ndarray], List[np.ndarray]]:
    acts, logits = _activations(weights, biases, X)
    n = X.shape[0]
    log_p = _log_softmax(logits)
    loss = float(-log_p[np.arange(n), y].mean())

    delta = np.exp(log_p)
    delta[np.arange(n), y] -= 1.0
    delta /= n

    grad_w: List[np.ndarray] = [None] * len(weights)
    grad_b: List[np.ndarray] = [None] * len(biases)
    for layer in range(len(weights) - 1, -1, -1):
        grad_w[layer] = acts[layer].T @ delta
        grad_b[layer] = delta.sum(axis=0)
        if layer > 0:
            a = acts[layer]
            delta = (delta @ weights[layer].T) * a * (1.0 - a)
    return loss, grad_w, grad_b


def loss_gradients(model: MlpModel, X, y) -> Tuple[float, List[np.ndarray], List[np.ndarray]]:
    """Mean cross-entropy and its gradients with respect to every weight and bias."""
    X = _as_batch(model, X)
    return _loss_and_grads(model.weights, model.biases, X, np.asarray(y, dtype=int).reshape(-1))


def _training_arrays(samples: Sequence[LabeledSample]) -> Tuple[np.ndarray, np.ndarray]:
    X = np.array([s.features for s in samples], dtype=float).reshape(-1, FEATURE_DIM)
    y = np.array([int(s.label) for s in samples], dtype=int)
    # canonical order: the result must not depend on how the caller ordered the data
    order = np.lexsort((y,) + tuple(X[:, j] for j in range(X.shape[1] - 1, -1, -1)))
    return X[order], y[order]


def train(model: MlpModel, samples: Sequence[LabeledSample]) -> Tuple[MlpModel, TrainingTrace]:
    if not samples:
        raise EmptyDataset('training set')
    cfg = model.config
    X, y = _training_arrays(samples)
    if X.shape[1] != model.weights[0].shape[0]:
        raise DimensionMismatch(model.weights[0].shape[0], X.shape[1])

    weights = [w.copy() for w in model.weights]
    biases = [b.copy() for b in model.biases]
    rng = _rng(cfg.seed, 1)
    trace = TrainingTrace()
    n = X.shape[0]

    for epoch in range(1, cfg.epochs + 1):
        order = rng.permutation(n)
        for start in range(0, n, cfg.batch_size):
            idx = order[start:start + cfg.batch_size]
            _, grad_w, grad_b = _loss_and_grads(weights, biases, X[idx], y[idx])
            for layer in range(len(weights)):
                weights[layer] -= cfg.learning_rate * grad_w[layer]
                biases[layer] -= cfg.learning_rate * grad_b[layer]

        _, logits = _activations(weights, biases, X)
        epoch_loss = float(-_log_softmax(logits)[np.arange(n), y].mean())
        if not math.isfinite(epoch_loss) or not all(np.isfinite(w).all() for w in weights):
            raise NonFiniteLoss(epoch, trace)
        epoch_acc = float((np.argmax(logits, axis=1) == y).mean())
        trace.append(epoch_loss, epoch_acc)
        logger.debug('epoch %d/%d loss=%.6f acc=%.4f', epoch, cfg.epochs, epoch_loss, epoch_acc)

    logger.info('trained %s on %d samples: loss=%.4f acc=%.4f', cfg.layers, n, trace.loss[-1], trace.accuracy[-1])
    trained = MlpModel(weights=tuple(weights), biases=tuple(biases), config=cfg)
    return trained, trace


def accuracy(model: MlpModel, samples: Sequence[LabeledSample]) -> float:
    if not samples:
        raise EmptyDataset('evaluation set')
    X = np.array([s.features for s in samples], dtype=float)
    y = np.array([int(s.label) for s in samples], dtype=int)
    return float((predict_batch(model, X) == y).mean())


def gradient_check(model: MlpModel, sample: LabeledSample, epsilon: float = 1e-5) -> float:
    """Largest relative gap between backprop and central finite differences."""
    if not 0 < epsilon <= 1e-3:
        raise ValueError('epsilon must lie in (0, 1e-3]')
    X = _as_batch(model, sample.features)
    y = np.array([int(sample.label)])
    _, grad_w, grad_b = loss_gradients(model, X, y)

    work = model.copy()
    weights, biases = list(work.weights), list(work.biases)
    worst = 0.0
    for params, grads in ((weights, grad_w), (biases, grad_b)):
        for p, g in zip(params, grads):
            for idx in np.ndindex(p.shape):
                original = p[idx]
                p[idx] = original + epsilon
                plus = _loss(weights, biases, X, y)
                p[idx] = original - epsilon
                minus = _loss(weights, biases, X, y)
                p[idx] = original
                numeric = (plus - minus) / (2.0 * epsilon)
                analytic = float(g[idx])
                scale = max(abs(analytic), abs(numeric), 1e-3)
                worst = max(worst, abs(analytic - numeric) / scale)
    return worst


def save(model: MlpModel) -> bytes:
    payload = {
        'format_version': FORMAT_VERSION,
        'layers': model.layers,
        'activation': {'hidden': model.hidden_activation, 'output': model.output_activation},
        'config': model.config.model_dump(mode='json'),
        'weights': [w.tolist() for w in model.weights],
        'biases': [b.tolist() for b in model.biases],
    }
    return json.dumps(payload, sort_keys=True, indent=1).encode('utf-8')


def load(data: bytes) -> MlpModel:
    try:
        payload = json.loads(data.decode('utf-8'))
    except (UnicodeDecodeError, ValueError) as e:
        raise CorruptModel(f'model file is not valid JSON: {e}')
    if not isinstance(payload, dict) or 'format_version' not in payload:
        raise CorruptModel('model file has no format_version')
    if payload['format_version'] != FORMAT_VERSION:
        raise VersionMismatch(payload['format_version'], FORMAT_VERSION)

    try:
        layers = [int(n) for n in payload['layers']]
        activation = payload['activation']
        if activation != {'hidden': HIDDEN_ACTIVATION, 'output': OUTPUT_ACTIVATION}:
            raise CorruptModel(f'unsupported activation spec {activation!r}')
        config = MlpConfig(**payload['config'])
        weights = tuple(np.array(w, dtype=float) for w in payload['weights'])
        biases = tuple(np.array(b, dtype=float) for b in payload['biases'])
    except (KeyError, TypeError, ValueError) as e:
        raise CorruptModel(f'model file is incomplete: {e}')

    if len(weights) != len(layers) - 1 or len(biases) != len(weights):
        raise CorruptModel('layer count does not match parameter count')
    for i, (W, b) in enumerate(zip(weights, biases)):
        if W.shape != (layers[i], layers[i + 1]) or b.shape != (layers[i + 1],):
            raise CorruptModel(f'parameter shapes of layer {i} do not match layers={layers}')
        if not (np.isfinite(W).all() and np.isfinite(b).all()):
            raise CorruptModel(f'non-finite parameters in layer {i}')
    return MlpModel(weights=weights, biases=biases, config=config)
