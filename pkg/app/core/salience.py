"""
Salience Head
=============

A one-hidden-layer network mapping a tweet's concatenated TE⊕KE vector to a
salience score in (0, 1):

    h = relu(W1 x + b1)          (inverted dropout on h while training)
    score = sigmoid(w2 . h + b2)

Trained with mini-batch Adam on binary cross-entropy (default) or squared error.
Everything is numpy and deterministic under the seed.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

import numpy as np

from app.config import DEFAULT_DROPOUT, DEFAULT_HIDDEN_DIM, DEFAULT_SEED
from app.core.embeddings import FeatureSet
from app.exceptions import DimensionMismatchError, TrainingError
from app.schemas.corpus import Corpus
from app.schemas.model import TrainConfig

logger = logging.getLogger(__name__)

PRED_CLAMP = 1e-7
PARAMETER_NAMES = ("W1", "b1", "w2", "b2")


def sigmoid(z):
    return 0.5 * (1.0 + np.tanh(0.5 * np.asarray(z, dtype=np.float64)))


class SalienceModel:
    """
    Weights of the salience head.

    Attributes:
        W1 (np.ndarray): hidden_dim x input_dim
        b1 (np.ndarray): hidden_dim
        w2 (np.ndarray): hidden_dim
        b2 (np.ndarray): 0-d array holding the output bias
        dropout_p (float): Drop probability for hidden units, training only
    """

    def __init__(self, W1: np.ndarray, b1: np.ndarray, w2: np.ndarray, b2: float,
                 dropout_p: float = DEFAULT_DROPOUT):
        if not 0 <= dropout_p < 1:
            raise ValueError(f"dropout_p must be in [0, 1), got {dropout_p}")
        self.W1 = np.array(W1, dtype=np.float64)
        self.b1 = np.array(b1, dtype=np.float64)
        self.w2 = np.array(w2, dtype=np.float64)
        self.b2 = np.array(b2, dtype=np.float64)
        self.dropout_p = float(dropout_p)
        if self.W1.ndim != 2 or self.b1.shape != (self.hidden_dim,) or self.w2.shape != (self.hidden_dim,):
            raise ValueError("inconsistent salience model shapes")

    @property
    def input_dim(self) -> int:
        return self.W1.shape[1]

    @property
    def hidden_dim(self) -> int:
        return self.W1.shape[0]

    def parameters(self) -> Dict[str, np.ndarray]:
        return {"W1": self.W1, "b1": self.b1, "w2": self.w2, "b2": self.b2}

    def copy(self) -> "SalienceModel":
        return SalienceModel(self.W1.copy(), self.b1.copy(), self.w2.copy(), self.b2.copy(), self.dropout_p)

    def is_finite(self) -> bool:
        return all(np.all(np.isfinite(value)) for value in self.parameters().values())

    def _check_input(self, X: np.ndarray):
        if X.shape[-1] != self.input_dim:
            raise DimensionMismatchError(self.input_dim, X.shape[-1], "salience input")

    def dropout_masks(self, batch_size: int, rng: np.random.Generator) -> np.ndarray:
        """Inverted-dropout masks: kept units scaled by 1/(1-p), dropped units zero."""
        keep = rng.random((batch_size, self.hidden_dim)) >= self.dropout_p
        return keep / (1.0 - self.dropout_p)

    def _forward(self, X: np.ndarray, masks: Optional[np.ndarray]) -> Tuple[np.ndarray, tuple]:
        Z1 = X @ self.W1.T + self.b1
        H = np.maximum(Z1, 0.0)
        Hd = H * masks if masks is not None else H
        z2 = Hd @ self.w2 + self.b2
        return sigmoid(z2), (Z1, Hd)

    def predict(self, X: np.ndarray) -> np.ndarray:
        """Inference scores for a batch; dropout off."""
        X = np.atleast_2d(np.asarray(X, dtype=np.float64))
        self._check_input(X)
        scores, _ = self._forward(X, None)
        return scores

    def loss_and_gradients(self, X: np.ndarray, y: np.ndarray, kind: str = "bce",
                           masks: Optional[np.ndarray] = None) -> Tuple[float, Dict[str, np.ndarray]]:
        """
        Mean batch loss and its gradients with respect to every parameter.

        Parameters:
            X (np.ndarray): batch x input_dim
            y (np.ndarray): Targets in {0, 1}
            kind (str): "bce" or "mse"
            masks (Optional[np.ndarray]): Dropout masks from dropout_masks; None for the inference path
        """
        X = np.atleast_2d(np.asarray(X, dtype=np.float64))
        y = np.asarray(y, dtype=np.float64)
        self._check_input(X)
        batch = X.shape[0]

        p, (Z1, Hd) = self._forward(X, masks)
        batch_loss = float(np.mean(loss(p, y, kind)))

        if kind == "bce":
            inside = (p > PRED_CLAMP) & (p < 1.0 - PRED_CLAMP)
            dz2 = (p - y) * inside / batch
        else:
            dz2 = 2.0 * (p - y) * p * (1.0 - p) / batch

        dH = np.outer(dz2, self.w2)
        if masks is not None:
            dH = dH * masks
        dZ1 = dH * (Z1 > 0)
        grads = {
            "W1": dZ1.T @ X,
            "b1": dZ1.sum(axis=0),
            "w2": Hd.T @ dz2,
            "b2": np.array(dz2.sum()),
        }
        return batch_loss, grads


def init_model(input_dim: int, hidden_dim: int = DEFAULT_HIDDEN_DIM, seed: int = DEFAULT_SEED,
               dropout_p: float = DEFAULT_DROPOUT) -> SalienceModel:
    """
    Fresh salience head.

    Weights are drawn from U(-1/sqrt(fan_in), 1/sqrt(fan_in)); biases start at zero.
    """
    if input_dim < 1 or hidden_dim < 1:
        raise ValueError(f"dims must be >= 1, got input_dim={input_dim} hidden_dim={hidden_dim}")
    rng = np.random.default_rng(seed)
    bound1 = 1.0 / np.sqrt(input_dim)
    bound2 = 1.0 / np.sqrt(hidden_dim)
    W1 = rng.uniform(-bound1, bound1, size=(hidden_dim, input_dim))
    w2 = rng.uniform(-bound2, bound2, size=hidden_dim)
    return SalienceModel(W1, np.zeros(hidden_dim), w2, 0.0, dropout_p)


def forward(model: SalienceModel, x: np.ndarray, training: bool = False,
            rng: Optional[np.random.Generator] = None) -> float:
    """
    Salience score of one input vector.

    During training each hidden unit is dropped with probability dropout_p and the
    survivors are scaled by 1/(1-dropout_p); the inference path is deterministic.
    """
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1:
        raise ValueError("forward expects a single vector")
    model._check_input(x)
    masks = None
    if training:
        if rng is None:
            rng = np.random.default_rng()
        masks = model.dropout_masks(1, rng)
    scores, _ = model._forward(x[np.newaxis, :], masks)
    return float(scores[0])


def loss(pred, target, kind: str = "bce"):
    """
    Per-example loss; works on scalars and arrays.

    bce clamps predictions to [1e-7, 1 - 1e-7] before the logarithm.
    """
    pred = np.asarray(pred, dtype=np.float64)
    target = np.asarray(target, dtype=np.float64)
    if kind == "bce":
        clamped = np.clip(pred, PRED_CLAMP, 1.0 - PRED_CLAMP)
        value = -(target * np.log(clamped) + (1.0 - target) * np.log(1.0 - clamped))
    elif kind == "mse":
        value = (pred - target) ** 2
    else:
        raise ValueError(f"unknown loss '{kind}'")
    return float(value) if value.ndim == 0 else value


class Adam:
    """
    Adam optimizer over a dict of numpy parameters, updated in place.

        m = b1 m + (1 - b1) g
        v = b2 v + (1 - b2) g^2
        p -= lr * (m / (1 - b1^t)) / (sqrt(v / (1 - b2^t)) + eps)
    """

    def __init__(self, params: Dict[str, np.ndarray], lr: float, beta1: float, beta2: float, eps: float):
        self.params = params
        self.lr = lr
        self.beta1 = beta1
        self.beta2 = beta2
        self.eps = eps
        self.t = 0
        self.m = {name: np.zeros_like(value) for name, value in params.items()}
        self.v = {name: np.zeros_like(value) for name, value in params.items()}

    def step(self, grads: Mapping[str, np.ndarray]):
        self.t += 1
        correction1 = 1.0 - self.beta1 ** self.t
        correction2 = 1.0 - self.beta2 ** self.t
        for name, param in self.params.items():
            g = grads[name]
            self.m[name] = self.beta1 * self.m[name] + (1.0 - self.beta1) * g
            self.v[name] = self.beta2 * self.v[name] + (1.0 - self.beta2) * g * g
            m_hat = self.m[name] / correction1
            v_hat = self.v[name] / correction2
            param -= self.lr * m_hat / (np.sqrt(v_hat) + self.eps)


@dataclass
class TrainResult:
    model: SalienceModel
    epoch_losses: List[float] = field(default_factory=list)
    batch_losses: List[List[float]] = field(default_factory=list)


def fit(model: SalienceModel, X: np.ndarray, y: np.ndarray, config: TrainConfig = TrainConfig()) -> TrainResult:
    """
    Mini-batch Adam over a seeded shuffle of (X, y).

    Returns:
        TrainResult: A trained copy of the model (the input is not modified) and the
                     mean batch loss per epoch

    Raises:
        TrainingError: If the loss or the weights become non-finite
    """
    X = np.atleast_2d(np.asarray(X, dtype=np.float64))
    y = np.asarray(y, dtype=np.float64)
    if X.shape[0] != y.shape[0]:
        raise TrainingError(f"{X.shape[0]} input row(s) but {y.shape[0]} target(s)")
    model._check_input(X)

    trained = model.copy()
    result = TrainResult(model=trained)
    if config.epochs == 0 or X.shape[0] == 0:
        logger.info("Nothing to train (zero epochs or no examples)")
        return result

    rng = np.random.default_rng(config.seed)
    optimizer = Adam(trained.parameters(), config.learning_rate, config.beta1, config.beta2, config.eps)
    n = X.shape[0]

    for epoch in range(1, config.epochs + 1):
        order = rng.permutation(n)
        losses = []
        for batch_no, start in enumerate(range(0, n, config.batch_size), start=1):
            index = order[start:start + config.batch_size]
            masks = trained.dropout_masks(len(index), rng)
            batch_loss, grads = trained.loss_and_gradients(X[index], y[index], config.loss, masks)
            if not np.isfinite(batch_loss):
                logger.error(f"Non-finite loss at epoch {epoch}, batch {batch_no}")
                raise TrainingError(f"loss became {batch_loss} at epoch {epoch}, batch {batch_no}; "
                                    f"try a lower learning rate")
            optimizer.step(grads)
            losses.append(batch_loss)

        if not trained.is_finite():
            raise TrainingError(f"weights became non-finite during epoch {epoch}")
        result.batch_losses.append(losses)
        result.epoch_losses.append(float(np.mean(losses)))
        logger.info(f"Epoch {epoch}/{config.epochs}: mean {config.loss} loss {result.epoch_losses[-1]:.6f} "
                    f"over {len(losses)} batch(es)")

    return result


def training_matrix(corpus: Corpus, features: FeatureSet) -> Tuple[np.ndarray, np.ndarray]:
    """
    Inputs and targets for every tweet of a labeled corpus.

    Raises:
        TrainingError: If a tweet has no label
    """
    for tweet in corpus.tweets:
        if tweet.label is None:
            raise TrainingError(f"tweet '{tweet.id}' is unlabeled; derive labels from a gold summary first")
    X = features.matrix(corpus.ids)
    y = np.array([tweet.label for tweet in corpus.tweets], dtype=np.float64)
    return X, y


def train(model: SalienceModel, corpus: Corpus, features: FeatureSet,
          config: TrainConfig = TrainConfig()) -> TrainResult:
    """Train on every tweet of a labeled corpus. See fit."""
    X, y = training_matrix(corpus, features)
    logger.info(f"Training salience head on {len(y)} tweet(s), {int(y.sum())} positive, "
                f"input_dim={model.input_dim}, hidden_dim={model.hidden_dim}")
    return fit(model, X, y, config)


def score_corpus(model: SalienceModel, corpus: Corpus, features: FeatureSet) -> Dict[str, float]:
    """
    Inference salience for every tweet, keyed by id in corpus order.

    Raises:
        EmbeddingMissError: If a tweet has no features
        DimensionMismatchError: If the features do not fit the model
    """
    if not corpus.tweets:
        return {}
    scores = model.predict(features.matrix(corpus.ids))
    return {tweet_id: float(score) for tweet_id, score in zip(corpus.ids, scores)}


def accuracy(model: SalienceModel, X: np.ndarray, y: np.ndarray, threshold: float = 0.5) -> float:
    predictions = model.predict(X) >= threshold
    return float(np.mean(predictions == (np.asarray(y) >= 0.5)))
