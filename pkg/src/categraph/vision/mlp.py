"""Three-layer perceptron trained with sign-based resilient backpropagation.

Logistic sigmoid on the hidden and output layers, summed squared error loss,
full-batch gradients.  Each connection keeps its own step size that grows by
1.2 while the gradient sign holds and shrinks by 0.5 when it flips; steps are
clamped to [1e-6, 50].  No weight backtracking.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Sequence

import numpy as np

STEP_INITIAL = 0.1
STEP_INCREASE = 1.2
STEP_DECREASE = 0.5
STEP_MIN = 1e-6
STEP_MAX = 50.0


def _sigmoid(z: np.ndarray) -> np.ndarray:
    return 1.0 / (1.0 + np.exp(-z))


class Mlp:
    """Feed-forward network with one hidden layer and per-connection step state."""

    def __init__(self, layer_sizes: Sequence[int], seed: int = 0) -> None:
        if len(layer_sizes) != 3:
            raise ValueError("expected exactly (input, hidden, output) layer sizes")
        self.layer_sizes = tuple(int(n) for n in layer_sizes)
        self.seed = seed
        rng = np.random.default_rng(seed)
        n_in, n_hidden, n_out = self.layer_sizes
        self.w1 = rng.uniform(-0.5, 0.5, (n_hidden, n_in))
        self.b1 = rng.uniform(-0.5, 0.5, n_hidden)
        self.w2 = rng.uniform(-0.5, 0.5, (n_out, n_hidden))
        self.b2 = rng.uniform(-0.5, 0.5, n_out)
        self._params = (self.w1, self.b1, self.w2, self.b2)
        self.steps = [np.full_like(p, STEP_INITIAL) for p in self._params]
        self.prev_grad_sign = [np.zeros_like(p) for p in self._params]

    # ------------------------------------------------------------------

    def forward(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.shape[-1] != self.layer_sizes[0]:
            raise ValueError(
                f"input dimension {x.shape[-1]} != expected {self.layer_sizes[0]}"
            )
        hidden = _sigmoid(x @ self.w1.T + self.b1)
        return _sigmoid(hidden @ self.w2.T + self.b2)

    def loss(self, inputs: np.ndarray, targets: np.ndarray) -> float:
        outputs = self.forward(inputs)
        return float(0.5 * np.sum((outputs - targets) ** 2))

    def gradients(self, inputs: np.ndarray, targets: np.ndarray) -> list[np.ndarray]:
        """Full-batch gradients of the summed squared error."""
        x = np.atleast_2d(np.asarray(inputs, dtype=float))
        t = np.atleast_2d(np.asarray(targets, dtype=float))
        if t.shape[-1] != self.layer_sizes[2]:
            raise ValueError(
                f"target dimension {t.shape[-1]} != expected {self.layer_sizes[2]}"
            )
        hidden = _sigmoid(x @ self.w1.T + self.b1)
        out = _sigmoid(hidden @ self.w2.T + self.b2)
        delta_out = (out - t) * out * (1.0 - out)
        delta_hidden = (delta_out @ self.w2) * hidden * (1.0 - hidden)
        return [
            delta_hidden.T @ x,
            delta_hidden.sum(axis=0),
            delta_out.T @ hidden,
            delta_out.sum(axis=0),
        ]

    def train_rprop(
        self, inputs: np.ndarray, targets: np.ndarray, epochs: int
    ) -> list[float]:
        """Train in place for `epochs` full-batch iterations; returns the loss trace."""
        x = np.atleast_2d(np.asarray(inputs, dtype=float))
        t = np.atleast_2d(np.asarray(targets, dtype=float))
        if x.shape[0] == 0:
            raise ValueError("empty training set")
        if x.shape[0] != t.shape[0]:
            raise ValueError("inputs and targets disagree in length")
        trace: list[float] = []
        for _ in range(epochs):
            grads = self.gradients(x, t)
            for param, grad, step, prev in zip(
                self._params, grads, self.steps, self.prev_grad_sign
            ):
                sign = np.sign(grad)
                agreement = sign * prev
                np.multiply(step, STEP_INCREASE, out=step, where=agreement > 0)
                np.multiply(step, STEP_DECREASE, out=step, where=agreement < 0)
                np.clip(step, STEP_MIN, STEP_MAX, out=step)
                param -= sign * step
                prev[:] = sign
            trace.append(self.loss(x, t))
        return trace

    def classify(self, x: np.ndarray) -> tuple[float, ...]:
        """Forward pass converted to percentages (outputs rescaled to sum 1)."""
        out = self.forward(np.asarray(x, dtype=float))
        total = float(out.sum())
        if total <= 0.0:
            raise ValueError("degenerate network output")
        return tuple(float(v) / total for v in out)


def confusion_stats(
    mlp: Mlp, inputs: np.ndarray, labels: Sequence[int], n_classes: int
) -> dict[str, list[float | None]]:
    """Per-class conditional frequencies of predictions given truth and
    truth given predictions; None marks classes never seen on that side."""
    predictions = [int(np.argmax(mlp.forward(x))) for x in np.atleast_2d(inputs)]
    truth_counts = [0] * n_classes
    pred_counts = [0] * n_classes
    agree = [0] * n_classes
    for truth, pred in zip(labels, predictions):
        truth_counts[truth] += 1
        pred_counts[pred] += 1
        if truth == pred:
            agree[truth] += 1
    return {
        "predicted_given_true": [
            agree[c] / truth_counts[c] if truth_counts[c] else None for c in range(n_classes)
        ],
        "true_given_predicted": [
            agree[c] / pred_counts[c] if pred_counts[c] else None for c in range(n_classes)
        ],
    }


# ----------------------------------------------------------------------
# checkpoints

CHECKPOINT_VERSION = 1


def mlp_to_document(mlp: Mlp) -> dict:
    return {
        "version": CHECKPOINT_VERSION,
        "layerSizes": list(mlp.layer_sizes),
        "weights": [p.tolist() for p in mlp._params],
        "rpropState": {
            "steps": [s.tolist() for s in mlp.steps],
            "prevGradSign": [s.tolist() for s in mlp.prev_grad_sign],
        },
        "seed": mlp.seed,
    }


def mlp_from_document(doc: dict) -> Mlp:
    if doc.get("version") != CHECKPOINT_VERSION:
        raise ValueError(f"unsupported checkpoint version {doc.get('version')!r}")
    mlp = Mlp(doc["layerSizes"], seed=doc.get("seed", 0))
    for param, stored in zip(mlp._params, doc["weights"]):
        param[:] = np.asarray(stored, dtype=float)
    for step, stored in zip(mlp.steps, doc["rpropState"]["steps"]):
        step[:] = np.asarray(stored, dtype=float)
    for prev, stored in zip(mlp.prev_grad_sign, doc["rpropState"]["prevGradSign"]):
        prev[:] = np.asarray(stored, dtype=float)
    return mlp


def save_mlp(mlp: Mlp, path: str | Path) -> None:
    Path(path).write_text(json.dumps(mlp_to_document(mlp)))


def load_mlp(path: str | Path) -> Mlp:
    return mlp_from_document(json.loads(Path(path).read_text()))
